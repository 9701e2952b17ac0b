"""Affine C-bundles over P^1: classification, normalization and coordinate
calculus on the standard two-chart cover.

A cocycle (a, b) encodes the transition zeta0 = a(u) * zeta1 + b(u) on U01.
Degree -n bundles with n >= 2 normalize to the canonical family

    zeta0 = u**-n * zeta1 + sum_{l=1}^{n-1} t_l * u**-l,

with t in H^1(P^1, O(-n)) = Q^(n-1) read off the band [-(n-1), -1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    LaurentPoly,
    MobiusMap,
    MPoly,
    as_rational,
    poly_divmod,
)
from .cech import LineBundleP1, reduce_to_canonical

__all__ = [
    "AffineBundleCocycle",
    "CanonicalAffineBundle",
    "CoordinateChange",
    "TorusWeight",
    "AxisWitness",
    "UnsupportedInput",
    "degree",
    "normalize",
    "apply_change",
    "is_isomorphic",
    "mobius_pullback",
    "axis_compactification_type",
    "torus_weights",
    "torus_relation_check",
    "complement_to_affine_bundle",
]


class UnsupportedInput(ValueError):
    """The operation is only implemented on a documented subset of inputs."""


@dataclass(frozen=True)
class AffineBundleCocycle:
    a: LaurentPoly
    b: LaurentPoly

    def __post_init__(self):
        if not self.a.is_unit():
            raise ValueError(f"a must be a single term c*u^k, got {self.a}")
        if self.b.var != self.a.var and self.b:
            raise ValueError("a and b must share the base variable")

    @property
    def degree(self) -> int:
        return self.a.min_exp()

    @property
    def unit_coefficient(self):
        return self.a.coeff(self.degree)

    def __str__(self):
        return f"zeta0 = ({self.a})*zeta1 + ({self.b})"


@dataclass(frozen=True)
class CanonicalAffineBundle:
    n: int
    t: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("canonical family needs n >= 2")
        t = tuple(c if isinstance(c, MPoly) and not c.is_constant() else
                  as_rational(c.constant_value() if isinstance(c, MPoly) else c)
                  for c in self.t)
        if len(t) != self.n - 1:
            raise ValueError(f"t must have n-1 = {self.n - 1} entries")
        object.__setattr__(self, "t", t)

    @classmethod
    def generic(cls, n: int, prefix: str = "t") -> CanonicalAffineBundle:
        """The whole family over Q^(n-1) with formal parameters t1..t_{n-1}."""
        return cls(n, tuple(MPoly.var(f"{prefix}{l}") for l in range(1, n)))

    @classmethod
    def axis(cls, n: int, l: int, value=1) -> CanonicalAffineBundle:
        return cls(n, tuple(value if k == l else 0 for k in range(1, n)))

    @property
    def degree(self) -> int:
        return -self.n

    def is_line_bundle(self) -> bool:
        return all(c == 0 for c in self.t)

    def cocycle(self) -> AffineBundleCocycle:
        b = LaurentPoly({-l: c for l, c in enumerate(self.t, start=1)})
        return AffineBundleCocycle(LaurentPoly.monomial(-self.n), b)

    def __str__(self):
        return f"A(n={self.n}, t=({', '.join(map(str, self.t))}))"


@dataclass(frozen=True)
class CoordinateChange:
    """Fibre coordinate change zeta_i -> phi_i * zeta_i + psi_i.

    phi_i must be units on their charts; for polynomial data on C these are the
    nonzero constants.  psi0 is a polynomial in u, psi1 a polynomial in v.
    """

    phi0: object = 1
    psi0: LaurentPoly = LaurentPoly()
    phi1: object = 1
    psi1: LaurentPoly = LaurentPoly({}, "v")

    def __post_init__(self):
        for i, (phi, psi) in enumerate(((self.phi0, self.psi0), (self.phi1, self.psi1))):
            c = _constant_unit(phi)
            if c is None:
                raise ValueError(f"phi{i} is not a unit on U{i}: {phi}")
            object.__setattr__(self, f"phi{i}", c)
            if not psi.is_polynomial():
                raise ValueError(f"psi{i} is not holomorphic on U{i}: {psi}")


def _constant_unit(phi):
    if isinstance(phi, LaurentPoly):
        if phi.is_zero() or phi.exponents() != [0]:
            return None
        phi = phi.coeff(0)
    if isinstance(phi, MPoly):
        return phi if not phi.is_zero() else None
    phi = as_rational(phi)
    return phi if phi != 0 else None


@dataclass(frozen=True)
class TorusWeight:
    s1: int
    s2: int

    def __iter__(self):
        return iter((self.s1, self.s2))


def degree(c: AffineBundleCocycle) -> int:
    return c.degree


def normalize(c: AffineBundleCocycle):
    """Canonical form of a cocycle.

    Returns a :class:`CanonicalAffineBundle` for degree <= -2 and the unique
    :class:`LineBundleP1` otherwise (H^1 vanishes there, so b is absorbed).
    """
    d = c.degree
    if d > -2:
        return LineBundleP1(d)
    # phi0 = 1, phi1 = coefficient of a rescales a to u^d and leaves b alone
    unit = c.unit_coefficient
    c = apply_change(c, CoordinateChange(phi0=1, phi1=unit))
    cls = reduce_to_canonical(c.b, d)
    return CanonicalAffineBundle(-d, cls.coordinates())


def apply_change(c: AffineBundleCocycle, ch: CoordinateChange) -> AffineBundleCocycle:
    """New cocycle after zeta_i~ = phi_i zeta_i + psi_i:

    a~ = (phi0/phi1) a,   b~ = phi0 b + psi0 - (phi0/phi1) psi1 a.
    """
    var = c.a.var
    ratio = ch.phi0 * (1 / ch.phi1) if not isinstance(ch.phi1, MPoly) else None
    if ratio is None:
        raise ValueError("phi1 must be a rational constant")
    a_new = c.a.scale(ratio)
    psi1_u = ch.psi1.reflect(var)
    b_new = c.b.scale(ch.phi0) + ch.psi0.rename(var) - (psi1_u * c.a).scale(ratio)
    return AffineBundleCocycle(a_new, b_new)


def _proportional(x: Sequence, y: Sequence) -> bool:
    if len(x) != len(y):
        return False
    xz = all(c == 0 for c in x)
    yz = all(c == 0 for c in y)
    if xz or yz:
        return xz and yz
    return all(x[i] * y[j] - x[j] * y[i] == 0 for i in range(len(x)) for j in range(i + 1, len(x)))


def is_isomorphic(A: CanonicalAffineBundle, B: CanonicalAffineBundle) -> bool:
    """Equality in H^1(O(-n))/C*, i.e. isomorphism covering the identity."""
    return A.n == B.n and _proportional(A.t, B.t)


def mobius_pullback(A: CanonicalAffineBundle, m: MobiusMap) -> CanonicalAffineBundle:
    """Pull A back along a base automorphism preserving {0, infinity}.

    Only u -> lam*u and u -> lam/u keep the standard charts; anything else
    raises :class:`UnsupportedInput`.
    """
    al, be, ga, de = m.matrix()
    c = A.cocycle()
    k = c.degree
    unit = c.unit_coefficient
    if be == 0 and ga == 0:
        lam = al / de
        a_new = c.a.scale(lam ** k)
        b_new = LaurentPoly({e: x * lam ** e for e, x in c.b.items()})
    elif al == 0 and de == 0:
        lam = be / ga
        # the chart roles swap: new zeta0 = old zeta1 at w = lam/u
        inv = 1 / (unit * lam ** k)
        a_new = LaurentPoly.monomial(k, inv)
        b_w = LaurentPoly({-e: x * lam ** e for e, x in c.b.items()})
        b_new = (-b_w).shift(k).scale(inv)
    else:
        raise UnsupportedInput(
            "pullback along a Moebius map moving 0 or infinity off {0, infinity} "
            "leaves the standard two-chart configuration")
    out = normalize(AffineBundleCocycle(a_new, b_new))
    assert isinstance(out, CanonicalAffineBundle) and out.n == A.n
    return out


@dataclass(frozen=True)
class AxisWitness:
    """Coordinate changes on the t_l-axis as (numerator, denominator) pairs in
    the variables u, v, z0, z1 and t (z_i the fibre coordinates)."""

    zeta0_new: tuple
    zeta1_new: tuple
    exponent: int  # zeta0_new = v**exponent * zeta1_new


def axis_compactification_type(n: int, l: int):
    """Compactified fibre type on the t_l-axis: F_|n-2l|.

    Builds z0~ = (u^l z0 - t)/(t z0) and z1~ = z1/(t v^(n-l) z1 + t^2) and checks
    z0~ = v^(n-2l) z1~ identically after imposing z0 = u^-n z1 + t u^-l.
    """
    if n < 2 or not 1 <= l <= n - 1:
        raise ValueError("need n >= 2 and 1 <= l <= n-1")
    u, v = MPoly.var("u"), MPoly.var("v")
    z0, z1, t = MPoly.var("z0"), MPoly.var("z1"), MPoly.var("t")
    w0 = (u ** l * z0 - t, t * z0)
    w1 = (z1, t * v ** (n - l) * z1 + t ** 2)
    e = n - 2 * l
    # cross-multiplied identity: num0 * den1 = v^e * num1 * den0
    lhs = w0[0] * w1[1]
    rhs = v ** e * w1[0] * w0[1]
    relation = {"z0": u ** -n * z1 + t * u ** -l, "v": u ** -1}
    diff = (lhs - rhs).subs(relation)
    dens = [w0[1].subs(relation), w1[1].subs(relation)]
    if not diff.is_zero() or any(d.is_zero() for d in dens):
        raise AssertionError(f"axis identity fails for n={n}, l={l}")
    return abs(e), AxisWitness(w0, w1, e)


def torus_relation_check(n: int) -> bool:
    """(u, z0, z1, t_l) -> (s1 u, s2 z0, s1^n s2 z1, s1^l s2 t_l) maps the
    family relation R = z0 - u^-n z1 - sum t_l u^-l to s2 * R."""
    u, z0, z1 = MPoly.var("u"), MPoly.var("z0"), MPoly.var("z1")
    s1, s2 = MPoly.var("s1"), MPoly.var("s2")
    ts = [MPoly.var(f"t{l}") for l in range(1, n)]
    rel = z0 - u ** -n * z1
    for l, tl in enumerate(ts, start=1):
        rel = rel - tl * u ** -l
    images = {"u": s1 * u, "z0": s2 * z0, "z1": s1 ** n * s2 * z1}
    for l in range(1, n):
        images[f"t{l}"] = s1 ** l * s2 * ts[l - 1]
    return (rel.subs(images) - s2 * rel).is_zero()


def torus_weights(n: int) -> list[TorusWeight]:
    if n < 2:
        raise ValueError("need n >= 2")
    if not torus_relation_check(n):
        raise AssertionError(f"torus action does not preserve the family for n={n}")
    return [TorusWeight(l, 1) for l in range(1, n)]


def _series_inverse(p: LaurentPoly, order: int) -> LaurentPoly:
    """A with A*p = 1 mod v**order (p(0) != 0)."""
    p0 = p.coeff(0)
    coeffs = []
    for k in range(order):
        acc = Fraction(int(k == 0))
        for j in range(k):
            acc -= coeffs[j] * p.coeff(k - j)
        coeffs.append(acc / p0)
    return LaurentPoly.from_coeffs(coeffs, p.var)


def complement_to_affine_bundle(n: int, L) -> AffineBundleCocycle:
    """Transition data of F_n minus a section L, on the standard cover.

    Supported: L = Gamma_infinity, or L: zeta = q(u)/c with c a nonzero
    constant and deg q = l, i.e. L meets Gamma_infinity only over u = infinity
    and Gamma_0 only over finite u.

    Chart 0 uses zeta~ = 1/(zeta - q/c).  On chart 1 the section is
    eta = P(v)/v^N with N = n+l and P(0) != 0; a Bezout pair A*P + B*v^N = 1
    gives the fibre coordinate eta~ = -(A eta + B)/(v^N eta - P), holomorphic
    on all of C(v), and then zeta~ = -u^-(n+2l) eta~ - u^-l A(1/u).
    """
    if L.n != n:
        raise ValueError(f"section lives on F_{L.n}, not F_{n}")
    s, q, l = L.s, L.q, L.l
    if s.is_zero():
        return AffineBundleCocycle(LaurentPoly.monomial(-n), LaurentPoly())
    if s.degree() != 0 or q.degree() != l:
        raise UnsupportedInput(
            "complement_to_affine_bundle needs s constant and deg q = l "
            "(section meeting Gamma_inf only over u = inf and Gamma_0 only over finite u)")
    c = s.coeff(0)
    N = n + l
    P = q.reflect("v").shift(l).scale(1 / c)  # v^l q(1/v) / c
    A = _series_inverse(P, N)
    assert poly_divmod(A * P - 1, LaurentPoly.monomial(N, 1, "v"))[1].is_zero()
    a = LaurentPoly.monomial(-(n + 2 * l), -1)
    b = -(A.reflect("u").shift(-l))
    return AffineBundleCocycle(a, b)
