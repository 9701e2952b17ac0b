"""Hirzebruch surfaces F_n: divisor classes, line-bundle cohomology, global
vector fields, and tangent sheaves of pairs (F_n, L) for sections L.

Charts: (u, zeta) over U0 with zeta the fibre coordinate of O(-n) (so
zeta = 0 is Gamma_0 and zeta = inf is Gamma_inf), and (v, eta) = (1/u, u^n zeta)
over U1.  A section L in |Gamma_0 + (n+l)f| is the zero set of s(u)*zeta - q(u)
with deg q <= l and deg s <= n+l; q counts the points of L on Gamma_0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .algebra import (
    ExactMatrix,
    LaurentPoly,
    _rational_sqrt,
    poly_gcd,
    squarefree_decomposition,
)

__all__ = [
    "DivisorClass",
    "SectionCurve",
    "GlobalVectorField",
    "LedgerEntry",
    "CohomologyLedger",
    "H1Theta",
    "BaseProjection",
    "TruncationError",
    "intersect",
    "anticanonical",
    "h_line_bundle",
    "h0_by_monomials",
    "global_vector_fields",
    "truncation_dimensions",
    "tangent_coordinates",
    "aut_identification",
    "forget_class",
    "h1_theta",
    "tangency_polynomial",
    "normal_restriction_map",
    "tangent_fields_to_section",
    "tangent_pair_ledger",
    "section_tangency_profile",
    "aut_pair_base_projection",
    "forget_cokernel_h0",
    "printed_field_comparison",
    "subspace_equal",
]


class TruncationError(RuntimeError):
    """The gluing kernel changed dimension when the degree bound was raised."""


# --------------------------------------------------------------------------
# divisors


@dataclass(frozen=True)
class DivisorClass:
    """a*Gamma_0 + b*f on F_n."""

    a: int
    b: int
    n: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        _same_ambient(self, other)
        return DivisorClass(self.a + other.a, self.b + other.b, self.n)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        _same_ambient(self, other)
        return DivisorClass(self.a - other.a, self.b - other.b, self.n)

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * self.a, k * self.b, self.n)

    def __neg__(self):
        return DivisorClass(-self.a, -self.b, self.n)

    @classmethod
    def gamma0(cls, n: int) -> DivisorClass:
        return cls(1, 0, n)

    @classmethod
    def fiber(cls, n: int) -> DivisorClass:
        return cls(0, 1, n)

    @classmethod
    def section(cls, n: int, l: int) -> DivisorClass:
        """The class Gamma_0 + (n+l) f of a section with self-intersection n+2l."""
        return cls(1, n + l, n)

    def self_intersection(self) -> int:
        return intersect(self, self)

    def __str__(self):
        return f"{self.a}G0 + {self.b}f"


def _same_ambient(c1: DivisorClass, c2: DivisorClass):
    if c1.n != c2.n:
        raise ValueError(f"ambient mismatch: F_{c1.n} vs F_{c2.n}")


def intersect(c1: DivisorClass, c2: DivisorClass) -> int:
    _same_ambient(c1, c2)
    return -c1.n * c1.a * c2.a + c1.a * c2.b + c1.b * c2.a


def anticanonical(n: int) -> DivisorClass:
    return DivisorClass(2, n + 2, n)


def h_line_bundle(n: int, c: DivisorClass) -> tuple[int, int, int]:
    """(h0, h1, h2) of O(a G0 + b f) for a >= 0 via pi_* = sum_{k<=a} O(b - k n)."""
    if c.n != n:
        raise ValueError(f"class lives on F_{c.n}, not F_{n}")
    if c.a < 0:
        raise ValueError("classes with negative Gamma_0 coefficient are not supported")
    degs = [c.b - k * n for k in range(c.a + 1)]
    return (sum(max(d + 1, 0) for d in degs), sum(max(-d - 1, 0) for d in degs), 0)


def h0_by_monomials(n: int, c: DivisorClass) -> int:
    """Count torus monomials u^i zeta^j with div + D >= 0 (toric lattice points)."""
    count = 0
    for j in range(-c.a, 1):
        # f0: i + b >= 0 ; f_inf: j n - i >= 0
        count += max(j * n + c.b + 1, 0)
    return count


# --------------------------------------------------------------------------
# sections


@dataclass(frozen=True)
class SectionCurve:
    n: int
    l: int
    s: LaurentPoly
    q: LaurentPoly

    def __post_init__(self):
        n, l, s, q = self.n, self.l, self.s, self.q
        if n < 0 or l < 0:
            raise ValueError("need n >= 0 and l >= 0")
        for name, p, bound in (("s", s, n + l), ("q", q, l)):
            if not (p.is_polynomial() and p.is_rational()):
                raise ValueError(f"{name} must be a rational polynomial in u")
            if p.var != "u" and p:
                raise ValueError(f"{name} must be written in u")
            if p.degree() > bound:
                raise ValueError(f"deg {name} = {p.degree()} exceeds {bound}")
        if s.is_zero() and q.is_zero():
            raise ValueError("s and q cannot both vanish")
        if poly_gcd(s, q).degree() > 0:
            raise ValueError("s and q have a common zero")
        if q.degree() < l and s.degree() < n + l:
            raise ValueError("s and q have a common zero at u = infinity")

    @classmethod
    def canonical(cls, n: int, l: int) -> SectionCurve:
        """The C*-invariant section: Gamma_inf for l = 0, zeta = u^l otherwise."""
        if l == 0:
            return cls.gamma_infinity(n)
        return cls(n, l, LaurentPoly.const(1), LaurentPoly.monomial(l))

    @classmethod
    def gamma_infinity(cls, n: int) -> SectionCurve:
        return cls(n, 0, LaurentPoly(), LaurentPoly.const(1))

    @classmethod
    def graph(cls, n: int, l: int, q: LaurentPoly, s: LaurentPoly | None = None) -> SectionCurve:
        return cls(n, l, LaurentPoly.const(1) if s is None else s, q)

    @property
    def divisor_class(self) -> DivisorClass:
        return DivisorClass.section(self.n, self.l)

    def chart1(self) -> tuple[LaurentPoly, LaurentPoly]:
        """(s^, q^) with L = {s^(v) eta = q^(v)} over U1."""
        s_hat = self.s.reflect("v").shift(self.n + self.l)
        q_hat = self.q.reflect("v").shift(self.l)
        return s_hat, q_hat

    def __str__(self):
        if self.s.is_zero():
            return f"zeta = inf on F_{self.n}"
        if self.s == 1:
            return f"zeta = {self.q} on F_{self.n} (l={self.l})"
        return f"zeta = ({self.q})/({self.s}) on F_{self.n} (l={self.l})"


# --------------------------------------------------------------------------
# vector fields


@dataclass(frozen=True)
class GlobalVectorField:
    """g d/du + (A + B zeta + C zeta^2) d/dzeta in chart 0."""

    g: LaurentPoly
    A: LaurentPoly
    B: LaurentPoly
    C: LaurentPoly

    @classmethod
    def zero(cls) -> GlobalVectorField:
        z = LaurentPoly()
        return cls(z, z, z, z)

    def components(self) -> tuple:
        return (self.g, self.A, self.B, self.C)

    def __add__(self, other: GlobalVectorField) -> GlobalVectorField:
        return GlobalVectorField(*(x + y for x, y in zip(self.components(), other.components())))

    def scale(self, c) -> GlobalVectorField:
        return GlobalVectorField(*(x.scale(c) for x in self.components()))

    def chart1(self, n: int) -> tuple:
        """Components (g^, A^, B^, C^) in (v, eta) = (1/u, u^n zeta), as
        Laurent polynomials in v."""
        u_inv = LaurentPoly.monomial(-1)
        gv = -(self.g.shift(-2))
        A = self.A.shift(n)
        B = self.B + (self.g * u_inv).scale(n)
        C = self.C.shift(-n)
        return tuple(p.reflect("v") for p in (gv, A, B, C))

    def is_global(self, n: int) -> bool:
        return all(p.is_polynomial() for p in self.components() + self.chart1(n))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components())

    def __str__(self):
        parts = []
        for p, name in zip(self.components(), ("d/du", "d/dzeta", "zeta d/dzeta", "zeta^2 d/dzeta")):
            if p:
                parts.append(f"({p}) {name}")
        return " + ".join(parts) or "0"


def _combine(fields: Sequence[GlobalVectorField], coeffs: Sequence) -> GlobalVectorField:
    out = GlobalVectorField.zero()
    for f, c in zip(fields, coeffs):
        if c:
            out = out + f.scale(c)
    return out


def _gluing_kernel(n: int, extra: int) -> tuple[GlobalVectorField, ...]:
    bounds = {"A": n + 2 + extra, "B": n + 2 + extra, "C": n + 3 + extra, "g": 4 + extra}
    # B before g so the u^2 d/du generator comes out with g2 = 1
    order = ("A", "B", "C", "g")
    unknowns = [(comp, k) for comp in order for k in range(bounds[comp] + 1)]
    images = []
    for comp, k in unknowns:
        mono = LaurentPoly.monomial(k)
        kw = {c: (mono if c == comp else LaurentPoly()) for c in order}
        images.append(GlobalVectorField(kw["g"], kw["A"], kw["B"], kw["C"]).chart1(n))
    # constraints: every negative v-exponent coefficient of every chart-1 component
    keys = sorted({(i, e) for img in images for i, p in enumerate(img) for e in p.exponents() if e < 0})
    rows = [[img[i].coeff(e) for img in images] for i, e in keys]
    m = ExactMatrix(rows, len(unknowns)) if rows else ExactMatrix.zeros(0, len(unknowns))
    basis = []
    for vec in m.kernel():
        comps = {c: {} for c in order}
        for (comp, k), x in zip(unknowns, vec):
            if x:
                comps[comp][k] = x
        basis.append(GlobalVectorField(*(LaurentPoly(comps[c]) for c in ("g", "A", "B", "C"))))
    return tuple(basis)


@lru_cache(maxsize=None)
def global_vector_fields(n: int) -> tuple[GlobalVectorField, ...]:
    """Basis of H^0(Theta_{F_n}) from the kernel of the gluing map.

    Unknown coefficients of g (deg <= 4), A, B (deg <= n+2), C (deg <= n+3)
    must push to polynomial data on U1; the computation is repeated with all
    bounds raised by 2 and must give the same dimension.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    basis = _gluing_kernel(n, 0)
    wider = _gluing_kernel(n, 2)
    if len(basis) != len(wider):
        raise TruncationError(f"dimension moved from {len(basis)} to {len(wider)} for n={n}")
    for f in basis:
        if not f.is_global(n):
            raise AssertionError(f"basis field {f} is not global")
    return basis


def truncation_dimensions(n: int) -> tuple[int, int]:
    return len(_gluing_kernel(n, 0)), len(_gluing_kernel(n, 2))


def _g_vector(f: GlobalVectorField) -> tuple:
    if f.g.degree() > 2:
        raise AssertionError("global field with deg g > 2")
    return tuple(f.g.coeff(k) for k in range(3))


@dataclass(frozen=True)
class H1Theta:
    h0: int
    h1: int
    projection_rank: int
    h0_relative: int
    h1_relative: int
    connecting_map_zero: bool

    @property
    def evidence(self) -> str:
        return (f"0 -> Theta_rel = O(2G0+nf) -> Theta -> pi^*Theta_P1 -> 0; "
                f"h(Theta_rel) = ({self.h0_relative}, {self.h1_relative}, 0); "
                f"rank(H0(Theta) -> H0(Theta_P1)) = {self.projection_rank}/3; "
                f"connecting map {'zero' if self.connecting_map_zero else 'nonzero'}")


@lru_cache(maxsize=None)
def h1_theta(n: int) -> H1Theta:
    basis = global_vector_fields(n)
    proj = ExactMatrix.from_columns([_g_vector(f) for f in basis], 3)
    r = proj.rank()
    h0_rel, h1_rel, _ = h_line_bundle(n, DivisorClass(2, n, n))
    # H0(Theta) -> H0(O(2f)) -> H1(Theta_rel) -> H1(Theta) -> H1(O(2f)) = 0
    h1 = h1_rel - (3 - r)
    if h0_rel + r != len(basis):
        raise AssertionError("relative sequence does not account for H0(Theta)")
    return H1Theta(len(basis), h1, r, h0_rel, h1_rel, r == 3)


# --------------------------------------------------------------------------
# tangency to sections


def tangency_polynomial(f: GlobalVectorField, L: SectionCurve) -> LaurentPoly:
    """T = g (s' q - s q') + A s^2 + B q s + C q^2.

    On the graph zeta = q/s one has s^2 * theta(s zeta - q) = s * T, so theta
    is tangent to L exactly when T vanishes identically.
    """
    s, q = L.s, L.q
    return (f.g * (s.derivative() * q - s * q.derivative())
            + f.A * s * s + f.B * q * s + f.C * q * q)


def _tangency_polynomial_chart1(f: GlobalVectorField, L: SectionCurve) -> LaurentPoly:
    g, A, B, C = f.chart1(L.n)
    s, q = L.chart1()
    return g * (s.derivative() * q - s * q.derivative()) + A * s * s + B * q * s + C * q * q


def normal_restriction_map(n: int, L: SectionCurve) -> ExactMatrix:
    """Matrix of H^0(Theta_{F_n}) -> H^0(N_L) = polys of degree <= n+2l."""
    if L.n != n:
        raise ValueError(f"section lives on F_{L.n}, not F_{n}")
    basis = global_vector_fields(n)
    top = n + 2 * L.l
    cols = []
    for f in basis:
        T = tangency_polynomial(f, L)
        if T and (T.min_exp() < 0 or T.degree() > top):
            raise AssertionError(f"tangency polynomial of degree {T.degree()} > {top}")
        cols.append([T.coeff(k) for k in range(top + 1)])
    return ExactMatrix.from_columns(cols, top + 1)


@lru_cache(maxsize=None)
def _tangent_coordinates(n: int, L: SectionCurve) -> tuple:
    basis = global_vector_fields(n)
    polys0 = [tangency_polynomial(f, L) for f in basis]
    polys1 = [_tangency_polynomial_chart1(f, L) for f in basis]
    keys0 = sorted({e for p in polys0 for e in p.exponents()})
    keys1 = sorted({e for p in polys1 for e in p.exponents()})
    rows = [[p.coeff(e) for p in polys0] for e in keys0]
    rows += [[p.coeff(e) for p in polys1] for e in keys1]
    if not rows:
        return tuple(ExactMatrix.identity(len(basis)).rows)
    return tuple(ExactMatrix(rows, len(basis)).kernel())


def tangent_fields_to_section(n: int, L: SectionCurve) -> list[GlobalVectorField]:
    """Basis of H^0(Theta_{F_n, L}).

    Imposes the tangency identity in both charts: T over U0 and the analogous
    expression in (v, eta) over U1, which covers the fibre over u = inf.
    """
    if L.n != n:
        raise ValueError(f"section lives on F_{L.n}, not F_{n}")
    basis = global_vector_fields(n)
    return [_combine(basis, c) for c in _tangent_coordinates(n, L)]


def tangent_coordinates(n: int, L: SectionCurve) -> list[tuple]:
    """Tangent fields as coordinate vectors on the global basis."""
    return list(_tangent_coordinates(n, L))


def subspace_equal(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> bool:
    ra = ExactMatrix(a, dim).rank() if a else 0
    rb = ExactMatrix(b, dim).rank() if b else 0
    both = list(a) + list(b)
    rab = ExactMatrix(both, dim).rank() if both else 0
    return ra == rb == rab


def section_tangency_profile(n: int, L: SectionCurve) -> tuple[int, ...]:
    """Intersection multiplicities of L with Gamma_0, largest first.

    Roots of q over C are counted through the square-free decomposition, so
    irrational points need no root extraction; u = inf contributes l - deg q.
    """
    if L.n != n:
        raise ValueError(f"section lives on F_{L.n}, not F_{n}")
    if L.l < 1:
        raise ValueError("tangency profile needs l >= 1")
    mults = []
    for factor, i in squarefree_decomposition(L.q):
        mults += [i] * factor.degree()
    at_inf = L.l - L.q.degree()
    if at_inf > 0:
        mults.append(at_inf)
    assert sum(mults) == L.l
    return tuple(sorted(mults, reverse=True))


# --------------------------------------------------------------------------
# ledgers


@dataclass(frozen=True)
class LedgerEntry:
    name: str
    h: tuple
    evidence: str = ""

    @property
    def chi(self) -> int:
        return self.h[0] - self.h[1] + self.h[2]


@dataclass
class CohomologyLedger:
    """Named (h0, h1, h2) table plus the short exact sequences relating entries."""

    title: str
    entries: dict = field(default_factory=dict)
    sequences: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def add(self, name: str, h: Sequence[int], evidence: str = "") -> LedgerEntry:
        e = LedgerEntry(name, tuple(h), evidence)
        self.entries[name] = e
        return e

    def add_sequence(self, sub: str, mid: str, quo: str, label: str = ""):
        """Record 0 -> sub -> mid -> quo -> 0, all three names already entered."""
        for name in (sub, mid, quo):
            if name not in self.entries:
                raise KeyError(name)
        self.sequences.append((label or f"0 -> {sub} -> {mid} -> {quo} -> 0", sub, mid, quo))

    def __getitem__(self, name: str) -> tuple:
        return self.entries[name].h

    def euler_defects(self) -> list[tuple[str, int]]:
        out = []
        for label, a, b, c in self.sequences:
            d = self.entries[a].chi - self.entries[b].chi + self.entries[c].chi
            out.append((label, d))
        return out

    def euler_consistent(self) -> bool:
        return all(d == 0 for _, d in self.euler_defects())

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "entries": [{"sheaf": e.name, "h0": e.h[0], "h1": e.h[1], "h2": e.h[2],
                         "evidence": e.evidence} for e in self.entries.values()],
            "sequences": [{"label": s[0], "terms": list(s[1:])} for s in self.sequences],
            "notes": dict(self.notes),
        }


def _pair_case(L: SectionCurve, h0: int) -> str:
    if L.l == 0:
        return "l=0"
    if L.l == 1:
        return "l=1"
    return "l>1 (i)" if h0 == 1 else "l>1 (ii)"


@lru_cache(maxsize=None)
def tangent_pair_ledger(n: int, L: SectionCurve) -> CohomologyLedger:
    ht = h1_theta(n)
    m = normal_restriction_map(n, L)
    r = m.rank()
    tangent = tangent_coordinates(n, L)
    h0 = len(tangent)
    if h0 != ht.h0 - r:
        raise AssertionError("tangent subspace disagrees with the restriction kernel")
    N = n + 2 * L.l
    coker = (N + 1) - r
    led = CohomologyLedger(f"Theta_(F_{n}, L), L: {L}")
    led.add("Theta_F", (ht.h0, ht.h1, 0), ht.evidence)
    led.add("N_L", (N + 1, 0, 0), f"N_L = O({N}) on L = P^1")
    led.add("Theta_FL", (h0, ht.h1 + coker, 0),
            f"rank(H0(Theta) -> H0(N_L)) = {r}, coker = {coker}; "
            f"H1(N_L) = 0 and H2(Theta) = 0 give h2 = 0")
    led.add_sequence("Theta_FL", "Theta_F", "N_L")
    case = _pair_case(L, h0)
    led.notes.update({
        "case": case,
        "restriction_rank": r,
        "restriction_cokernel": coker,
        "l": L.l,
    })
    if L.l >= 1:
        prof = section_tangency_profile(n, L)
        led.notes["tangency_profile"] = list(prof)
        if L.l > 1:
            # a single contact point is necessary for case (i), not sufficient
            led.notes["single_contact_point"] = prof == (L.l,)
    return led


@dataclass(frozen=True)
class BaseProjection:
    injective: bool
    dimension: int
    kind: str
    fixed_points: tuple
    image: tuple  # g-polynomials spanning the image

    def describe(self) -> str:
        pts = ", ".join(_fmt_point(p) for p in self.fixed_points)
        if self.kind == "full":
            return "all of the 3-dimensional algebra of fields on P^1"
        if self.kind == "trivial":
            return "trivial"
        return f"{self.dimension}-dimensional {self.kind} algebra fixing {{{pts}}}"


def _fmt_point(p) -> str:
    if p is None:
        return "inf"
    if isinstance(p, str):
        return p
    return f"u={p}"


def _zeros_of_field(g: LaurentPoly) -> list:
    """Zeros on P^1 of g(u) d/du (with multiplicity), g of degree <= 2."""
    pts: list = [None] * (2 - g.degree())
    for factor, mult in squarefree_decomposition(g):
        if factor.degree() == 1:
            pts += [-factor.coeff(0) / factor.coeff(1)] * mult
        else:
            a, b, c = factor.coeff(2), factor.coeff(1), factor.coeff(0)
            r = _rational_sqrt(b * b - 4 * a * c)
            if r is None:
                pts += [f"root of {factor}"] * (2 * mult)
            else:
                pts += [(-b + r) / (2 * a), (-b - r) / (2 * a)] * mult
    return pts


def _common_zeros(polys: Sequence[LaurentPoly]) -> list:
    sets = []
    for g in polys:
        sets.append(set(_zeros_of_field(g)))
    common = set.intersection(*sets) if sets else set()
    return sorted(common, key=lambda p: (p is None, str(p)))


def aut_pair_base_projection(n: int, L: SectionCurve) -> BaseProjection:
    """Image of H^0(Theta_{F_n,L}) in the fields on the base P^1."""
    fields = tangent_fields_to_section(n, L)
    vecs = [_g_vector(f) for f in fields]
    if vecs:
        red, piv = ExactMatrix(vecs, 3).rref()
    else:
        red, piv = (), ()
    dim = len(piv)
    image = tuple(LaurentPoly.from_coeffs(row) for row in red)
    if dim == 0:
        kind, pts = "trivial", []
    elif dim == 3:
        kind, pts = "full", []
    elif dim == 2:
        kind, pts = "affine", _common_zeros(image)
    else:
        zs = _zeros_of_field(image[0])
        kind = "torus" if len(set(zs)) == 2 else "unipotent"
        pts = sorted(set(zs), key=lambda p: (p is None, str(p)))
    return BaseProjection(dim == len(fields), dim, kind, tuple(pts), image)


def aut_identification(n: int, L: SectionCurve, ledger: CohomologyLedger | None = None) -> str:
    """Name of Aut_0(F_n, L) implied by the computed Lie algebra."""
    h0 = (ledger or tangent_pair_ledger(n, L))["Theta_FL"][0]
    if L.l == 0:
        return f"GL(2,C)/Z_{n}" if h0 == 4 else f"unidentified ({h0}-dimensional)"
    proj = aut_pair_base_projection(n, L)
    if proj.kind == "affine":
        return "Af(C)"
    if proj.kind == "torus":
        return "C*"
    if proj.kind == "trivial":
        return "trivial"
    return f"{proj.dimension}-dimensional ({proj.kind})"


def forget_cokernel_h0(m: int, L_class: DivisorClass) -> int:
    """h0 of -K - 2L on F_m for a section class L = G0 + (m+l) f."""
    if L_class.a != 1 or L_class.b < L_class.n:
        raise ValueError("expected a section class G0 + (m+l) f")
    if L_class.n != m:
        raise ValueError(f"class lives on F_{L_class.n}, not F_{m}")
    cls = anticanonical(m) - 2 * L_class
    return h_line_bundle(m, cls)[0]


def forget_class(m: int, L_class: DivisorClass) -> DivisorClass:
    return anticanonical(m) - 2 * L_class


# --------------------------------------------------------------------------
# comparison with the classical printed parametrization


def printed_field_comparison(n: int) -> dict:
    """Check the generators d/du, u d/du, u^2 d/du, u^k zeta^2 d/dzeta (k<=n) and
    u zeta d/dzeta against the computed space, and list the monomials spanning
    the B (zeta d/dzeta) component."""
    basis = global_vector_fields(n)
    dim = len(basis)
    u = LaurentPoly.monomial
    z = LaurentPoly()
    gens = {"d/du": GlobalVectorField(u(0), z, z, z),
            "u d/du": GlobalVectorField(u(1), z, z, z),
            "u^2 d/du": GlobalVectorField(u(2), z, z, z),
            "u zeta d/dzeta": GlobalVectorField(z, z, u(1), z),
            "zeta d/dzeta": GlobalVectorField(z, z, u(0), z)}
    for k in range(n + 1):
        gens[f"u^{k} zeta^2 d/dzeta"] = GlobalVectorField(z, z, z, u(k))
    membership = {name: f.is_global(n) for name, f in gens.items()}
    b_monos = sorted({e for f in basis for e in f.B.exponents()})
    combo = GlobalVectorField(u(2), z, u(1, -n), z)
    return {
        "dimension": dim,
        "B_monomials": b_monos,
        "generator_is_global": membership,
        "non_global_printed_terms": [k for k, ok in membership.items() if not ok],
        "u2_combination_global": combo.is_global(n),
        "flag": ("printed middle term u*zeta d/dzeta is not global on its own; "
                 "zeta d/dzeta is, and u*zeta d/dzeta only enters as "
                 f"u^2 d/du - {n} u zeta d/dzeta"),
    }
