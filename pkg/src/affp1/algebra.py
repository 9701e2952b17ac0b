"""Exact algebra: rationals, Laurent polynomials, rational maps, Moebius maps
and row reduction over Q.

Everything here is immutable and exact.  Coefficients of a :class:`LaurentPoly`
may be rationals or :class:`MPoly` values (polynomials in formal parameters such
as ``t1, t2, ...``), so a whole family of cocycles can be handled in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Q",
    "as_rational",
    "format_rational",
    "MPoly",
    "LaurentPoly",
    "RationalMap",
    "MobiusMap",
    "ExactMatrix",
    "laurent_arith",
    "laurent_band",
    "substitute",
    "kernel",
    "rank",
    "poly_divmod",
    "poly_gcd",
    "squarefree_decomposition",
    "laurent_to_json",
    "laurent_from_json",
    "FormatError",
]

Q = Fraction


class FormatError(ValueError):
    """Raised when serialized input does not follow the list-of-pairs format."""


def as_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not a rational: {x!r}") from exc
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def _is_zero(c) -> bool:
    return c == 0


# --------------------------------------------------------------------------
# Multivariate Laurent polynomials over Q (the parameter ring)


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    exps = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted((k, v) for k, v in exps.items() if v != 0))


class MPoly:
    """Sparse multivariate Laurent polynomial with rational coefficients.

    Monomials are keyed by sorted ``(name, exponent)`` tuples, so polynomials in
    different variable sets combine without alignment.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = as_rational(c)
            if c != 0:
                key = tuple(sorted((k, e) for k, e in mono if e != 0))
                clean[key] = clean.get(key, Fraction(0)) + c
                if clean[key] == 0:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def var(cls, name: str) -> MPoly:
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> MPoly:
        return cls({(): c})

    @classmethod
    def monomial(cls, c, **exps: int) -> MPoly:
        return cls({tuple(exps.items()): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def variables(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @staticmethod
    def _lift(other) -> MPoly:
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other)

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        other = self._lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return NotImplemented
        other = self._lift(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            (mono, c), = self._terms.items()
            return MPoly({tuple((n, e * k) for n, e in mono): c ** k})
        out = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        other = self._lift(other)
        if not other.is_monomial():
            raise ValueError("division only by monomials")
        return self * other ** -1

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == MPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def subs(self, mapping: Mapping[str, object]) -> MPoly:
        """Substitute variables by MPoly/rational values (negative exponents
        need monomial images)."""
        out = MPoly()
        for mono, c in self._terms.items():
            term = MPoly.const(c)
            for name, e in mono:
                img = mapping.get(name)
                img = MPoly.var(name) if img is None else self._lift(img)
                term = term * img ** e
            out = out + term
        return out

    def degree_in(self, name: str) -> tuple[int, int]:
        exps = [dict(m).get(name, 0) for m in self._terms]
        if not exps:
            raise ValueError("zero polynomial has no degree")
        return min(exps), max(exps)

    def coefficient_in(self, name: str, k: int) -> MPoly:
        """Coefficient of ``name**k``, as a polynomial in the other variables."""
        out = {}
        for mono, c in self._terms.items():
            d = dict(mono)
            if d.get(name, 0) == k:
                d.pop(name, None)
                out[tuple(d.items())] = c
        return MPoly(out)

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=lambda m: (len(m), m)):
            c = self._terms[mono]
            names = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            if not names:
                parts.append(str(c))
            elif c == 1:
                parts.append(names)
            elif c == -1:
                parts.append("-" + names)
            else:
                parts.append(f"{c}*{names}")
        return " + ".join(parts).replace("+ -", "- ")


# --------------------------------------------------------------------------
# Laurent polynomials in one variable


class LaurentPoly:
    """Finitely supported map exponent -> coefficient in one variable.

    Zero coefficients are never stored, so equality is equality of term maps.
    """

    __slots__ = ("var", "_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, var: str = "u"):
        clean = {}
        for k, c in (terms or {}).items():
            if isinstance(k, bool) or not isinstance(k, int):
                raise TypeError(f"exponent must be int, got {k!r}")
            if not isinstance(c, MPoly):
                c = as_rational(c)
            elif c.is_constant():
                c = c.constant_value()
            if not _is_zero(c):
                clean[k] = c
        self.var = var
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "u") -> LaurentPoly:
        return cls({k: c}, var)

    @classmethod
    def const(cls, c, var: str = "u") -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, var: str = "u", start: int = 0) -> LaurentPoly:
        """Build from a dense list ``coeffs[i]`` for exponent ``start + i``."""
        return cls({start + i: c for i, c in enumerate(coeffs)}, var)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def exponents(self) -> list[int]:
        return list(self._terms)

    def coeff(self, k: int):
        return self._terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_polynomial(self) -> bool:
        return all(k >= 0 for k in self._terms)

    def is_unit(self) -> bool:
        """A single nonzero term c*u^k (units of the Laurent ring)."""
        return len(self._terms) == 1

    def is_rational(self) -> bool:
        return all(not isinstance(c, MPoly) for c in self._terms.values())

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial")
        return next(iter(self._terms))

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial")
        return next(reversed(self._terms))

    def degree(self) -> int:
        return self.max_exp() if self._terms else -1

    def leading(self):
        return self._terms[self.max_exp()]

    def _check(self, other: LaurentPoly):
        if self.var != other.var and self._terms and other._terms:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def _lift(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly.const(other, self.var)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(out, self.var if self._terms else other.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return LaurentPoly(out, self.var if self._terms else other.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("negative powers only for units")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: Fraction(1) / c ** -k if not isinstance(c, MPoly) else c ** k}, self.var)
        out = LaurentPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by var**k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def scale(self, c) -> LaurentPoly:
        return LaurentPoly({e: c * v for e, v in self._terms.items()}, self.var)

    def band(self, lo: int, hi: int) -> LaurentPoly:
        return laurent_band(self, lo, hi)

    def reflect(self, var: str | None = None) -> LaurentPoly:
        """p(1/x) written in the variable ``var`` (exponents negated)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()}, var or self.var)

    def rename(self, var: str) -> LaurentPoly:
        return LaurentPoly(self._terms, var)

    def derivative(self) -> LaurentPoly:
        return LaurentPoly({e - 1: e * c for e, c in self._terms.items() if e}, self.var)

    def map_coeffs(self, f) -> LaurentPoly:
        return LaurentPoly({e: f(c) for e, c in self._terms.items()}, self.var)

    def __call__(self, x):
        """Evaluate at a rational (or MPoly) point."""
        total = Fraction(0)
        for e, c in self._terms.items():
            total = total + c * (x ** e if e >= 0 else Fraction(1) / x ** -e)
        return total

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            if not self._terms and not other._terms:
                return True
            return self.var == other.var and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == LaurentPoly.const(other, self.var)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, tuple(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self}, var={self.var!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            cs = f"({c})" if isinstance(c, MPoly) and len(c.terms) > 1 else str(c)
            if e == 0:
                parts.append(cs)
                continue
            x = self.var if e == 1 else f"{self.var}^{e}"
            if c == 1:
                parts.append(x)
            elif c == -1:
                parts.append("-" + x)
            else:
                parts.append(f"{cs}*{x}")
        return " + ".join(parts).replace("+ -", "- ")


def laurent_arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    if p.var != q.var:
        raise ValueError(f"variable mismatch: {p.var!r} vs {q.var!r}")
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


def laurent_band(p: LaurentPoly, lo: int, hi: int) -> LaurentPoly:
    """Keep exactly the terms with exponent in [lo, hi]."""
    if lo > hi:
        raise ValueError("band requires lo <= hi")
    return LaurentPoly({e: c for e, c in p.items() if lo <= e <= hi}, p.var)


# --------------------------------------------------------------------------
# univariate polynomial arithmetic over Q (nonnegative exponents)


def _require_poly(p: LaurentPoly):
    if not p.is_polynomial() or not p.is_rational():
        raise ValueError(f"expected a rational polynomial, got {p}")


def poly_divmod(p: LaurentPoly, d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    _require_poly(p)
    _require_poly(d)
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    quot: dict = {}
    rem = p
    dd, lc = d.degree(), d.leading()
    while not rem.is_zero() and rem.degree() >= dd:
        k = rem.degree() - dd
        c = rem.leading() / lc
        quot[k] = c
        rem = rem - d.shift(k).scale(c)
    return LaurentPoly(quot, p.var), rem


def _monic(p: LaurentPoly) -> LaurentPoly:
    return p.scale(Fraction(1) / p.leading()) if p else p


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Monic gcd (Euclid); gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return _monic(a)


def squarefree_decomposition(p: LaurentPoly) -> list[tuple[LaurentPoly, int]]:
    """Yun's algorithm: p = lc * prod f_i**i with f_i squarefree and coprime.

    Returns the nonconstant factors as ``(f_i, i)``.  Over Q this yields root
    multiplicities over C without extracting any roots.
    """
    _require_poly(p)
    if p.degree() <= 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = poly_divmod(p, a)[0]
    c = poly_divmod(dp, a)[0]
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        a = poly_gcd(b, d)
        if a.degree() > 0:
            out.append((a, i))
        b = poly_divmod(b, a)[0]
        c = poly_divmod(d, a)[0]
        d = c - b.derivative()
        i += 1
    return out


# --------------------------------------------------------------------------
# rational maps and Moebius transformations


@dataclass(frozen=True, eq=False)
class RationalMap:
    """num/den in one variable, stored in canonical form.

    Canonical form: polynomial numerator and denominator (Laurent shifts are
    cleared), coprime, denominator monic.
    """

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("rational map with zero denominator")
        if num.var != den.var and num and den:
            raise ValueError("variable mismatch")
        var = den.var
        shift = -min(num.min_exp() if num else 0, den.min_exp(), 0)
        num, den = num.shift(shift).rename(var), den.shift(shift)
        if num.is_zero():
            num, den = LaurentPoly({}, var), LaurentPoly.const(1, var)
        else:
            g = poly_gcd(num, den)
            num, den = poly_divmod(num, g)[0], poly_divmod(den, g)[0]
            lc = den.leading()
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RationalMap:
        return cls(p, LaurentPoly.const(1, p.var))

    @property
    def var(self) -> str:
        return self.den.var

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalMap.from_laurent(other)
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalMap.from_laurent(other)
        return RationalMap(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalMap.from_laurent(other)
        return RationalMap(self.num * other.num, self.den * other.den)

    def __neg__(self):
        return RationalMap(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RationalMap) else -RationalMap.from_laurent(other))

    def inverse(self) -> RationalMap:
        return RationalMap(self.den, self.num)

    def compose(self, m: MobiusMap) -> RationalMap:
        """self o m."""
        return substitute(self.num, m) * substitute(self.den, m).inverse()

    def as_laurent(self) -> LaurentPoly | None:
        """The map as a Laurent polynomial when the denominator is a monomial."""
        if self.den.is_unit():
            (e, c), = self.den.items()
            return self.num.shift(-e).scale(Fraction(1) / c)
        return None

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


@dataclass(frozen=True, eq=False)
class MobiusMap:
    """u -> (alpha*u + beta)/(gamma*u + delta) with nonzero determinant.

    Equality is projective: (2, 0, 0, 2) is the identity.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.det == 0:
            raise ValueError("Moebius map with zero determinant")

    @classmethod
    def identity(cls) -> MobiusMap:
        return cls(1, 0, 0, 1)

    @classmethod
    def scaling(cls, lam) -> MobiusMap:
        return cls(lam, 0, 0, 1)

    @classmethod
    def inversion(cls, lam=1) -> MobiusMap:
        """u -> lam/u."""
        return cls(0, lam, 1, 0)

    @property
    def det(self) -> Fraction:
        return self.alpha * self.delta - self.beta * self.gamma

    def matrix(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def compose(self, other: MobiusMap) -> MobiusMap:
        """self o other (apply ``other`` first)."""
        a, b, c, d = self.matrix()
        e, f, g, h = other.matrix()
        return MobiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    __matmul__ = compose

    def inverse(self) -> MobiusMap:
        a, b, c, d = self.matrix()
        return MobiusMap(d, -b, -c, a)

    def __call__(self, x):
        """Apply to a rational point; ``None`` stands for infinity."""
        a, b, c, d = self.matrix()
        if x is None:
            return None if c == 0 else a / c
        den = c * x + d
        if den == 0:
            return None
        return (a * x + b) / den

    def fixed_points(self) -> list:
        """Rational fixed points on P^1 (``None`` = infinity)."""
        a, b, c, d = self.matrix()
        # c u^2 + (d - a) u - b = 0
        if c == 0:
            pts = [None]
            if d != a:
                pts.append(b / (d - a))
            elif b == 0:
                raise ValueError("identity fixes every point")
            return pts
        disc = (d - a) ** 2 + 4 * b * c
        if disc < 0:
            return []
        r = _rational_sqrt(disc)
        if r is None:
            return []
        roots = {(a - d + r) / (2 * c), (a - d - r) / (2 * c)}
        return sorted(roots)

    def as_rational_map(self, var: str = "u") -> RationalMap:
        a, b, c, d = self.matrix()
        return RationalMap(LaurentPoly({1: a, 0: b}, var), LaurentPoly({1: c, 0: d}, var))

    def __eq__(self, other):
        if not isinstance(other, MobiusMap):
            return NotImplemented
        m1, m2 = self.matrix(), other.matrix()
        return all(m1[i] * m2[j] == m1[j] * m2[i] for i in range(4) for j in range(4))

    def __hash__(self):
        m = self.matrix()
        pivot = next(x for x in m if x != 0)
        return hash(tuple(x / pivot for x in m))


def _rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def substitute(p: LaurentPoly, m: MobiusMap) -> RationalMap:
    """p o m as a reduced rational map in p's variable."""
    if not p.is_rational():
        raise ValueError("substitute needs rational coefficients")
    var = p.var
    if p.is_zero():
        return RationalMap(LaurentPoly({}, var), LaurentPoly.const(1, var))
    a, b, c, d = m.matrix()
    top = LaurentPoly({1: a, 0: b}, var)
    bot = LaurentPoly({1: c, 0: d}, var)
    hi = max(p.max_exp(), 0)
    lo = max(-p.min_exp(), 0)
    num = LaurentPoly({}, var)
    for k, coeff in p.items():
        num = num + (top ** (k + lo) * bot ** (hi - k)).scale(coeff)
    return RationalMap(num, top ** lo * bot ** hi)


# --------------------------------------------------------------------------
# exact matrices


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    rows: tuple
    ncols: int

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(as_rational(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> ExactMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> ExactMatrix:
        return cls([[col[i] for col in cols] for i in range(nrows)], len(cols))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def apply(self, vec: Sequence) -> tuple:
        return tuple(sum((a * as_rational(x) for a, x in zip(r, vec)), Fraction(0)) for r in self.rows)

    def rref(self) -> tuple[tuple, tuple]:
        """Reduced row echelon form with the leftmost-pivot rule.

        Returns ``(rows, pivot_columns)``; only nonzero rows are kept.
        """
        m = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return tuple(tuple(row) for row in m[:r]), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[tuple]:
        """Null-space basis: one vector per free column, in column order."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for row, p in zip(red, pivots):
                v[p] = -row[f]
            basis.append(tuple(v))
        assert len(pivots) + len(basis) == self.ncols
        return basis

    def transpose(self) -> ExactMatrix:
        return ExactMatrix([[r[j] for r in self.rows] for j in range(self.ncols)], self.nrows)


def kernel(m: ExactMatrix) -> list[tuple]:
    return m.kernel()


def rank(m: ExactMatrix) -> int:
    return m.rank()


# --------------------------------------------------------------------------
# serialization: [[exponent, "p/q"], ...] with strictly increasing exponents


def laurent_to_json(p: LaurentPoly) -> list:
    if not p.is_rational():
        raise ValueError("only rational Laurent polynomials serialize")
    return [[e, format_rational(c)] for e, c in p.items()]


def laurent_from_json(data, var: str = "u", *, field: str = "laurent") -> LaurentPoly:
    if not isinstance(data, list):
        raise FormatError(f"{field}: expected a list of [exponent, coefficient] pairs")
    terms = {}
    last = None
    for i, pair in enumerate(data):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise FormatError(f"{field}[{i}]: expected [exponent, coefficient]")
        e, c = pair
        if isinstance(e, bool) or not isinstance(e, int):
            raise FormatError(f"{field}[{i}]: exponent must be an integer, got {e!r}")
        if last is not None and e <= last:
            raise FormatError(f"{field}[{i}]: exponents must be strictly increasing")
        if not isinstance(c, str):
            raise FormatError(f"{field}[{i}]: coefficient must be a string 'p/q'")
        try:
            terms[e] = as_rational(c)
        except FormatError as exc:
            raise FormatError(f"{field}[{i}]: {exc}") from exc
        last = e
    return LaurentPoly(terms, var)
