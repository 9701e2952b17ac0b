"""Cech cohomology of O(d) on P^1 for the cover U0 = C(u), U1 = C(v), v = 1/u.

Transition convention, fixed everywhere in the package: a fibre coordinate of
O(d) satisfies zeta0 = u**d * zeta1 on the overlap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LaurentPoly

__all__ = [
    "LineBundleP1",
    "H1Class",
    "h0_basis",
    "h1_basis",
    "coboundary_decompose",
    "reduce_to_canonical",
]


@dataclass(frozen=True)
class LineBundleP1:
    degree: int

    @property
    def transition(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.degree)

    @property
    def h0(self) -> int:
        return max(self.degree + 1, 0)

    @property
    def h1(self) -> int:
        return max(-self.degree - 1, 0)

    def __str__(self):
        return f"O({self.degree})"


@dataclass(frozen=True)
class H1Class:
    degree: int
    rep: LaurentPoly

    def __post_init__(self):
        lo, hi = self.degree + 1, -1
        bad = [e for e in self.rep.exponents() if not lo <= e <= hi]
        if bad:
            raise ValueError(f"exponents {bad} outside the band [{lo}, {hi}]")

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def coordinates(self) -> tuple:
        """Coefficients on the basis u^-1, u^-2, ..., u^(d+1)."""
        return tuple(self.rep.coeff(-k) for k in range(1, -self.degree))


def h0_basis(d: int) -> list[LaurentPoly]:
    """Chart-0 parts 1, u, ..., u^d; the chart-1 part is v^d * s0(1/v)."""
    return [LaurentPoly.monomial(k) for k in range(0, d + 1)]


def h1_basis(d: int) -> list[LaurentPoly]:
    return [LaurentPoly.monomial(-k) for k in range(1, -d)]


def coboundary_decompose(c: LaurentPoly, d: int):
    """Split c = canonical + psi0 - u**d * psi1(1/u).

    psi0 collects exponents >= 0, psi1 (returned in the variable v) absorbs
    the exponents <= min(d, -1), and what is left lies in the band [d+1, -1].
    For d >= 0 the two coboundary ranges overlap; nonnegative exponents then
    go to psi0 by convention.
    """
    psi0 = LaurentPoly({e: x for e, x in c.items() if e >= 0}, c.var)
    cut = min(d, -1)
    tail = LaurentPoly({e: x for e, x in c.items() if e <= cut}, c.var)
    canonical = LaurentPoly({e: x for e, x in c.items() if cut < e < 0}, c.var)
    # -u^d * psi1(1/u) = tail  =>  psi1(v) = -(v^d * tail(1/v))
    psi1 = (-tail).shift(-d).reflect("v")
    return psi0, psi1, canonical


def reduce_to_canonical(c: LaurentPoly, d: int) -> H1Class:
    return H1Class(d, coboundary_decompose(c, d)[2])
