"""Normal-crossing doubles F_n u_l F_n-bar: two copies of the canonical pair
(F_n, L) glued along L by u -> -a/u.

Only the holomorphic shadow of the anti-holomorphic gluing enters: the second
component carries the same rational basis of tangent fields, and its fields
are compared with the first component's after pushing forward by the Moebius
map.  Complex dimensions do not see conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import ExactMatrix, LaurentPoly, MobiusMap, as_rational
from .citations import cite
from .hirzebruch import (
    CohomologyLedger,
    DivisorClass,
    GlobalVectorField,
    SectionCurve,
    forget_cokernel_h0,
    tangency_polynomial,
    tangent_fields_to_section,
    tangent_pair_ledger,
)

__all__ = [
    "GluedDouble",
    "NotTangent",
    "ModuliQuantity",
    "ModuliReport",
    "restriction_to_L",
    "pushforward_field",
    "difference_map",
    "glued_h0",
    "glued_ledger",
    "gluing_parameter_independence",
    "moduli_dimension_report",
]

THETA_L = (3, 0, 0)  # Theta_{P^1} = O(2)


class NotTangent(ValueError):
    pass


@dataclass(frozen=True)
class GluedDouble:
    n: int
    l: int
    a: Fraction = Fraction(1)

    def __post_init__(self):
        if self.n < 1 or self.l < 0:
            raise ValueError("need n >= 1 and l >= 0")
        a = as_rational(self.a)
        if a <= 0:
            raise ValueError("gluing parameter must be positive")
        object.__setattr__(self, "a", a)

    @property
    def section(self) -> SectionCurve:
        return SectionCurve.canonical(self.n, self.l)

    @property
    def phi(self) -> MobiusMap:
        return MobiusMap(0, -self.a, 1, 0)

    def phi_fixed_points(self) -> list:
        """Rational fixed points of u -> -a/u (none: u^2 = -a)."""
        return self.phi.fixed_points()

    def tau_fixed_point_free(self) -> bool:
        # tau(u) = -a/conj(u) fixes u iff |u|^2 = -a, impossible for a > 0
        return self.a > 0

    def phi_involutive(self) -> bool:
        return self.phi @ self.phi == MobiusMap.identity()


def restriction_to_L(n: int, l: int, theta: GlobalVectorField,
                     L: SectionCurve | None = None) -> LaurentPoly:
    """The induced field on L, as g(u) for g(u) d/du in the coordinate u on L.

    L is a section, so projection to the base is an isomorphism and u is a
    coordinate on L; a tangent field restricts to its base component.
    """
    L = L or SectionCurve.canonical(n, l)
    if (L.n, L.l) != (n, l):
        raise ValueError("section does not match (n, l)")
    if tangency_polynomial(theta, L):
        raise NotTangent(f"{theta} is not tangent to {L}")
    g = theta.g
    if g.degree() > 2:
        raise AssertionError("restriction is not a field on P^1")
    return g


def pushforward_field(g: LaurentPoly, m: MobiusMap) -> LaurentPoly:
    """m_*(g(u) d/du) written as h(w) d/dw with w = m(u); g of degree <= 2.

    With u = (d w - b)/(-c w + a) one gets
    h(w) = sum_k g_k (d w - b)^k (-c w + a)^(2-k) / det.
    """
    if g.degree() > 2 or (g and g.min_exp() < 0):
        raise ValueError("not a field on P^1")
    al, be, ga, de = m.matrix()
    num = LaurentPoly.from_coeffs([-be, de], "w")
    den = LaurentPoly.from_coeffs([al, -ga], "w")
    h = LaurentPoly(var="w")
    for k in range(3):
        c = g.coeff(k)
        if c:
            h = h + (num ** k * den ** (2 - k)).scale(c)
    return h.scale(1 / m.det).rename("u")


def _tangent_basis(n: int, l: int) -> list[GlobalVectorField]:
    return tangent_fields_to_section(n, SectionCurve.canonical(n, l))


def difference_map(d: GluedDouble) -> ExactMatrix:
    """(theta, theta') -> res(theta) - phi_*(res(theta')) into fields on L."""
    basis = _tangent_basis(d.n, d.l)
    cols = []
    for f in basis:
        g = restriction_to_L(d.n, d.l, f, d.section)
        cols.append([g.coeff(k) for k in range(3)])
    for f in basis:
        h = pushforward_field(restriction_to_L(d.n, d.l, f, d.section), d.phi)
        cols.append([-h.coeff(k) for k in range(3)])
    return ExactMatrix.from_columns(cols, 3)


def glued_h0(d: GluedDouble) -> tuple[int, list[tuple]]:
    """dim H^0 of the glued tangent sheaf and a basis of matching pairs
    (coordinates on the two copies of the tangent basis, concatenated)."""
    ker = difference_map(d).kernel()
    return len(ker), ker


@lru_cache(maxsize=None)
def glued_ledger(d: GluedDouble) -> CohomologyLedger:
    pair = tangent_pair_ledger(d.n, d.section)
    h0p, h1p, h2p = pair["Theta_FL"]
    m = difference_map(d)
    r = m.rank()
    k = m.ncols - r
    if k + r != 2 * h0p:
        raise AssertionError("rank-nullity fails on the difference map")
    led = CohomologyLedger(f"Theta of F_{d.n} u_{d.l} F_{d.n}-bar, a = {d.a}")
    led.add("Theta_FL+Theta_FL", (2 * h0p, 2 * h1p, 2 * h2p), "two copies of the pair")
    led.add("Theta_L", THETA_L, "Theta_L = O(2) on L = P^1")
    led.add("Theta_glued", (k, 2 * h1p + (3 - r), 0),
            f"difference map rank {r} of 3, kernel {k}; H^1(Theta_L) = 0 gives h2 = 0")
    led.add_sequence("Theta_glued", "Theta_FL+Theta_FL", "Theta_L")
    led.notes.update({"image_dim": r, "gluing_parameter": str(d.a), "pair": list(pair["Theta_FL"])})
    return led


def gluing_parameter_independence(n: int, l: int, samples: Sequence) -> bool:
    if not samples:
        raise ValueError("samples must be nonempty")
    seen = {glued_ledger(GluedDouble(n, l, a))["Theta_glued"] for a in samples}
    return len(seen) == 1


# --------------------------------------------------------------------------
# moduli bookkeeping


@dataclass(frozen=True)
class ModuliQuantity:
    key: str
    value: object
    status: str  # "computed" or "cited"
    citation: str


@dataclass
class ModuliReport:
    n: int
    quantities: list = field(default_factory=list)
    remark: str = ""

    def __getitem__(self, key: str):
        for q in self.quantities:
            if q.key == key:
                return q.value
        raise KeyError(key)

    def to_dict(self) -> dict:
        return {"n": self.n, "remark": self.remark,
                "quantities": [{"key": q.key, "value": q.value, "status": q.status,
                                "citation": q.citation} for q in self.quantities]}


def moduli_dimension_report(n: int) -> ModuliReport:
    if n < 2:
        raise ValueError("moduli report needs n >= 2")
    rep = ModuliReport(n)
    add = rep.quantities.append
    h1_glued = glued_ledger(GluedDouble(n, 0))["Theta_glued"][1]
    forget = forget_cokernel_h0(n, DivisorClass.section(n, 0))
    add(ModuliQuantity("h1_glued_l0", h1_glued, "computed", "derived"))
    add(ModuliQuantity("forget_cokernel_h0", forget, "computed", "derived"))
    if n == 2:
        add(ModuliQuantity("forget_kernel_dim", forget, "computed", cite("remark_n2")))
        rep.remark = (f"n = 2: the cokernel sheaf is trivial and the forgetful map "
                      f"has a {forget}-dimensional kernel")
        return rep
    h1_z = 4 * (n - 2)
    add(ModuliQuantity("moduli_dim", h1_glued, "cited", cite("moduli_identification")))
    add(ModuliQuantity("h1_theta_Z", h1_z, "cited", cite("h1_theta_Z")))
    add(ModuliQuantity("index", 12 - 4 * n, "cited", cite("index")))
    add(ModuliQuantity("h1_theta_Z_minus_D", 1, "cited", cite("h1_theta_Z_minus_D")))
    add(ModuliQuantity("forget_injective", forget == 0, "computed", cite("forget_injective")))
    add(ModuliQuantity("forget_surjective", forget == 0 and h1_glued == h1_z, "computed",
                       cite("forget_surjective_n3")))
    add(ModuliQuantity("kahler_codimension", h1_z - h1_glued, "computed", "derived"))
    return rep
