"""Exact Cech computations for affine C-bundles over P^1, Hirzebruch surfaces
F_n, tangent sheaves of pairs (F_n, L) and their normal-crossing doubles."""

from .algebra import ExactMatrix, LaurentPoly, MobiusMap, MPoly, RationalMap
from .affine import (
    AffineBundleCocycle,
    CanonicalAffineBundle,
    CoordinateChange,
    apply_change,
    is_isomorphic,
    normalize,
)
from .cech import H1Class, LineBundleP1
from .double import GluedDouble, glued_ledger, moduli_dimension_report
from .hirzebruch import (
    CohomologyLedger,
    DivisorClass,
    GlobalVectorField,
    SectionCurve,
    global_vector_fields,
    tangent_pair_ledger,
)

__version__ = "0.1.0"

__all__ = [
    "AffineBundleCocycle",
    "CanonicalAffineBundle",
    "CohomologyLedger",
    "CoordinateChange",
    "DivisorClass",
    "ExactMatrix",
    "GlobalVectorField",
    "GluedDouble",
    "H1Class",
    "LaurentPoly",
    "LineBundleP1",
    "MPoly",
    "MobiusMap",
    "RationalMap",
    "SectionCurve",
    "apply_change",
    "global_vector_fields",
    "glued_ledger",
    "is_isomorphic",
    "moduli_dimension_report",
    "normalize",
    "tangent_pair_ledger",
]
