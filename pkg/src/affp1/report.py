"""Verification reports, the (n, l) sweep table, and the published-value suite."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .affine import (
    AffineBundleCocycle,
    axis_compactification_type,
    normalize,
    torus_weights,
)
from .algebra import LaurentPoly, format_rational
from .cech import LineBundleP1, h1_basis
from .citations import DERIVED, cite
from .double import GluedDouble, glued_ledger, gluing_parameter_independence, moduli_dimension_report
from .hirzebruch import (
    DivisorClass,
    SectionCurve,
    aut_identification,
    forget_cokernel_h0,
    global_vector_fields,
    h1_theta,
    h_line_bundle,
    intersect,
    normal_restriction_map,
    tangent_pair_ledger,
    truncation_dimensions,
)

__all__ = [
    "Check",
    "VerificationReport",
    "expected_pair",
    "expected_glued",
    "sweep_rows",
    "render_sweep",
    "verify_paper",
    "N_MAX",
    "GLUING_SAMPLES",
    "load_schema",
]

N_MAX = 10
GLUING_SAMPLES = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(7, 3), Fraction(10))


def _plain(x):
    """JSON-friendly copy: tuples to lists, rationals to 'p/q' strings."""
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, Fraction):
        return format_rational(x)
    return x


@dataclass(frozen=True)
class Check:
    check_id: str
    inputs: dict
    computed: object
    expected: object
    citation: str

    @property
    def status(self) -> str:
        return "pass" if _plain(self.computed) == _plain(self.expected) else "fail"

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "inputs": _plain(self.inputs),
            "computed": _plain(self.computed),
            "expected": _plain(self.expected),
            "citation": self.citation,
            "status": self.status,
        }


@dataclass
class VerificationReport:
    n_range: tuple
    l_range: tuple
    checks: list = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(c.status == "fail" for c in self.checks)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "suite": {
                "n_range": list(self.n_range),
                "l_range": list(self.l_range),
                "total": len(self.checks),
                "failures": self.failures,
                "status": "pass" if self.passed else "fail",
            },
            "records": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        width = max((len(c.check_id) for c in self.checks), default=0)
        for c in self.checks:
            d = c.to_dict()
            lines.append(f"{c.status.upper():4}  {c.check_id:<{width}}  "
                         f"computed={json.dumps(d['computed'])} expected={json.dumps(d['expected'])}  "
                         f"[{c.citation}]")
        lines.append(f"{len(self.checks)} checks, {self.failures} failures "
                     f"(n in {list(self.n_range)}, l in {list(self.l_range)})")
        return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# closed forms used as expectations


def expected_pair(n: int, l: int, single_point: bool = True) -> tuple[tuple, str]:
    """(h0, h1, h2) of Theta_{F_n,L} and the citation key for its case."""
    if l == 0:
        return (4, n - 1, 0), "pair_l0"
    if l == 1:
        return (2, n - 1, 0), "pair_l1"
    if single_point:
        return (1, n + 2 * l - 4, 0), "pair_l_i"
    return (0, n + 2 * l - 5, 0), "pair_l_ii"


def expected_glued(n: int, l: int) -> tuple[tuple, str]:
    if l == 0:
        return (5, 2 * (n - 1), 0), "glued_l0"
    return (1, 2 * (n + 2 * l - 3), 0), "glued_l"


_AUT = {"pair_l0": lambda n: f"GL(2,C)/Z_{n}", "pair_l1": lambda n: "Af(C)",
        "pair_l_i": lambda n: "C*", "pair_l_ii": lambda n: "trivial"}


def spread_section(n: int, l: int) -> SectionCurve:
    """zeta = u(u-1)...(u-l+1): l distinct contact points with Gamma_0."""
    q = LaurentPoly.const(1)
    for r in range(l):
        q = q * LaurentPoly.from_coeffs([-r, 1])
    return SectionCurve.graph(n, l, q)


# --------------------------------------------------------------------------
# sweep


def sweep_row(n: int, l: int) -> dict:
    L = SectionCurve.canonical(n, l)
    led = tangent_pair_ledger(n, L)
    glued = glued_ledger(GluedDouble(n, l))
    pair_h = led["Theta_FL"]
    glued_h = glued["Theta_glued"]
    moduli = glued_ledger(GluedDouble(n, 0))["Theta_glued"][1] if n >= 2 else None
    exp_pair, _ = expected_pair(n, l)
    exp_glued, _ = expected_glued(n, l)
    section_h = h_line_bundle(n, DivisorClass.section(n, l))
    ok = (pair_h == exp_pair and glued_h == exp_glued
          and section_h == (n + 2 * l + 2, 0, 0)
          and (moduli is None or moduli == 2 * (n - 1)))
    return {
        "n": n,
        "l": l,
        "section_class": [1, n + l],
        "section_h": list(section_h),
        "pair_h": list(pair_h),
        "case": led.notes["case"],
        "aut": aut_identification(n, L, led),
        "glued_h": list(glued_h),
        "moduli_dim": moduli,
        "matches_closed_forms": ok,
    }


def _map(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1:
        return [fn(*it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(lambda it: fn(*it), items))


def sweep_rows(n_range: range, l_range: range, jobs: int = 1) -> list[dict]:
    cells = [(n, l) for n in n_range for l in l_range]
    return _map(sweep_row, cells, jobs)


def render_sweep(rows: list[dict], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps({"rows": rows, "count": len(rows)}, indent=2, sort_keys=True) + "\n"
    header = ("n", "l", "h(G0+(n+l)f)", "h(Theta_F,L)", "case", "Aut_0", "h(Theta_double)", "moduli", "ok")
    table = [header]
    for r in rows:
        table.append((str(r["n"]), str(r["l"]), _triple(r["section_h"]), _triple(r["pair_h"]),
                      r["case"], r["aut"], _triple(r["glued_h"]),
                      "-" if r["moduli_dim"] is None else str(r["moduli_dim"]),
                      "yes" if r["matches_closed_forms"] else "NO"))
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table]
    return "\n".join(out) + "\n"


def _triple(h) -> str:
    return "(" + ", ".join(map(str, h)) + ")"


# --------------------------------------------------------------------------
# the published-value suite


def _global_checks() -> list[Check]:
    L = DivisorClass.section(3, 1)
    u = LaurentPoly.monomial
    out = [
        Check("intersect.L.G0", {"n": 3, "L": "G0+4f"}, intersect(L, DivisorClass.gamma0(3)), 1,
              cite("intersection")),
        Check("intersect.L.G0+nf", {"n": 3, "L": "G0+4f"}, intersect(L, DivisorClass(1, 3, 3)), 4,
              cite("intersection")),
        Check("intersect.f.f", {"n": 3}, intersect(DivisorClass.fiber(3), DivisorClass.fiber(3)), 0,
              DERIVED),
        Check("h.G0", {"n": 3}, h_line_bundle(3, DivisorClass.gamma0(3)), (1, 2, 0), cite("gamma0_h")),
        Check("h.G0+5f", {"n": 3}, h_line_bundle(3, DivisorClass(1, 5, 3))[0], 9, cite("section_h0")),
        Check("h.-2f", {"n": 4}, h_line_bundle(4, DivisorClass(0, -2, 4))[0], 0, cite("forget_cokernel")),
    ]
    c = AffineBundleCocycle(u(-3), u(-1, 2) - u(-2) + u(5))
    A = normalize(c)
    out.append(Check("classify.example", {"a": "u^-3", "b": "2u^-1 - u^-2 + u^5"},
                     (A.n, list(A.t)), (3, [Fraction(2), Fraction(-1)]), DERIVED))
    B = normalize(AffineBundleCocycle(u(-1), u(-4, 5) + u(2)))
    out.append(Check("classify.line_bundle", {"a": "u^-1"}, str(B), str(LineBundleP1(-1)),
                     cite("affine_single_point")))
    return out


def _n_checks(n: int) -> list[Check]:
    out = [Check(f"cech.h1.n{n}", {"n": n},
                 [str(p) for p in h1_basis(-n)],
                 [f"u^-{k}" if k > 1 else "u^-1" for k in range(1, n)], cite("cech_h1"))]
    ht = h1_theta(n)
    out += [
        Check(f"theta.h0.n{n}", {"n": n}, len(global_vector_fields(n)), n + 5, cite("theta_h0")),
        Check(f"theta.h1.n{n}", {"n": n}, ht.h1, n - 1, cite("theta_h1")),
        Check(f"theta.chi.n{n}", {"n": n}, ht.h0 - ht.h1, 6, cite("theta_chi")),
        Check(f"theta.truncation.n{n}", {"n": n}, list(truncation_dimensions(n)), [n + 5, n + 5], DERIVED),
        Check(f"torus.weights.n{n}", {"n": n}, [list(w) for w in torus_weights(n)],
              [[l, 1] for l in range(1, n)], cite("torus_weights")),
        Check(f"axis.types.n{n}", {"n": n},
              [axis_compactification_type(n, l)[0] for l in range(1, n)],
              [abs(n - 2 * l) for l in range(1, n)], cite("axis_type")),
        Check(f"forget.h0.n{n}", {"n": n, "l": 0},
              forget_cokernel_h0(n, DivisorClass.section(n, 0)), 1 if n == 2 else 0,
              cite("remark_n2") if n == 2 else cite("forget_cokernel")),
    ]
    rep = moduli_dimension_report(n)
    if n == 2:
        out.append(Check("moduli.remark.n2", {"n": 2}, rep["forget_kernel_dim"], 1, cite("remark_n2")))
    else:
        out.append(Check(f"moduli.dim.n{n}", {"n": n}, rep["moduli_dim"], 2 * (n - 1),
                         cite("moduli_identification")))
        out.append(Check(f"moduli.forget_injective.n{n}", {"n": n}, rep["forget_injective"], True,
                         cite("forget_injective")))
        if n == 3:
            out.append(Check("moduli.forget_surjective.n3", {"n": 3},
                             [rep["h1_glued_l0"], rep["h1_theta_Z"], rep["forget_surjective"]],
                             [4, 4, True], cite("forget_surjective_n3")))
    return out


def _nl_checks(n: int, l: int) -> list[Check]:
    tag = f"n{n}.l{l}"
    L = SectionCurve.canonical(n, l)
    led = tangent_pair_ledger(n, L)
    exp, key = expected_pair(n, l)
    out = [
        Check(f"section.h0.{tag}", {"n": n, "l": l},
              h_line_bundle(n, DivisorClass.section(n, l))[0], n + 2 * l + 2, cite("section_h0")),
        Check(f"section.meets_G0.{tag}", {"n": n, "l": l},
              intersect(DivisorClass.section(n, l), DivisorClass.gamma0(n)), l, cite("intersection")),
        Check(f"pair.canonical.{tag}", {"n": n, "l": l, "section": str(L)}, led["Theta_FL"], exp, cite(key)),
        Check(f"pair.aut.{tag}", {"n": n, "l": l}, aut_identification(n, L, led), _AUT[key](n), cite(key)),
        Check(f"pair.euler.{tag}", {"n": n, "l": l}, led.entries["Theta_FL"].chi, 6 - (n + 2 * l + 1),
              DERIVED),
    ]
    if l == 0:
        out.append(Check(f"pair.restriction_surjective.{tag}", {"n": n, "l": 0},
                         normal_restriction_map(n, L).rank(), n + 1, cite("restriction_l0")))
    if l >= 2:
        S = spread_section(n, l)
        exp2, key2 = expected_pair(n, l, single_point=False)
        out.append(Check(f"pair.spread.{tag}", {"n": n, "l": l, "section": str(S)},
                         tangent_pair_ledger(n, S)["Theta_FL"], exp2, cite(key2)))
    gexp, gkey = expected_glued(n, l)
    out.append(Check(f"double.{tag}", {"n": n, "l": l, "a": "1"},
                     glued_ledger(GluedDouble(n, l))["Theta_glued"], gexp, cite(gkey)))
    out.append(Check(f"double.a_independent.{tag}", {"n": n, "l": l, "a": list(GLUING_SAMPLES)},
                     gluing_parameter_independence(n, l, GLUING_SAMPLES), True, cite("gluing_absorbed")))
    return out


def verify_paper(n_max: int = 8, l_max: int = 3, jobs: int = 1) -> VerificationReport:
    if not 2 <= n_max <= N_MAX:
        raise ValueError(f"n-max must lie in [2, {N_MAX}]")
    ns = range(2, n_max + 1)
    ls = range(0, l_max + 1)
    report = VerificationReport((2, n_max), (0, l_max))
    report.checks += _global_checks()
    blocks = _map(_n_checks, [(n,) for n in ns], jobs)
    blocks += _map(_nl_checks, [(n, l) for n in ns for l in ls], jobs)
    for b in blocks:
        report.checks += b
    report.checks.append(Check("metric_existence", {}, "cited", "cited", cite("metric_existence")))
    return report


def load_schema() -> dict:
    """The JSON schema that ``verify-paper --json`` output conforms to."""
    from importlib.resources import files

    return json.loads(files("affp1").joinpath("schema/report.schema.json").read_text())
