"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .affine import AffineBundleCocycle, CanonicalAffineBundle, is_isomorphic, normalize
from .algebra import FormatError, as_rational, laurent_from_json
from .cech import LineBundleP1
from .double import GluedDouble, glued_h0, glued_ledger
from .hirzebruch import (
    SectionCurve,
    aut_identification,
    aut_pair_base_projection,
    printed_field_comparison,
    tangent_pair_ledger,
)
from .report import N_MAX, render_sweep, sweep_rows, verify_paper

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e


def _int_field(data: dict, name: str) -> int:
    v = data.get(name)
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"field '{name}' must be an integer")
    return v


def parse_bundle(data) -> AffineBundleCocycle:
    """Accept {"a": laurent, "b": laurent} or {"n": int, "t": [rational strings]}."""
    if not isinstance(data, dict):
        raise InputError("top level must be an object")
    try:
        if "a" in data or "b" in data:
            for k in ("a", "b"):
                if k not in data:
                    raise InputError(f"missing field '{k}'")
            a = laurent_from_json(data["a"], field="a")
            b = laurent_from_json(data["b"], field="b")
            try:
                return AffineBundleCocycle(a, b)
            except ValueError as e:
                raise InputError(f"field 'a': {e}") from e
        if "n" in data:
            n = _int_field(data, "n")
            t = data.get("t")
            if not isinstance(t, list) or not all(isinstance(x, str) for x in t):
                raise InputError("field 't' must be a list of rational strings")
            try:
                ts = [as_rational(x) for x in t]
            except (ValueError, ZeroDivisionError) as e:
                raise InputError(f"field 't': {e}") from e
            try:
                return CanonicalAffineBundle(n, tuple(ts)).cocycle()
            except ValueError as e:
                raise InputError(f"field 'n'/'t': {e}") from e
    except FormatError as e:
        raise InputError(str(e)) from e
    raise InputError("expected fields {a, b} or {n, t}")


def parse_section(data, n: int | None = None) -> SectionCurve:
    if not isinstance(data, dict):
        raise InputError("top level must be an object")
    for k in ("n", "l", "s", "q"):
        if k not in data:
            raise InputError(f"missing field '{k}'")
    sn, l = _int_field(data, "n"), _int_field(data, "l")
    if n is not None and sn != n:
        raise InputError(f"field 'n' = {sn} disagrees with --n {n}")
    try:
        s = laurent_from_json(data["s"], field="s")
        q = laurent_from_json(data["q"], field="q")
    except FormatError as e:
        raise InputError(str(e)) from e
    try:
        return SectionCurve(sn, l, s, q)
    except ValueError as e:
        raise InputError(f"invalid (s, q): {e}") from e


def _describe_bundle(c: AffineBundleCocycle) -> list[str]:
    out = [f"degree: {c.degree}"]
    res = normalize(c)
    if isinstance(res, LineBundleP1):
        out.append(f"line bundle {res}; no affine moduli")
    else:
        t = ", ".join(str(x) for x in res.t)
        out.append(f"canonical: n = {res.n}, t = ({t})")
        out.append("line bundle O(-%d) (t = 0)" % res.n if res.is_line_bundle() else "not a line bundle")
    return out


def cmd_classify(args) -> int:
    c = parse_bundle(_load_json(args.input))
    lines = _describe_bundle(c)
    if args.against:
        c2 = parse_bundle(_load_json(args.against))
        r1, r2 = normalize(c), normalize(c2)
        if isinstance(r1, CanonicalAffineBundle) and isinstance(r2, CanonicalAffineBundle):
            iso = is_isomorphic(r1, r2)
        else:
            iso = r1 == r2
        lines.append(f"against {args.against}: " + "; ".join(_describe_bundle(c2)))
        lines.append(f"isomorphic: {'yes' if iso else 'no'}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_cohom(args) -> int:
    if args.n < 1:
        raise InputError("--n must be >= 1")
    if args.section:
        L = parse_section(_load_json(args.section), args.n)
    else:
        if args.l is None or args.l < 0:
            raise InputError("--l must be >= 0")
        L = SectionCurve.canonical(args.n, args.l)
    led = tangent_pair_ledger(args.n, L)
    h = led["Theta_FL"]
    lines = [f"F_{args.n}, L: {L}",
             f"h(Theta_F,L) = ({h[0]}, {h[1]}, {h[2]})",
             f"case: {led.notes['case']}"]
    if L.l >= 1:
        lines.append(f"tangency profile: {led.notes['tangency_profile']}")
        lines.append(f"base projection: {aut_pair_base_projection(args.n, L).describe()}")
    lines.append(f"Aut_0: {aut_identification(args.n, L, led)}")
    for name, e in led.entries.items():
        lines.append(f"  {name}: {e.h}  {e.evidence}")
    if args.fields:
        cmp = printed_field_comparison(args.n)
        lines.append(f"B-component monomials: {cmp['B_monomials']}; {cmp['flag']}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_double(args) -> int:
    if args.n < 1 or args.l < 0:
        raise InputError("need --n >= 1 and --l >= 0")
    try:
        a = as_rational(args.a)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"--a: {e}") from e
    if a <= 0:
        raise InputError("--a must be positive")
    d = GluedDouble(args.n, args.l, a)
    led = glued_ledger(d)
    h = led["Theta_glued"]
    k, _ = glued_h0(d)
    assert k == h[0]
    print("\n".join([
        f"F_{d.n} u_{d.l} F_{d.n}-bar, gluing u -> -({a})/u",
        f"h(Theta) = ({h[0]}, {h[1]}, {h[2]})",
        f"image of the difference map in H0(Theta_L): {led.notes['image_dim']} of 3",
        f"pair: {tuple(led.notes['pair'])}",
    ]))
    return EXIT_OK


_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


def parse_range(text: str) -> range:
    m = _RANGE.match(text)
    if not m:
        raise InputError(f"bad range {text!r}; use LO..HI")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return range(lo, hi + 1)


def cmd_sweep(args) -> int:
    ns, ls = parse_range(args.n), parse_range(args.l)
    if ns and (ns.start < 1 or ns.stop - 1 > args.n_limit):
        raise InputError(f"n must lie in [1, {args.n_limit}]")
    if ls and (ls.start < 0 or ls.stop - 1 > args.n_limit):
        raise InputError(f"l must lie in [0, {args.n_limit}]")
    if args.jobs < 1:
        raise InputError("--jobs must be >= 1")
    rows = sweep_rows(ns, ls, args.jobs)
    sys.stdout.write(render_sweep(rows, args.format))
    return EXIT_OK if all(r["matches_closed_forms"] for r in rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    if not 2 <= args.n_max <= N_MAX:
        raise InputError(f"--n-max must lie in [2, {N_MAX}]")
    if args.jobs < 1:
        raise InputError("--jobs must be >= 1")
    rep = verify_paper(args.n_max, jobs=args.jobs)
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affp1", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="normalize an affine bundle cocycle")
    c.add_argument("--input", required=True)
    c.add_argument("--against")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("cohom", help="cohomology of the tangent sheaf of a pair (F_n, L)")
    c.add_argument("--n", type=int, required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--l", type=int)
    g.add_argument("--section")
    c.add_argument("--fields", action="store_true", help="also report the B-component monomials")
    c.set_defaults(func=cmd_cohom)

    c = sub.add_parser("double", help="cohomology of the glued double")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--l", type=int, required=True)
    c.add_argument("--a", default="1")
    c.set_defaults(func=cmd_double)

    c = sub.add_parser("sweep", help="dimension table over an (n, l) grid")
    c.add_argument("--n", default="2..8")
    c.add_argument("--l", default="0..3")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--n-limit", type=int, default=N_MAX, help="largest n or l accepted (default %(default)s)")
    c.set_defaults(func=cmd_sweep)

    c = sub.add_parser("verify-paper", help="check every published value")
    c.add_argument("--n-max", type=int, default=8)
    c.add_argument("--json", action="store_true")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
