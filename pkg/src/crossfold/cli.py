"""crossfold command line: gamma, fq-upper, congestion, bounds, render, verify."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import arc_diagram as ad
from . import bounds, folded_upper, render, routing
from .verify import VERIFY_MAX_N, VERIFY_MIN_N, run_verify

FQ_UPPER_MAX_N = ad.MAX_GAMMA_N + 3


class UsageError(Exception):
    pass


def _dump(doc: dict) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_gamma(args: argparse.Namespace) -> int:
    n = args.n
    limit = ad.PAIRWISE_MAX_N if args.check_good else ad.MAX_GAMMA_N
    if not 1 <= n <= limit:
        raise UsageError(f"--n must be in 1..{limit}" + (" with --check-good" if args.check_good else ""))
    if args.svg and n > render.RENDER_MAX_N:
        raise UsageError(f"--svg needs n <= {render.RENDER_MAX_N}")
    d = ad.build_gamma(n)
    report = ad.count_crossings(d, pairs=args.check_good or n <= ad.PAIRWISE_MAX_N)
    cov = ad.cover_profile(d)
    want_x, want_c = ad.gamma_crossing_formula(n), ad.gamma_cover_sum_formula(n)
    doc = {
        "n": n,
        "segments": len(d.segments),
        "crossings": report.total,
        "crossing_formula": want_x,
        "cover_sums": [cov.sum_above, cov.sum_below],
        "cover_formula": want_c,
        "match": report.total == want_x and cov.sum_above == cov.sum_below == want_c,
    }
    if args.check_good:
        bad = ad.validate_good(d, report)
        doc["good"] = not bad
        doc["violations"] = [f"{v.kind}: {v.detail}" for v in bad]
    if args.svg:
        Path(args.svg).write_text(render.gamma_svg(d, crossings=report.total))
    if args.json:
        _dump(doc)
    else:
        print(f"Gamma_{n}: {doc['segments']} segments")
        print(f"  crossings   {report.total}  (closed form {want_x})")
        print(f"  cover sums  C_a={cov.sum_above} C_b={cov.sum_below}  (closed form {want_c})")
        print(f"  formulas match: {'yes' if doc['match'] else 'NO'}")
        if args.check_good:
            print(f"  good drawing: {'yes' if doc['good'] else 'NO'}")
            for v in doc["violations"][:10]:
                print(f"    {v}")
    ok = doc["match"] and doc.get("good", True)
    return 0 if ok else 1


def cmd_fq_upper(args: argparse.Namespace) -> int:
    n = args.n
    if not 3 <= n <= FQ_UPPER_MAX_N:
        raise UsageError(f"--n must be in 3..{FQ_UPPER_MAX_N}")
    count, formula = folded_upper.fq_upper_count(n), folded_upper.fq_upper_formula(n)
    doc: dict = {"n": n, "assembled": count, "formula": formula, "match": count == formula}
    if n >= 4:
        b = folded_upper.neighborhood_breakdown(n)
        doc["neighborhood"] = {"nu_red": b.nu_red, "nu_blue": b.nu_blue, "nu_mixed": b.nu_mixed,
                               "total": b.total, "formula": folded_upper.neighborhood_formula(n)}
        doc["bunch_crossings"] = (1 << (n - 3)) ** 2 * 4
    if args.json:
        _dump(doc)
    else:
        print(f"D_{n}: {count} crossings assembled, closed form {formula}")
        if n >= 4:
            nb = doc["neighborhood"]
            print(f"  per neighbourhood: red {nb['nu_red']} + blue {nb['nu_blue']} + "
                  f"mixed {nb['nu_mixed']} = {nb['total']}  (x8)")
            print(f"  bunch crossings: {doc['bunch_crossings']}")
    return 0 if doc["match"] else 1


def cmd_congestion(args: argparse.Namespace) -> int:
    n = args.n
    if args.census:
        if not 2 <= n <= routing.CENSUS_MAX_N:
            raise UsageError(f"--census needs 2 <= n <= {routing.CENSUS_MAX_N} (resource guard)")
        doc = routing.congestion_census(n).to_json()
        doc["source"] = "census"
    else:
        if n < 2:
            raise UsageError("--n must be >= 2")
        dim0, dimt = routing.class_formula(n, "dim0"), routing.class_formula(n, "dimt")
        top, bound = max(dim0, dimt), routing.claimed_global_bound(n)
        doc = {"n": n, "classes": {"0": {"cg": dim0, "count": 1 << (n - 1)},
                                   "t": {"cg": dimt, "count": n << (n - 1)}},
               "max": top, "bound1": bound, "bound1_holds": top <= bound, "source": "formula"}
    if args.json:
        _dump(doc)
    else:
        c = doc["classes"]
        print(f"FQ_{n} congestion ({doc['source']}):")
        print(f"  Dim-0 edges: {c['0']['cg']}  ({c['0']['count']} edges)")
        print(f"  dimension edges: {c['t']['cg']}  ({c['t']['count']} edges)")
        print(f"  max {doc['max']}, claimed bound 2^n - C(n, n/2) = {doc['bound1']}")
        if doc["bound1_holds"]:
            print("  bound holds")
        else:
            note = " (expected erratum for odd n)" if n % 2 else ""
            print(f"  bound violated{note}")
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise UsageError("--n must be >= 2")
    r = bounds.bound_report(args.n)
    if args.json:
        _dump(r.to_json())
        return 0
    print(f"Bounds for n={r.n}")
    if r.small_case_exact is not None:
        print(f"  cr(FQ_n) exactly             {r.small_case_exact}")
    if r.upper_fq is not None:
        print(f"  cr(FQ_n) upper               {r.upper_fq}")
    print(f"  cr(FQ_n) lower, closed form  {r.lower_fq_paper!r} (rounded down)")
    print(f"  cr(FQ_n) lower, Leighton     {r.lower_fq_assembled} ~ {float(r.lower_fq_assembled):.6g}"
          f"  (congestion {r.congestion})")
    if r.qn_upper_conj is not None:
        print(f"  cr(Q_n) conjectured upper    {r.qn_upper_conj}")
    print(f"  cr(Q_n) lower                {r.qn_lower_sv}")
    a1, a2 = r.inequality_1, r.inequality_2
    print(f"  inequality (1): {a1.max_measured} <= {a1.bound}: {'holds' if a1.holds else 'VIOLATED'}")
    print(f"  inequality (2): {a2.lhs} >= {a2.rhs:.6f}: {'holds' if a2.holds else 'VIOLATED'}")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    if args.d3:
        svg = render.d3_svg()
    else:
        if not 1 <= args.gamma <= render.RENDER_MAX_N:
            raise UsageError(f"--gamma must be in 1..{render.RENDER_MAX_N}")
        svg = render.render_gamma(args.gamma)
    try:
        Path(args.out).write_text(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror}") from exc
    print(f"wrote {args.out}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not VERIFY_MIN_N <= args.max_n <= VERIFY_MAX_N:
        raise UsageError(f"--max-n must be in {VERIFY_MIN_N}..{VERIFY_MAX_N}")
    result = run_verify(args.max_n)
    if args.json:
        _dump(result.to_json())
    else:
        for c in result.checks:
            lo, hi = c.n_range
            tail = f"  {c.details}" if c.details else ""
            print(f"[{c.status:>16}] {c.name} (n={lo}..{hi}){tail}")
        print(f"exit code {result.exit_code}")
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crossfold", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="count crossings and covers of Gamma_n")
    g.add_argument("--n", type=int, required=True, help=f"dimension, 1..{ad.MAX_GAMMA_N}")
    g.add_argument("--json", action="store_true")
    g.add_argument("--svg", metavar="PATH", help="also write an SVG picture")
    g.add_argument("--check-good", action="store_true",
                   help=f"validate the good-drawing conditions (n <= {ad.PAIRWISE_MAX_N})")
    g.set_defaults(func=cmd_gamma)

    f = sub.add_parser("fq-upper", help="crossings of the upper-bound drawing D_n of FQ_n")
    f.add_argument("--n", type=int, required=True, help=f"dimension, 3..{FQ_UPPER_MAX_N}")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fq_upper)

    c = sub.add_parser("congestion", help="edge loads of the canonical routing of 2K_{2^n}")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--census", action="store_true",
                   help=f"exhaustive census instead of closed forms (n <= {routing.CENSUS_MAX_N})")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_congestion)

    b = sub.add_parser("bounds", help="every crossing-number bound for one n")
    b.add_argument("--n", type=int, required=True, help="dimension, >= 2")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("render", help="write an SVG of Gamma_n or D_3")
    which = r.add_mutually_exclusive_group(required=True)
    which.add_argument("--gamma", type=int, metavar="N", help=f"Gamma_N, N in 1..{render.RENDER_MAX_N}")
    which.add_argument("--d3", action="store_true")
    r.add_argument("--out", required=True, metavar="PATH")
    r.set_defaults(func=cmd_render)

    v = sub.add_parser("verify", help="run every invariant up to --max-n")
    v.add_argument("--max-n", type=int, default=8,
                   help=f"largest dimension, {VERIFY_MIN_N}..{VERIFY_MAX_N} (default 8)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"crossfold {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
