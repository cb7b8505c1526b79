"""Exhaustive congestion census of the canonical routing, with the inequality (1) audit."""

import argparse
import time

from crossfold.routing import CENSUS_MAX_N, claimed_global_bound, class_formula, congestion_census


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=10, help=f"up to {CENSUS_MAX_N}")
    p.add_argument("--chunks", type=int, default=1, help="split sources into this many batches")
    args = p.parse_args()

    print(f"{'n':>3} {'cg dim0':>9} {'cg dim t':>9} {'formulas':>9} {'2^n-C':>7} {'(1)':>9} {'secs':>6}")
    for n in range(2, min(args.max_n, CENSUS_MAX_N) + 1):
        t0 = time.perf_counter()
        c = congestion_census(n, chunks=args.chunks)
        dim0, dimt = c.uniform_class_values()
        dt = time.perf_counter() - t0
        agree = (dim0, dimt) == (class_formula(n, "dim0"), class_formula(n, "dimt"))
        bound = claimed_global_bound(n)
        verdict = "holds" if c.max_congestion <= bound else "violated"
        print(f"{n:>3} {dim0:>9} {dimt:>9} {'yes' if agree else 'NO':>9} {bound:>7} {verdict:>9} {dt:>6.2f}")


if __name__ == "__main__":
    main()
