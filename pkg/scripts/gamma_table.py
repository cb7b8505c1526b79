"""Measured crossings and cover sums of Gamma_n against their closed forms."""

import argparse
import time

from crossfold import arc_diagram as ad


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=12)
    args = p.parse_args()

    print(f"{'n':>3} {'segments':>9} {'crossings':>12} {'formula':>12} {'C_a':>12} {'C_b':>12} {'secs':>6}")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        d = ad.build_gamma(n)
        x = ad.count_crossings_fast(d)
        cov = ad.cover_profile(d)
        dt = time.perf_counter() - t0
        flag = "" if x == ad.gamma_crossing_formula(n) and cov.sum_above == ad.gamma_cover_sum_formula(n) else "  MISMATCH"
        print(f"{n:>3} {len(d.segments):>9} {x:>12} {ad.gamma_crossing_formula(n):>12} "
              f"{cov.sum_above:>12} {cov.sum_below:>12} {dt:>6.2f}{flag}")


if __name__ == "__main__":
    main()
