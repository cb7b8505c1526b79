"""Upper and lower crossing-number bounds for FQ_n side by side.

The last column compares the closed-form lower bound with the Leighton bound
rebuilt from the true maximum congestion.  For odd n the closed form rests on
a congestion value that the routing does not achieve, so it can exceed the
rebuilt bound.
"""

import argparse

from crossfold.bounds import fq_lower_assembled, fq_lower_paper
from crossfold.folded_upper import fq_upper_formula
from crossfold.routing import class_formula


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-n", type=int, default=20)
    args = p.parse_args()

    print(f"{'n':>3} {'cg':>9} {'upper':>16} {'lower closed':>18} {'lower rebuilt':>18} {'closed/rebuilt':>15}")
    for n in range(3, args.max_n + 1):
        cg = max(class_formula(n, "dim0"), class_formula(n, "dimt"))
        closed, rebuilt = fq_lower_paper(n), float(fq_lower_assembled(n, cg))
        ratio = f"{closed / rebuilt:15.4f}" if closed > 0 and rebuilt > 0 else f"{'-':>15}"
        print(f"{n:>3} {cg:>9} {fq_upper_formula(n):>16} {closed:>18.2f} {rebuilt:>18.2f} {ratio}")


if __name__ == "__main__":
    main()
