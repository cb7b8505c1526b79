"""Write SVG pictures of Gamma_1..Gamma_N and D_3 into a directory."""

import argparse
from pathlib import Path

from crossfold.render import RENDER_MAX_N, d3_svg, render_gamma


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Path("figures"))
    p.add_argument("--max-n", type=int, default=5, help=f"largest Gamma_n, at most {RENDER_MAX_N}")
    args = p.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(1, min(args.max_n, RENDER_MAX_N) + 1):
        (args.out / f"gamma_{n}.svg").write_text(render_gamma(n))
    (args.out / "d3.svg").write_text(d3_svg())
    print(f"wrote {len(list(args.out.glob('*.svg')))} files to {args.out}")


if __name__ == "__main__":
    main()
