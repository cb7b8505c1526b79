from __future__ import annotations

import math


def binomial(a: int, b: int) -> int:
    """Exact C(a, b) for 0 <= b <= a."""
    if not 0 <= b <= a:
        raise ValueError(f"binomial({a}, {b}) needs 0 <= b <= a")
    return math.comb(a, b)
