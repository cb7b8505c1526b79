"""The recursive arc diagram Gamma_n of Q_n, with exact crossing and cover counts.

Vertices sit on the x axis at their decimal value.  Every edge is drawn as one
or two monotone arcs ("segments"), each living entirely in the upper or the
lower half-plane.  An edge with two segments crosses the axis once, at a
non-integer gap point.  Two segments in the same half-plane cross iff their
endpoints strictly interleave, ``a < c < b < d``; all coordinates are exact
rationals.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .hypercube import VertexLabel, complement, decimal, vertices

MAX_GAMMA_N = 16
PAIRWISE_MAX_N = 10

Edge = tuple[int, int]


class Half(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True, slots=True)
class ArcSegment:
    half: Half
    left: Fraction
    right: Fraction
    edge: Edge

    def __post_init__(self) -> None:
        if not self.left < self.right:
            raise ValueError(f"degenerate segment [{self.left}, {self.right}]")

    def shifted(self, offset: int) -> ArcSegment:
        u, v = self.edge
        return ArcSegment(self.half, self.left + offset, self.right + offset,
                          (u + offset, v + offset))


@dataclass(frozen=True)
class ArcDrawing:
    """A drawing of Q_n as an arc diagram.

    ``positions[x]`` is the axis coordinate of the vertex whose decimal value
    is ``x``; edges are keyed by the decimal values of their endpoints.
    """

    n: int
    segments: tuple[ArcSegment, ...]
    positions: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.positions:
            object.__setattr__(self, "positions", tuple(range(1 << self.n)))
        if len(self.positions) != 1 << self.n:
            raise ValueError("need one position per vertex")

    def position(self, v: VertexLabel) -> int:
        return self.positions[v.value]

    @property
    def edges(self) -> list[Edge]:
        return sorted({s.edge for s in self.segments})

    def to_json(self) -> dict:
        label = lambda x: format(x, f"0{self.n}b")  # noqa: E731
        return {
            "n": self.n,
            "segments": [
                {"edge": [label(s.edge[0]), label(s.edge[1])], "half": s.half.value,
                 "left": _ratstr(s.left), "right": _ratstr(s.right)}
                for s in self.segments
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> ArcDrawing:
        segs = tuple(
            ArcSegment(Half(s["half"]), Fraction(s["left"]), Fraction(s["right"]),
                       (int(s["edge"][0], 2), int(s["edge"][1], 2)))
            for s in doc["segments"]
        )
        return cls(int(doc["n"]), segs)


def _ratstr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def gap_point(n: int, i: int) -> Fraction:
    """Axis crossing of the level-n curve joining i and 2^(n-1) + i, for i >= 1.

    Strictly decreasing in i and confined to the open gap (2^(n-1) - 1, 2^(n-1)),
    so the curves of one level nest in both half-planes.
    """
    h = 1 << (n - 1)
    if not 1 <= i < h:
        raise ValueError(f"curve index {i} has no gap point at level {n}")
    return (h - 1) + Fraction(h - i, h + 1)


def level_curves(n: int) -> list[ArcSegment]:
    """The 2^(n-1) new curves joining i and 2^(n-1) + i."""
    h = 1 << (n - 1)
    out = [ArcSegment(Half.UPPER, Fraction(0), Fraction(h), (0, h))]
    for i in range(1, h):
        g = gap_point(n, i)
        out.append(ArcSegment(Half.UPPER, Fraction(i), g, (i, h + i)))
        out.append(ArcSegment(Half.LOWER, g, Fraction(h + i), (i, h + i)))
    return out


@lru_cache(maxsize=None)
def _gamma_segments(n: int) -> tuple[ArcSegment, ...]:
    if n == 1:
        return (ArcSegment(Half.UPPER, Fraction(0), Fraction(1), (0, 1)),)
    prev = _gamma_segments(n - 1)
    h = 1 << (n - 1)
    return prev + tuple(s.shifted(h) for s in prev) + tuple(level_curves(n))


def build_gamma(n: int) -> ArcDrawing:
    if not 1 <= n <= MAX_GAMMA_N:
        raise ValueError(f"n must be in 1..{MAX_GAMMA_N}, got {n}")
    return ArcDrawing(n, _gamma_segments(n))


# --------------------------------------------------------------------------
# counting


@dataclass(frozen=True)
class CrossingReport:
    total: int
    pair_multiplicity: dict[tuple[Edge, Edge], int] | None = None


def exact_keys(coords: list[Fraction]) -> list[int]:
    """Integers ordered exactly like ``coords``: each coordinate times the lcm of all denominators."""
    dens = {c.denominator for c in coords}
    scale = math.lcm(*dens) if dens else 1
    factor = {q: scale // q for q in dens}
    return [c.numerator * factor[c.denominator] for c in coords]


def coordinate_ranks(coords: list[Fraction]) -> list[int]:
    """Dense exact ranks 0, 1, 2, ... of ``coords``; equal coordinates share a rank."""
    keys = exact_keys(coords)
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _ranked_halves(d: ArcDrawing) -> dict[Half, tuple[np.ndarray, np.ndarray, list[ArcSegment]]]:
    segs_all = d.segments
    m = len(segs_all)
    ranks = coordinate_ranks([s.left for s in segs_all] + [s.right for s in segs_all])
    lo_all = np.array(ranks[:m], dtype=np.int64)
    hi_all = np.array(ranks[m:], dtype=np.int64)
    upper = np.fromiter((s.half is Half.UPPER for s in segs_all), dtype=bool, count=m)
    out = {}
    for half, mask in ((Half.UPPER, upper), (Half.LOWER, ~upper)):
        idx = np.nonzero(mask)[0]
        order = idx[np.lexsort((hi_all[idx], lo_all[idx]))]
        out[half] = (lo_all[order], hi_all[order], [segs_all[i] for i in order.tolist()])
    return out


def _interleave_total(lo: np.ndarray, hi: np.ndarray, size: int) -> int:
    """Number of pairs with a < c < b < d, by sweeping left endpoints with a Fenwick tree.

    ``lo`` must be sorted ascending.  Intervals sharing a left endpoint are
    inserted only after all of them have been queried.
    """
    tree = [0] * (size + 1)
    total = 0
    k = 0
    m = len(lo)
    lo_l = lo.tolist()
    hi_l = hi.tolist()
    while k < m:
        c = lo_l[k]
        j = k
        while j < m and lo_l[j] == c:
            # count inserted rights b with c < b < d
            d = hi_l[j]
            s = 0
            i = d  # prefix over ranks <= d - 1  (tree index = rank + 1)
            while i > 0:
                s += tree[i]
                i -= i & -i
            i = c + 1  # prefix over ranks <= c
            while i > 0:
                s -= tree[i]
                i -= i & -i
            total += s
            j += 1
        for t in range(k, j):
            i = hi_l[t] + 1
            while i <= size:
                tree[i] += 1
                i += i & -i
        k = j
    return total


def _interleave_pairs(lo: np.ndarray, hi: np.ndarray) -> list[tuple[int, int]]:
    """Index pairs (i, j) with lo[i] < lo[j] < hi[i] < hi[j]; ``lo`` sorted ascending."""
    pairs = []
    for i in range(len(lo)):
        a, b = lo[i], hi[i]
        start = np.searchsorted(lo, a, side="right")
        stop = np.searchsorted(lo, b, side="left")
        if start >= stop:
            continue
        hits = np.nonzero(hi[start:stop] > b)[0]
        pairs.extend((i, start + int(j)) for j in hits)
    return pairs


def count_crossings(d: ArcDrawing, *, pairs: bool | None = None) -> CrossingReport:
    """Exact crossing count.

    With ``pairs`` (default: on for n <= 10) every crossing segment pair is
    enumerated and aggregated per edge pair; otherwise only the total is
    computed with a Fenwick sweep.
    """
    if pairs is None:
        pairs = d.n <= PAIRWISE_MAX_N
    halves = _ranked_halves(d)
    if not pairs:
        size = 2 * len(d.segments) + 1
        return CrossingReport(sum(_interleave_total(lo, hi, size)
                                  for lo, hi, _ in halves.values()))
    mult: Counter[tuple[Edge, Edge]] = Counter()
    for lo, hi, segs in halves.values():
        for i, j in _interleave_pairs(lo, hi):
            e, f = segs[i].edge, segs[j].edge
            mult[(e, f) if e <= f else (f, e)] += 1
    return CrossingReport(sum(mult.values()), dict(mult))


def count_crossings_fast(d: ArcDrawing) -> int:
    return count_crossings(d, pairs=False).total


def count_crossings_pairwise(d: ArcDrawing) -> CrossingReport:
    return count_crossings(d, pairs=True)


@dataclass(frozen=True)
class CoverProfile:
    above: tuple[int, ...]
    below: tuple[int, ...]

    @property
    def sum_above(self) -> int:
        return sum(self.above)

    @property
    def sum_below(self) -> int:
        return sum(self.below)


def cover_profile(d: ArcDrawing) -> CoverProfile:
    """C_a, C_b per vertex (indexed by decimal value): segments strictly spanning its position."""
    npos = 1 << d.n
    diff = {Half.UPPER: np.zeros(npos + 1, dtype=np.int64),
            Half.LOWER: np.zeros(npos + 1, dtype=np.int64)}
    for s in d.segments:
        first = max(math.floor(s.left) + 1, 0)
        last = min(math.ceil(s.right) - 1, npos - 1)
        if first <= last:
            diff[s.half][first] += 1
            diff[s.half][last + 1] -= 1
    by_pos = {h: np.cumsum(a[:-1]) for h, a in diff.items()}
    pos = d.positions
    above = tuple(int(by_pos[Half.UPPER][pos[x]]) for x in range(npos))
    below = tuple(int(by_pos[Half.LOWER][pos[x]]) for x in range(npos))
    return CoverProfile(above, below)


# --------------------------------------------------------------------------
# closed forms


def gamma_cover_sum_formula(n: int) -> int:
    """4^(n-1) - (n+1) 2^(n-2), for n >= 1."""
    if n < 1:
        raise ValueError(n)
    value = Fraction(4 ** (n - 1)) - (n + 1) * Fraction(2) ** (n - 2)
    assert value.denominator == 1
    return int(value)


def gamma_crossing_formula(n: int) -> int:
    """4^(n-1) - (n^2 + n + 2) 2^(n-3), for n >= 1."""
    if n < 1:
        raise ValueError(n)
    value = Fraction(4 ** (n - 1)) - (n * n + n + 2) * Fraction(2) ** (n - 3)
    assert value.denominator == 1
    return int(value)


def bunch_crossings(m: int) -> int:
    """Crossings between two bunches of m parallel lines."""
    if m < 1:
        raise ValueError(m)
    return m * (m - 1) // 2


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


def edge_level(n: int, edge: Edge) -> int:
    """Recursion level of a Q_n edge: level m joins positions differing in bit m-1."""
    diff = edge[0] ^ edge[1]
    if diff.bit_count() != 1:
        raise ValueError(f"{edge} is not a Q_{n} edge")
    return diff.bit_length()


def validate_good(d: ArcDrawing, r: CrossingReport) -> list[Violation]:
    """Empty list iff the drawing is good; otherwise every violation found."""
    if r.pair_multiplicity is None:
        raise ValueError("validation needs a report with pair multiplicities")
    bad = []
    for (e, f), k in sorted(r.pair_multiplicity.items()):
        if e == f:
            bad.append(Violation("self-crossing", f"edge {e} crosses itself {k}x"))
        elif set(e) & set(f):
            bad.append(Violation("adjacent", f"edges {e} and {f} share a vertex and cross {k}x"))
        elif k > 1:
            bad.append(Violation("multiple", f"edges {e} and {f} cross {k}x"))

    vertex_at = {p: x for x, p in enumerate(d.positions)}
    for half in Half:
        touching: defaultdict[Fraction, list[ArcSegment]] = defaultdict(list)
        for s in d.segments:
            if s.half is half:
                touching[s.left].append(s)
                touching[s.right].append(s)
        for coord, segs in sorted(touching.items()):
            x = vertex_at.get(coord) if coord.denominator == 1 else None
            if x is None:
                if len(segs) > 1:
                    bad.append(Violation(
                        "shared-gap", f"{len(segs)} {half.value} segments end at {coord}"))
            else:
                strays = [s.edge for s in segs if x not in s.edge]
                if strays:
                    bad.append(Violation(
                        "through-vertex", f"{half.value} segments {strays} end at vertex {x}"))
    return bad


def level_crossings(d: ArcDrawing, r: CrossingReport) -> dict[int, int]:
    """Crossings between two curves of the same recursion level, per level."""
    if r.pair_multiplicity is None:
        raise ValueError("needs a report with pair multiplicities")
    out = {m: 0 for m in range(1, d.n + 1)}
    for (e, f), k in r.pair_multiplicity.items():
        le, lf = edge_level(d.n, e), edge_level(d.n, f)
        if le == lf:
            out[le] += k
    return out


def verify_placement(d: ArcDrawing) -> str | None:
    """None if every vertex and its complement sit where the decimal rule says, else the first mismatch."""
    top = (1 << d.n) - 1
    for x in vertices(d.n):
        if d.position(x) != decimal(x):
            return f"vertex {x} at {d.position(x)}, expected {decimal(x)}"
        xc = complement(x)
        if d.position(xc) != top - decimal(x):
            return f"complement {xc} of {x} at {d.position(xc)}, expected {top - decimal(x)}"
    return None
