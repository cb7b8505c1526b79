"""Crossing count of the upper-bound drawing D_n of FQ_n.

D_3 is realized concretely as a straight-line drawing of K_{4,4} with the two
parity classes on perpendicular axes.  For n >= 4 the drawing blows every
vertex of D_3 up into a copy of Gamma_{n-3}; its crossings are assembled from
measurements of that copy rather than drawn.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .arc_diagram import (CrossingReport, Edge, bunch_crossings, build_gamma,
                          count_crossings, cover_profile)
from .hypercube import VertexLabel, fq_edges

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class CoordinateDrawing:
    points: dict[VertexLabel, Point]
    edges: tuple[tuple[VertexLabel, VertexLabel], ...]

    def __post_init__(self) -> None:
        if len(set(self.points.values())) != len(self.points):
            raise ValueError("two vertices share a point")
        for u, v in self.edges:
            if u not in self.points or v not in self.points:
                raise ValueError(f"edge {u}-{v} has an unplaced endpoint")

    def to_json(self) -> dict:
        return {
            "points": {str(v): [_ratstr(x), _ratstr(y)]
                       for v, (x, y) in sorted(self.points.items())},
            "edges": [[str(u), str(v)] for u, v in self.edges],
        }

    @classmethod
    def from_json(cls, doc: dict) -> CoordinateDrawing:
        pts = {VertexLabel.from_bits(k): (Fraction(x), Fraction(y))
               for k, (x, y) in doc["points"].items()}
        edges = tuple((VertexLabel.from_bits(u), VertexLabel.from_bits(v))
                      for u, v in doc["edges"])
        return cls(pts, edges)


def _ratstr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def d3_base_drawing() -> CoordinateDrawing:
    """FQ_3 as K_{4,4}: even-weight labels on the x axis, odd-weight labels on the y axis."""
    even = ["000", "011", "101", "110"]
    odd = ["001", "010", "100", "111"]
    slots = [Fraction(-2), Fraction(-1), Fraction(1), Fraction(2)]
    points: dict[VertexLabel, Point] = {}
    for label, s in zip(even, slots):
        points[VertexLabel.from_bits(label)] = (s, Fraction(0))
    for label, s in zip(odd, slots):
        points[VertexLabel.from_bits(label)] = (Fraction(0), s)
    edges = tuple((e.u, e.v) for e in fq_edges(3))
    return CoordinateDrawing(points, edges)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p)."""
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (det > 0) - (det < 0)


def _on_open_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies strictly inside segment ab (not at an endpoint)."""
    if orientation(a, b, p) != 0 or p == a or p == b:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _intersection_point(a: Point, b: Point, c: Point, d: Point) -> Point:
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    t = ((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / (rx * sy - ry * sx)
    return (a[0] + t * rx, a[1] + t * ry)


@dataclass(frozen=True)
class SegmentCrossingReport(CrossingReport):
    degeneracies: list[str] = field(default_factory=list)


def count_segment_crossings(d: CoordinateDrawing) -> SegmentCrossingReport:
    """Proper interior intersections between straight edges, with exact orientation tests."""
    segs = [((u, v), d.points[u], d.points[v]) for u, v in d.edges]
    mult: dict[tuple[Edge, Edge], int] = {}
    bad: list[str] = []
    meeting: dict[Point, list[Edge]] = {}

    for (e, a, b), (f, c, dd) in combinations(segs, 2):
        ekey = (e[0].value, e[1].value)
        fkey = (f[0].value, f[1].value)
        for p, (x, y) in ((c, (a, b)), (dd, (a, b)), (a, (c, dd)), (b, (c, dd))):
            if _on_open_segment(p, x, y):
                bad.append(f"endpoint {p} lies inside edge {e if (x, y) == (a, b) else f}")
        if set(e) & set(f):
            continue
        o1, o2 = orientation(a, b, c), orientation(a, b, dd)
        o3, o4 = orientation(c, dd, a), orientation(c, dd, b)
        if o1 * o2 < 0 and o3 * o4 < 0:
            mult[(ekey, fkey) if ekey <= fkey else (fkey, ekey)] = 1
            meeting.setdefault(_intersection_point(a, b, c, dd), []).extend([ekey, fkey])

    for p, owners in meeting.items():
        if len(set(owners)) > 2:
            bad.append(f"{len(set(owners))} edges meet at {p}")
    return SegmentCrossingReport(sum(mult.values()), mult, bad)


# --------------------------------------------------------------------------
# neighbourhood assembly


@dataclass(frozen=True)
class NeighborhoodBreakdown:
    nu_red: int
    nu_blue: int
    nu_mixed: int

    @property
    def total(self) -> int:
        return self.nu_red + self.nu_blue + self.nu_mixed


def neighborhood_formula(n: int) -> int:
    """Crossings near one blown-up vertex: 9 * 4^(n-4) - (n^2 + 3n) 2^(n-6)."""
    if n < 4:
        raise ValueError(f"needs n >= 4, got {n}")
    value = 9 * Fraction(4) ** (n - 4) - (n * n + 3 * n) * Fraction(2) ** (n - 6)
    assert value.denominator == 1
    return int(value)


def neighborhood_breakdown(n: int) -> NeighborhoodBreakdown:
    """Crossings inside, among, and between the red and blue edges around one copy of Gamma_{n-3}."""
    if n < 4:
        raise ValueError(f"needs n >= 4, got {n}")
    gamma = build_gamma(n - 3)
    covers = cover_profile(gamma)
    return NeighborhoodBreakdown(
        nu_red=count_crossings(gamma).total,
        # two of the bunch pairs around a vertex cross
        nu_blue=2 * bunch_crossings(1 << (n - 3)),
        nu_mixed=2 * covers.sum_above + 2 * covers.sum_below,
    )


def fq_upper_count(n: int) -> int:
    """Crossings of D_n: 8 neighborhoods plus bunch-by-bunch copies of every D_3 crossing."""
    if n < 3:
        raise ValueError(f"needs n >= 3, got {n}")
    base = count_segment_crossings(d3_base_drawing()).total
    if n == 3:
        return base
    bunch = 1 << (n - 3)
    return 8 * neighborhood_breakdown(n).total + bunch * bunch * base


def fq_upper_formula(n: int) -> int:
    """11 * 2^(2n-5) - (n^2 + 3n) 2^(n-3), the closed form of (11/32) 4^n - (n^2 + 3n) 2^(n-3)."""
    if n < 3:
        raise ValueError(f"needs n >= 3, got {n}")
    return 11 * (1 << (2 * n - 5)) - (n * n + 3 * n) * (1 << (n - 3))
