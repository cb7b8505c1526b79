"""Vertex algebra for the hypercube Q_n and the folded hypercube FQ_n.

A vertex is an n-bit string x_1 x_2 ... x_n.  It is stored as its decimal
value together with n, so bit x_i lives at machine bit (n - i).  Adjacency is
implicit: a dimension-t edge flips bit t, the complementary (dimension 0) edge
flips every bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


class DimensionMismatch(ValueError):
    pass


class NotAnEdge(ValueError):
    pass


@dataclass(frozen=True, order=True)
class VertexLabel:
    n: int
    value: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError(f"value {self.value} out of range for n={self.n}")

    @classmethod
    def from_bits(cls, bits: str | Iterable[int]) -> VertexLabel:
        digits = [int(b) for b in bits]
        if not digits or any(d not in (0, 1) for d in digits):
            raise ValueError(f"not a bit string: {bits!r}")
        value = 0
        for d in digits:
            value = (value << 1) | d
        return cls(len(digits), value)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self.theta(i) for i in range(1, self.n + 1))

    def theta(self, i: int) -> int:
        """The i-th coordinate x_i, 1-based from the left."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return (self.value >> (self.n - i)) & 1

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")


def bit_mask(n: int, i: int) -> int:
    """Machine mask for coordinate i (1-based) of an n-bit label."""
    return 1 << (n - i)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def _same_n(u: VertexLabel, v: VertexLabel) -> None:
    if u.n != v.n:
        raise DimensionMismatch(f"{u} has n={u.n}, {v} has n={v.n}")


def decimal(v: VertexLabel) -> int:
    return v.value


def complement(v: VertexLabel) -> VertexLabel:
    return VertexLabel(v.n, v.value ^ full_mask(v.n))


def agreement(u: VertexLabel, v: VertexLabel) -> int:
    """Number of coordinates on which u and v agree."""
    _same_n(u, v)
    return u.n - (u.value ^ v.value).bit_count()


def edge_dim(u: VertexLabel, v: VertexLabel) -> int:
    """Dimension of the FQ_n edge uv: 0 for the complementary edge, else the flipped index."""
    _same_n(u, v)
    diff = u.value ^ v.value
    if diff == full_mask(u.n):
        return 0
    if diff.bit_count() == 1:
        return u.n - diff.bit_length() + 1
    raise NotAnEdge(f"not an FQ_n edge: {u} {v}")


@dataclass(frozen=True)
class EdgeRef:
    u: VertexLabel
    v: VertexLabel
    dim: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError("an edge needs two distinct endpoints")
        if edge_dim(self.u, self.v) != self.dim:
            raise ValueError(f"{self.u}-{self.v} is not a dimension-{self.dim} edge")

    @classmethod
    def between(cls, u: VertexLabel, v: VertexLabel) -> EdgeRef:
        """Edge with endpoints ordered by decimal value."""
        if v < u:
            u, v = v, u
        return cls(u, v, edge_dim(u, v))

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


def _require_folded(n: int) -> None:
    # FQ_1 is a doubled edge; no multigraph convention is assumed.
    if n < 2:
        raise ValueError(f"FQ_n operations need n >= 2, got n={n}")


def fq_neighbors(v: VertexLabel) -> frozenset[VertexLabel]:
    _require_folded(v.n)
    flips = {VertexLabel(v.n, v.value ^ bit_mask(v.n, i)) for i in range(1, v.n + 1)}
    flips.add(complement(v))
    return frozenset(flips)


def is_fq_edge(u: VertexLabel, v: VertexLabel) -> bool:
    _same_n(u, v)
    diff = u.value ^ v.value
    return diff == full_mask(u.n) or diff.bit_count() == 1


def is_q_edge(u: VertexLabel, v: VertexLabel) -> bool:
    _same_n(u, v)
    return (u.value ^ v.value).bit_count() == 1


def vertices(n: int) -> list[VertexLabel]:
    return [VertexLabel(n, x) for x in range(1 << n)]


def fq_edges(n: int) -> list[EdgeRef]:
    """All edges of FQ_n: n * 2^(n-1) dimension edges, then 2^(n-1) complementary ones."""
    _require_folded(n)
    out = []
    for t in range(1, n + 1):
        m = bit_mask(n, t)
        out.extend(EdgeRef(VertexLabel(n, x), VertexLabel(n, x | m), t)
                   for x in range(1 << n) if not x & m)
    top = bit_mask(n, 1)
    out.extend(EdgeRef(VertexLabel(n, x), VertexLabel(n, x ^ full_mask(n)), 0)
               for x in range(top))
    return out


def _prefix_value(prefix: str | Iterable[int]) -> tuple[int, int]:
    digits = [int(b) for b in prefix]
    if any(d not in (0, 1) for d in digits):
        raise ValueError(f"not a bit string: {prefix!r}")
    value = 0
    for d in digits:
        value = (value << 1) | d
    return len(digits), value


def subcube_vertices(n: int, prefix: str | Iterable[int]) -> frozenset[VertexLabel]:
    """Vertices of F^n_prefix: all n-bit labels starting with ``prefix``."""
    m, p = _prefix_value(prefix)
    if not 1 <= m < n:
        raise ValueError(f"prefix length must be in 1..{n - 1}, got {m}")
    shift = n - m
    return frozenset(VertexLabel(n, (p << shift) | s) for s in range(1 << shift))


def subcube_project(v: VertexLabel, m: int) -> VertexLabel:
    """Drop the first m coordinates: x_1...x_n -> x_{m+1}...x_n."""
    if not 1 <= m < v.n:
        raise ValueError(f"m must be in 1..{v.n - 1}, got {m}")
    k = v.n - m
    return VertexLabel(k, v.value & full_mask(k))


@dataclass(frozen=True)
class IsomorphismCheck:
    name: str
    passed: bool
    detail: str


def check_small_isomorphisms() -> list[IsomorphismCheck]:
    """Structural checks that FQ_2 is K_4 and FQ_3 is K_{4,4}."""
    checks = []

    v2 = vertices(2)
    pairs = list(combinations(v2, 2))
    adjacent = sum(is_fq_edge(a, b) for a, b in pairs)
    checks.append(IsomorphismCheck(
        "FQ_2 = K_4", adjacent == len(pairs) == 6,
        f"{adjacent} of {len(pairs)} vertex pairs adjacent"))

    v3 = vertices(3)
    even = [x for x in v3 if x.value.bit_count() % 2 == 0]
    odd = [x for x in v3 if x.value.bit_count() % 2 == 1]
    cross = sum(is_fq_edge(a, b) for a in even for b in odd)
    inner = sum(is_fq_edge(a, b) for cls in (even, odd) for a, b in combinations(cls, 2))
    checks.append(IsomorphismCheck(
        "FQ_3 = K_4,4", len(even) == len(odd) == 4 and cross == 16 and inner == 0,
        f"parts {[str(x) for x in even]} / {[str(x) for x in odd]}: "
        f"{cross} cross edges, {inner} intra-part edges"))
    checks.append(IsomorphismCheck(
        "FQ_3 edge count", len(fq_edges(3)) == 16, f"{len(fq_edges(3))} edges"))
    return checks
