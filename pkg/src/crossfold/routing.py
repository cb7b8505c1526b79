"""Canonical paths in FQ_n and the congestion of routing 2K_{2^n} along them.

Every ordered pair (u, v) gets one path.  When u and v agree on few
coordinates the path first takes the complementary edge and then fixes the
remaining coordinates; otherwise it fixes the differing coordinates directly.
Either way coordinates are fixed in increasing index order.  Routing both
(u, v) and (v, u) realizes the two parallel edges of 2K_{2^n}, with the
vertex bijection taken as the identity (loads depend only on endpoints).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .combinatorics import binomial
from .hypercube import DimensionMismatch, EdgeRef, VertexLabel, agreement, full_mask

CENSUS_MAX_N = 12


@dataclass(frozen=True)
class CanonicalPath:
    vertices: tuple[VertexLabel, ...]
    dims: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.dims)


def path_values(n: int, u: int, v: int) -> tuple[list[int], list[int]]:
    """Decimal vertex sequence and dimension sequence of the canonical u -> v path."""
    if u == v:
        raise ValueError("identical endpoints")
    full = (1 << n) - 1
    agree = n - (u ^ v).bit_count()
    if agree <= n // 2 - 1:
        cur = u ^ full
        verts, dims = [u, cur], [0]
    else:
        cur = u
        verts, dims = [u], []
    todo = cur ^ v
    for t in range(1, n + 1):
        b = 1 << (n - t)
        if todo & b:
            cur ^= b
            verts.append(cur)
            dims.append(t)
    return verts, dims


def canonical_path(u: VertexLabel, v: VertexLabel) -> CanonicalPath:
    if u.n != v.n:
        raise DimensionMismatch(f"{u} has n={u.n}, {v} has n={v.n}")
    if u.n < 2:
        raise ValueError("paths need n >= 2")
    verts, dims = path_values(u.n, u.value, v.value)
    return CanonicalPath(tuple(VertexLabel(u.n, x) for x in verts), tuple(dims))


def expected_length(u: VertexLabel, v: VertexLabel) -> int:
    agree = agreement(u, v)
    return agree + 1 if agree <= u.n // 2 - 1 else u.n - agree


def path_problems(n: int, u: int, v: int, verts: list[int], dims: list[int]) -> list[str]:
    """Everything wrong with ``verts``/``dims`` as the canonical u -> v path; empty if valid."""
    full = (1 << n) - 1
    bad = []
    if not verts or verts[0] != u or verts[-1] != v:
        bad.append("wrong endpoints")
    if len(set(verts)) != len(verts):
        bad.append("not simple")
    if len(dims) != len(verts) - 1:
        return bad + ["dims do not match vertices"]
    for k, (a, b) in enumerate(zip(verts, verts[1:])):
        diff = a ^ b
        if diff == full:
            dim = 0
        elif diff and diff & (diff - 1) == 0:
            dim = n - diff.bit_length() + 1
        else:
            bad.append(f"step {k} is not an FQ_n edge")
            continue
        if dims[k] != dim:
            bad.append(f"step {k} has dimension {dim}, recorded {dims[k]}")
    agree = n - bin(u ^ v).count("1")
    short = agree <= n // 2 - 1
    want = agree + 1 if short else n - agree
    if len(dims) != want:
        bad.append(f"length {len(dims)}, expected {want}")
    tail = dims[1:] if short else dims
    if short and (not dims or dims[0] != 0):
        bad.append("must open with the complementary edge")
    if any(t < 1 for t in tail) or any(a >= b for a, b in zip(tail, tail[1:])):
        bad.append(f"dimensions {dims} not strictly increasing and positive after the start")
    return bad


# --------------------------------------------------------------------------
# census


def _popcount(a: np.ndarray) -> np.ndarray:
    out = np.zeros_like(a)
    x = a.copy()
    while x.any():
        out += x & 1
        x >>= 1
    return out


def census_loads(n: int, sources: np.ndarray | None = None) -> np.ndarray:
    """Per-edge loads from routing every pair (u, v) with u in ``sources`` and v != u.

    Returns an (n + 1, 2^n) array: row t >= 1 is indexed by the endpoint of a
    dimension-t edge with bit t cleared, row 0 by the smaller endpoint of a
    complementary edge.  Loads from disjoint source sets add.
    """
    size = 1 << n
    full = size - 1
    if sources is None:
        sources = np.arange(size, dtype=np.int64)
    loads = np.zeros((n + 1, size), dtype=np.int64)
    targets = np.arange(size, dtype=np.int64)
    chunk = max(1, (1 << 18) // size)
    for start in range(0, len(sources), chunk):
        us = np.asarray(sources[start:start + chunk], dtype=np.int64)
        u = np.repeat(us, size)
        v = np.tile(targets, len(us))
        keep = u != v
        u, v = u[keep], v[keep]
        agree = n - _popcount(u ^ v)
        via_comp = agree <= n // 2 - 1
        cur = np.where(via_comp, u ^ full, u)
        loads[0] += np.bincount(np.minimum(u, u ^ full)[via_comp], minlength=size)
        todo = cur ^ v
        for t in range(1, n + 1):
            b = 1 << (n - t)
            step = (todo & b) != 0
            loads[t] += np.bincount(cur[step] & ~b, minlength=size)
            cur = cur ^ (todo & b)
    return loads


def census_path_length_total(n: int) -> int:
    """Sum of canonical path lengths over all ordered pairs, counted by agreement class."""
    total = 0
    for agree in range(n):
        length = agree + 1 if agree <= n // 2 - 1 else n - agree
        # ordered pairs agreeing on exactly `agree` coordinates
        total += (1 << n) * binomial(n, agree) * length
    return total


@dataclass(frozen=True)
class ClassSummary:
    min: int
    max: int
    count: int


@dataclass(frozen=True, eq=False)
class CongestionCensus:
    n: int
    loads: np.ndarray

    @cached_property
    def per_edge(self) -> dict[EdgeRef, int]:
        out = {}
        size = 1 << self.n
        for t in range(self.n + 1):
            for x in range(size):
                if t == 0:
                    if x >= size >> 1:
                        continue
                    y = x ^ full_mask(self.n)
                else:
                    b = 1 << (self.n - t)
                    if x & b:
                        continue
                    y = x | b
                out[EdgeRef(VertexLabel(self.n, x), VertexLabel(self.n, y), t)] = int(self.loads[t, x])
        return out

    def _row(self, t: int) -> np.ndarray:
        size = 1 << self.n
        if t == 0:
            return self.loads[0, : size >> 1]
        b = 1 << (self.n - t)
        return self.loads[t][(np.arange(size) & b) == 0]

    @cached_property
    def class_summary(self) -> dict[int, ClassSummary]:
        out = {}
        for t in range(self.n + 1):
            row = self._row(t)
            out[t] = ClassSummary(int(row.min()), int(row.max()), len(row))
        return out

    @property
    def max_congestion(self) -> int:
        return max(s.max for s in self.class_summary.values())

    @property
    def total_load(self) -> int:
        return int(self.loads.sum())

    def witness(self) -> EdgeRef:
        """Some edge carrying the maximum load."""
        top = self.max_congestion
        for e, load in self.per_edge.items():
            if load == top:
                return e
        raise AssertionError("unreachable")

    def uniform_class_values(self) -> tuple[int | None, int | None]:
        """(Dim-0 load, dimension-edge load) when each class is uniform, else None for that class."""
        s = self.class_summary
        dim0 = s[0].min if s[0].min == s[0].max else None
        lo = min(s[t].min for t in range(1, self.n + 1))
        hi = max(s[t].max for t in range(1, self.n + 1))
        return dim0, (lo if lo == hi else None)

    def to_json(self) -> dict:
        dim0, dimt = self.uniform_class_values()
        bound = claimed_global_bound(self.n)
        s = self.class_summary
        return {
            "n": self.n,
            "classes": {
                "0": {"cg": dim0, "count": s[0].count},
                "t": {"cg": dimt, "count": sum(s[t].count for t in range(1, self.n + 1))},
            },
            "max": self.max_congestion,
            "bound1": bound,
            "bound1_holds": self.max_congestion <= bound,
        }


def congestion_census(n: int, *, chunks: int = 1) -> CongestionCensus:
    """Exhaustive census over all 2^n (2^n - 1) ordered pairs.

    ``chunks`` splits the sources into independent parts whose loads are
    summed; the result does not depend on it.
    """
    if not 2 <= n <= CENSUS_MAX_N:
        raise ValueError(f"census needs 2 <= n <= {CENSUS_MAX_N}, got {n}")
    parts = np.array_split(np.arange(1 << n, dtype=np.int64), chunks)
    loads = sum(census_loads(n, part) for part in parts if len(part))
    return CongestionCensus(n, loads)


# --------------------------------------------------------------------------
# closed forms and the audit


def class_formula(n: int, cls: str) -> int:
    """Load of every Dim-0 edge (``"dim0"``) or every dimension edge (``"dimt"``)."""
    if n < 2:
        raise ValueError(n)
    h = n // 2
    if cls == "dim0":
        return 2 * sum(binomial(n, k) for k in range(h))
    if cls == "dimt":
        return 2 * ((1 << (n - 1)) - binomial(n - 1, h - 1))
    raise ValueError(f"unknown edge class {cls!r}")


def claimed_global_bound(n: int) -> int:
    """2^n - C(n, floor(n/2))."""
    if n < 1:
        raise ValueError(n)
    return (1 << n) - binomial(n, n // 2)


@dataclass(frozen=True)
class Inequality1Audit:
    n: int
    holds: bool
    max_measured: int
    bound: int
    witness: EdgeRef | None
    source: str


def audit_inequality_1(n: int) -> Inequality1Audit:
    """Measured maximum edge load against 2^n - C(n, floor(n/2)).

    Measured by exhaustive census up to CENSUS_MAX_N, beyond that from the
    per-class counting formulas.
    """
    bound = claimed_global_bound(n)
    if n <= CENSUS_MAX_N:
        census = congestion_census(n)
        top, source = census.max_congestion, "census"
        witness = census.witness() if top > bound else None
    else:
        top = max(class_formula(n, "dim0"), class_formula(n, "dimt"))
        source = "formula"
        witness = None
        if top > bound:
            b = 1 << (n - 1)
            witness = EdgeRef(VertexLabel(n, 0), VertexLabel(n, b), 1)
    return Inequality1Audit(n, top <= bound, top, bound, witness, source)
