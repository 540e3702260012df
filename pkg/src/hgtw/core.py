"""Hypergraph representation, validation and degree/rank statistics.

Vertices are dense integer ids 0..n-1, edges are indexed 0..m-1 in the
order they were supplied.  Average ranks and everything derived from them
are exact `Fraction`s: several of the width bounds are strict inequalities
and must not be blurred by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import (
    BadSubsetError,
    LoopEdgeError,
    NestedEdgeError,
    OutOfRangeVertexError,
    OverlappingSetsError,
    TooLargeError,
    UncoveredVertexError,
)

MINIMALITY_EDGE_CAP = 20


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[frozenset[int], ...]
    degree_index: tuple[frozenset[int], ...]
    labels: Optional[tuple[str, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.degree_index[v])

    def incident_edges(self, v: int) -> frozenset[int]:
        return self.degree_index[v]

    def edge_sizes(self) -> list[int]:
        return [len(f) for f in self.edges]


@dataclass(frozen=True)
class HypergraphStats:
    n: int
    m: int
    rank: int
    anti_rank: int
    max_degree: int
    min_degree: int
    avg_rank: Fraction
    is_linear: bool
    regular: Optional[int]


@dataclass(frozen=True)
class SigmaProfile:
    """Counts of vertices by total degree and degree inside an edge set.

    ``counts[(i, j)]`` is the number of degree-i vertices with exactly j
    incident edges in X (j >= 1 entries only; zero counts omitted).
    ``joint_counts[(i, j, l)]`` additionally splits by the degree inside a
    second, disjoint edge set Y.
    """

    counts: dict[tuple[int, int], int]
    joint_counts: Optional[dict[tuple[int, int, int], int]]
    degree_range: tuple[int, int]

    def sigma(self, i: int, j: int) -> int:
        return self.counts.get((i, j), 0)

    def sigma_joint(self, i: int, j: int, l: int) -> int:
        if self.joint_counts is None:
            raise ValueError("profile built without a second edge set")
        return self.joint_counts.get((i, j, l), 0)


def build_hypergraph(n: int, edges: Iterable[Iterable[int]],
                     labels: Optional[Iterable[str]] = None) -> Hypergraph:
    edge_sets = tuple(frozenset(e) for e in edges)
    for idx, f in enumerate(edge_sets):
        if len(f) < 2:
            raise LoopEdgeError("edge %d has size %d" % (idx, len(f)))
        for v in f:
            if not (0 <= v < n):
                raise OutOfRangeVertexError(
                    "edge %d contains vertex %d outside 0..%d" % (idx, v, n - 1))
    for i, f in enumerate(edge_sets):
        for j, g in enumerate(edge_sets):
            if i != j and f <= g:
                raise NestedEdgeError(
                    "edge %d is contained in edge %d" % (i, j))
    incident: list[set[int]] = [set() for _ in range(n)]
    for idx, f in enumerate(edge_sets):
        for v in f:
            incident[v].add(idx)
    for v in range(n):
        if not incident[v]:
            raise UncoveredVertexError("vertex %d lies in no edge" % v)
    label_tuple = tuple(labels) if labels is not None else None
    return Hypergraph(n=n, edges=edge_sets,
                      degree_index=tuple(frozenset(s) for s in incident),
                      labels=label_tuple)


def is_linear(h: Hypergraph) -> bool:
    for i in range(h.m):
        for j in range(i + 1, h.m):
            if len(h.edges[i] & h.edges[j]) > 1:
                return False
    return True


def stats(h: Hypergraph) -> HypergraphStats:
    sizes = h.edge_sizes()
    degrees = [h.degree(v) for v in range(h.n)]
    dmax, dmin = max(degrees), min(degrees)
    return HypergraphStats(
        n=h.n,
        m=h.m,
        rank=max(sizes),
        anti_rank=min(sizes),
        max_degree=dmax,
        min_degree=dmin,
        avg_rank=Fraction(sum(sizes), h.m),
        is_linear=is_linear(h),
        regular=dmax if dmax == dmin else None,
    )


def sigma_counts(h: Hypergraph, x: Iterable[int],
                 y: Optional[Iterable[int]] = None) -> SigmaProfile:
    xs = frozenset(x)
    ys = frozenset(y) if y is not None else None
    if ys is not None and xs & ys:
        raise OverlappingSetsError("edge sets intersect: %s" % sorted(xs & ys))
    counts: dict[tuple[int, int], int] = {}
    joint: Optional[dict[tuple[int, int, int], int]] = {} if ys is not None else None
    degrees = [h.degree(v) for v in range(h.n)]
    for v in range(h.n):
        i = degrees[v]
        j = len(h.degree_index[v] & xs)
        if j >= 1:
            counts[(i, j)] = counts.get((i, j), 0) + 1
        if joint is not None:
            l = len(h.degree_index[v] & ys)
            if j >= 1 or l >= 1:
                joint[(i, j, l)] = joint.get((i, j, l), 0) + 1
    return SigmaProfile(counts=counts, joint_counts=joint,
                        degree_range=(min(degrees), max(degrees)))


def avg_rank_after_removal(h: Hypergraph, s: Iterable[int]) -> Fraction:
    """Average rank restricted to vertices untouched by the removed set."""
    ss = frozenset(s)
    if not ss or len(ss) >= h.m:
        raise BadSubsetError("need a nonempty proper subset of edges")
    if not ss <= set(range(h.m)):
        raise BadSubsetError("unknown edge ids: %s" % sorted(ss - set(range(h.m))))
    total = sum(h.degree(v) for v in range(h.n)
                if not (h.degree_index[v] & ss))
    return Fraction(total, h.m - len(ss))


def is_minimal(h: Hypergraph, cap: int = MINIMALITY_EDGE_CAP) -> bool:
    """Exhaustively test that removing any edge subset drops the ratio."""
    if h.m > cap:
        raise TooLargeError("m=%d exceeds enumeration cap %d" % (h.m, cap))
    if h.m == 1:
        return True
    l_h = Fraction(sum(h.edge_sizes()), h.m)
    degrees = [h.degree(v) for v in range(h.n)]
    masks = [0] * h.n
    for v in range(h.n):
        for e in h.degree_index[v]:
            masks[v] |= 1 << e
    for smask in range(1, (1 << h.m) - 1):
        size = smask.bit_count()
        total = sum(degrees[v] for v in range(h.n) if not (masks[v] & smask))
        if Fraction(total, h.m - size) >= l_h:
            return False
    return True
