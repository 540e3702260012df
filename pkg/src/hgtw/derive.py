"""Graphs derived from hypergraphs: 2-section, dual, line graph, and the
clique-cover inverse that turns any graph into a linear hypergraph whose
2-section is the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .core import Hypergraph, build_hypergraph, is_linear
from .errors import (
    HgtwError,
    IsolatedVertexError,
    NotLinearError,
    NotTwoRegularError,
)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    norm = set()
    for u, v in edges:
        if u == v:
            raise HgtwError("self-loop at vertex %d" % u)
        if not (0 <= u < n and 0 <= v < n):
            raise HgtwError("edge (%d,%d) out of range" % (u, v))
        norm.add((min(u, v), max(u, v)))
    return Graph(n=n, edges=frozenset(norm))


def two_section(h: Hypergraph) -> Graph:
    edges = set()
    for f in h.edges:
        verts = sorted(f)
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                edges.add((verts[i], verts[j]))
    return Graph(n=h.n, edges=frozenset(edges))


@dataclass(frozen=True)
class DualFamily:
    """Raw dual construction: one edge per original vertex.

    The result is only a valid hypergraph when every original vertex has
    degree >= 2 and no incidence star contains another; ``valid`` reports
    this instead of assuming it.
    """

    n: int  # vertex count of the dual = edge count of the original
    edges: tuple[frozenset[int], ...]
    valid: bool
    problems: tuple[str, ...]

    def to_hypergraph(self) -> Hypergraph:
        if not self.valid:
            raise HgtwError("dual family is not a valid hypergraph: %s"
                            % "; ".join(self.problems))
        return build_hypergraph(self.n, self.edges)


def dual(h: Hypergraph) -> DualFamily:
    family = tuple(h.degree_index[v] for v in range(h.n))
    problems = []
    for v, g in enumerate(family):
        if len(g) < 2:
            problems.append("dual edge of vertex %d has size %d" % (v, len(g)))
    for i, f in enumerate(family):
        for j, g in enumerate(family):
            if i != j and f <= g and not problems:
                problems.append("dual edge %d nested in %d" % (i, j))
    covered = set()
    for g in family:
        covered |= g
    if covered != set(range(h.m)):
        problems.append("some edge ids never appear as dual vertices")
    return DualFamily(n=h.m, edges=family, valid=not problems,
                      problems=tuple(problems))


def line_graph(h: Hypergraph) -> Graph:
    edges = set()
    for i in range(h.m):
        for j in range(i + 1, h.m):
            if h.edges[i] & h.edges[j]:
                edges.add((i, j))
    return Graph(n=h.m, edges=frozenset(edges))


class WitnessKind(Enum):
    TWO_SECTION_VS_DUAL_LINE_GRAPH = "two_section_vs_dual_line_graph"
    DUAL_VS_LINE_GRAPH = "dual_vs_line_graph"


@dataclass(frozen=True)
class BijectionWitness:
    kind: WitnessKind
    mapping: tuple[tuple[int, int], ...]
    verified: bool


def _require_two_regular_linear(h: Hypergraph):
    if not is_linear(h):
        raise NotLinearError("hypergraph is not linear")
    for v in range(h.n):
        if h.degree(v) != 2:
            raise NotTwoRegularError("vertex %d has degree %d" % (v, h.degree(v)))


def _graphs_equal_under(a: Graph, b: Graph, mapping: dict[int, int]) -> bool:
    if a.n != b.n or len(mapping) != a.n:
        return False
    mapped = frozenset((min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                       for u, v in a.edges)
    return mapped == b.edges


def witness_two_section_is_dual_line_graph(h: Hypergraph) -> BijectionWitness:
    """For a 2-regular linear H: the 2-section equals the line graph of the
    dual, vertex v mapping to the dual edge made from its incidence star."""
    _require_two_regular_linear(h)
    d = dual(h)
    # Line graph of the dual: one vertex per dual edge g_v, v = 0..n-1.
    lg_edges = set()
    for i in range(h.n):
        for j in range(i + 1, h.n):
            if d.edges[i] & d.edges[j]:
                lg_edges.add((i, j))
    lg = Graph(n=h.n, edges=frozenset(lg_edges))
    mapping = {v: v for v in range(h.n)}
    ok = _graphs_equal_under(two_section(h), lg, mapping)
    return BijectionWitness(kind=WitnessKind.TWO_SECTION_VS_DUAL_LINE_GRAPH,
                            mapping=tuple(sorted(mapping.items())),
                            verified=ok)


def witness_dual_is_line_graph(h: Hypergraph) -> BijectionWitness:
    """For a 2-regular linear H: the dual, read as a graph on edge ids, has
    the same edge set as the line graph of H."""
    _require_two_regular_linear(h)
    d = dual(h)
    dual_as_graph = set()
    for g in d.edges:
        pair = sorted(g)
        if len(pair) != 2:
            raise NotTwoRegularError("dual edge has size %d" % len(pair))
        dual_as_graph.add((pair[0], pair[1]))
    dg = Graph(n=h.m, edges=frozenset(dual_as_graph))
    mapping = {e: e for e in range(h.m)}
    ok = _graphs_equal_under(dg, line_graph(h), mapping)
    return BijectionWitness(kind=WitnessKind.DUAL_VS_LINE_GRAPH,
                            mapping=tuple(sorted(mapping.items())),
                            verified=ok)


def _maximal_cliques(n: int, adj: list[set[int]]):
    """Bron-Kerbosch with pivoting; fine at desk scale."""
    cliques = []

    def expand(r: set[int], p: set[int], x: set[int]):
        if not p and not x:
            cliques.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return cliques


def linear_cover(g: Graph) -> Hypergraph:
    """Greedy clique packing: repeatedly take a largest clique whose pairs
    are still uncovered; leftover edges become 2-element hyperedges.

    The chosen cliques automatically intersect pairwise in at most one
    vertex, since two shared vertices would mean an already-covered pair.
    """
    degs = g.degrees()
    for v in range(g.n):
        if degs[v] == 0:
            raise IsolatedVertexError("vertex %d is isolated" % v)
    uncovered = set(g.edges)
    hyperedges: list[frozenset[int]] = []
    while uncovered:
        adj: list[set[int]] = [set() for _ in range(g.n)]
        for u, v in uncovered:
            adj[u].add(v)
            adj[v].add(u)
        # largest clique first, ties broken by smallest vertex ids
        candidates = [c for c in _maximal_cliques(g.n, adj) if len(c) >= 2]
        candidates.sort(key=lambda c: (-len(c), sorted(c)))
        best = candidates[0]
        hyperedges.append(frozenset(best))
        bl = sorted(best)
        for i in range(len(bl)):
            for j in range(i + 1, len(bl)):
                uncovered.discard((bl[i], bl[j]))
    return build_hypergraph(g.n, hyperedges)
