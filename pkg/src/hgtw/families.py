"""Generators for the graph and hypergraph families used throughout the
test corpus: path/cycle powers, their duals, duals of arbitrary graphs,
and seeded random linear hypergraphs."""

from __future__ import annotations

import random
from typing import Optional

from .core import Hypergraph, build_hypergraph, is_linear
from .derive import Graph, make_graph
from .errors import (
    BadParamsError,
    InfeasibleError,
    MinDegreeTooLowError,
    NotLinearError,
)


def path_power(n: int, k: int) -> Graph:
    if k < 1 or n < k + 2:
        raise BadParamsError("need k >= 1 and n >= k + 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, min(i + k + 1, n))]
    return make_graph(n, edges)


def cycle_power(n: int, k: int) -> Graph:
    if k < 1 or n < 2 * k + 2:
        raise BadParamsError("need k >= 1 and n >= 2k + 2")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if min(j - i, i + n - j) <= k]
    return make_graph(n, edges)


def graph_dual(g: Graph) -> Hypergraph:
    """Hyperedges are the vertex stars of g; always 2-regular and linear
    when g is simple with minimum degree 2."""
    if g.n == 0 or min(g.degrees()) < 2:
        raise MinDegreeTooLowError("dual needs minimum degree >= 2")
    edge_list = sorted(g.edges)
    edge_id = {e: i for i, e in enumerate(edge_list)}
    stars = []
    for v in range(g.n):
        stars.append(sorted(edge_id[tuple(sorted((v, u)))]
                            for u in g.adjacency()[v]))
    labels = ["v_{%d,%d}" % (a, b) for a, b in edge_list]
    h = build_hypergraph(len(edge_list), stars, labels=labels)
    if not is_linear(h):
        raise NotLinearError("dual of a non-simple graph")
    return h


def path_power_dual(n: int, k: int) -> Hypergraph:
    """2-regular linear hypergraph whose 2-section is the line graph of
    the k-th power of the n-vertex path; vertices carry v_{i,j} labels."""
    g = path_power(n, k)
    if k == 1:
        # endpoint stars have size 1 and nest inside their neighbours
        raise BadParamsError("k = 1 gives nested endpoint edges")
    return graph_dual(g)


def _cycle_matchings(n: int, k: int) -> tuple[list[tuple[int, int]],
                                              list[tuple[int, int]]]:
    # 0-indexed forms of {i(n-k+i) : i = 1..k} and {(k+1)(k+2), ...}
    x1 = [(i, n - k + i) for i in range(k)]
    x2 = [(a, a + 1) for a in range(k, n - k - 1, 2)]
    return x1, x2


def cycle_power_dual(n: int, k: int, odd_variant: bool = False) -> Hypergraph:
    """Dual of the k-th cycle power; anti-rank 2k, or 2k - 1 with the
    odd variant which removes one or two perfect matchings first."""
    g = cycle_power(n, k)
    if not odd_variant:
        return graph_dual(g)
    x1, x2 = _cycle_matchings(n, k)
    removed = list(x1) if n % 2 == 1 else list(x1) + list(x2)
    removed_set = {tuple(sorted(e)) for e in removed}
    if len(removed_set) != len(removed):
        raise BadParamsError("matchings overlap for these parameters")
    touched: set[int] = set()
    for a, b in removed_set:
        if a in touched or b in touched:
            raise BadParamsError("removed edges do not form a matching")
        touched.add(a)
        touched.add(b)
        if tuple(sorted((a, b))) not in g.edges:
            raise BadParamsError("matching edge absent from the cycle power")
    kept = [e for e in g.edges if e not in removed_set]
    h = graph_dual(make_graph(n, kept))
    s = min(h.edge_sizes())
    if s != 2 * k - 1:
        raise BadParamsError("variant yields anti-rank %d, wanted %d"
                             % (s, 2 * k - 1))
    return h


def random_linear(n: int, m: int, target_rank: int, min_degree: int,
                  seed: int, attempts: int = 200) -> Hypergraph:
    """Seeded greedy pair-disjoint edge packing; deterministic in seed."""
    if n < 2 or m < 1 or target_rank < 2 or target_rank > n:
        raise BadParamsError("need n >= 2, m >= 1, 2 <= rank <= n")
    budget = n * (n - 1) // 2
    need = m * target_rank * (target_rank - 1) // 2
    if need > budget:
        raise InfeasibleError(
            "pair budget %d below the %d pairs required" % (budget, need))
    rng = random.Random(seed)
    for _ in range(attempts):
        used_pairs: set[frozenset[int]] = set()
        edges: list[list[int]] = []
        ok = True
        for _ in range(m):
            edge = _grow_edge(n, target_rank, used_pairs, rng)
            if edge is None:
                ok = False
                break
            for i in range(len(edge)):
                for j in range(i + 1, len(edge)):
                    used_pairs.add(frozenset((edge[i], edge[j])))
            edges.append(sorted(edge))
        if not ok:
            continue
        covered = {v for e in edges for v in e}
        if len(covered) != n:
            continue
        h = build_hypergraph(n, edges)
        if min(h.degree(v) for v in range(n)) >= min_degree:
            return h
    raise InfeasibleError("no admissible packing after %d attempts" % attempts)


def _grow_edge(n: int, rank: int, used_pairs: set[frozenset[int]],
               rng: random.Random) -> Optional[list[int]]:
    for _ in range(60):
        start = rng.randrange(n)
        edge = [start]
        pool = list(range(n))
        rng.shuffle(pool)
        for v in pool:
            if len(edge) == rank:
                break
            if v in edge:
                continue
            if all(frozenset((v, u)) not in used_pairs for u in edge):
                edge.append(v)
        if len(edge) == rank:
            return edge
    return None
