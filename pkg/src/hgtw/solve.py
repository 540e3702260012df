"""Exact treewidth at desk scale.

The main solver searches elimination orderings: heuristic upper bound,
contraction-based lower bound, then an iterative-deepening decision search
with memoized dead states.  A plain permutation search over all orderings
serves as an independent oracle for tiny graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Union

from .core import Hypergraph
from .decomp import SupertreeDecomposition, TreeDecomposition, validate_std, validate_td
from .derive import Graph, line_graph
from .errors import TooLargeError

EXACT_VERTEX_LIMIT = 25
BRUTE_FORCE_LIMIT = 8


@dataclass
class WidthResult:
    width: int
    certificate: Union[TreeDecomposition, SupertreeDecomposition, None]
    method: str
    elapsed: float
    exceeded_cap: bool = False


# ---------------------------------------------------------------------------
# adjacency-dict helpers

def _adj_of(g: Graph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _components(adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            t = stack.pop()
            comp.append(t)
            for u in adj[t]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def _eliminate(adj: dict[int, set[int]], v: int) -> None:
    nbrs = adj[v]
    for a in nbrs:
        adj[a].discard(v)
    nl = sorted(nbrs)
    for i in range(len(nl)):
        for j in range(i + 1, len(nl)):
            adj[nl[i]].add(nl[j])
            adj[nl[j]].add(nl[i])
    del adj[v]


def _copy(adj: dict[int, set[int]]) -> dict[int, set[int]]:
    return {v: set(s) for v, s in adj.items()}


def _fill_count(adj: dict[int, set[int]], v: int) -> int:
    nl = sorted(adj[v])
    cnt = 0
    for i in range(len(nl)):
        for j in range(i + 1, len(nl)):
            if nl[j] not in adj[nl[i]]:
                cnt += 1
    return cnt


# ---------------------------------------------------------------------------
# heuristics and lower bound

def _greedy_order(adj: dict[int, set[int]], mode: str) -> tuple[list[int], int]:
    adj = _copy(adj)
    order = []
    width = 0
    while adj:
        if mode == "fill":
            v = min(adj, key=lambda u: (_fill_count(adj, u), len(adj[u]), u))
        else:
            v = min(adj, key=lambda u: (len(adj[u]), u))
        width = max(width, len(adj[v]))
        order.append(v)
        _eliminate(adj, v)
    return order, width


def _mmd_lower_bound(adj: dict[int, set[int]]) -> int:
    """Minor-min-width: contract a minimum-degree vertex into the neighbor
    sharing the fewest common neighbors; track the largest minimum degree."""
    adj = _copy(adj)
    lb = 0
    while len(adj) > 1:
        v = min(adj, key=lambda u: (len(adj[u]), u))
        d = len(adj[v])
        lb = max(lb, d)
        if d == 0:
            del adj[v]
            continue
        u = min(adj[v], key=lambda w: (len(adj[w] & adj[v]), w))
        # contract v into u
        for w in adj[v]:
            adj[w].discard(v)
            if w != u:
                adj[u].add(w)
                adj[w].add(u)
        del adj[v]
    return lb


# ---------------------------------------------------------------------------
# decision search

def _decide(adj0: dict[int, set[int]], k: int) -> Optional[list[int]]:
    """Elimination order witnessing treewidth <= k, or None."""
    failed: set[frozenset[int]] = set()

    def rec(adj: dict[int, set[int]]) -> Optional[list[int]]:
        if len(adj) <= k + 1:
            return sorted(adj)
        key = frozenset(adj)
        if key in failed:
            return None
        # safe reductions: simplicial vertices
        for v in sorted(adj):
            nbrs = adj[v]
            d = len(nbrs)
            nl = sorted(nbrs)
            simplicial = all(nl[j] in adj[nl[i]]
                             for i in range(d) for j in range(i + 1, d))
            if simplicial:
                if d > k:
                    failed.add(key)
                    return None
                nxt = _copy(adj)
                _eliminate(nxt, v)
                rest = rec(nxt)
                if rest is None:
                    failed.add(key)
                    return None
                return [v] + rest
        cands = [v for v in adj if len(adj[v]) <= k]
        cands.sort(key=lambda v: (_fill_count(adj, v), len(adj[v]), v))
        for v in cands:
            nxt = _copy(adj)
            _eliminate(nxt, v)
            rest = rec(nxt)
            if rest is not None:
                return [v] + rest
        failed.add(key)
        return None

    return rec(adj0)


def _order_width(adj: dict[int, set[int]], order: list[int]) -> int:
    adj = _copy(adj)
    w = 0
    for v in order:
        w = max(w, len(adj[v]))
        _eliminate(adj, v)
    return w


def _td_from_order(adj: dict[int, set[int]], order: list[int],
                   node_base: int) -> TreeDecomposition:
    """Clique-tree construction from an elimination order of one component."""
    adj = _copy(adj)
    pos = {v: i for i, v in enumerate(order)}
    bag_of: dict[int, frozenset[int]] = {}
    later_nbrs: dict[int, list[int]] = {}
    for v in order:
        nbrs = sorted(adj[v])
        bag_of[v] = frozenset([v] + nbrs)
        later_nbrs[v] = nbrs
        _eliminate(adj, v)
    nodes = [node_base + i for i in range(len(order))]
    bags = {node_base + i: bag_of[v] for i, v in enumerate(order)}
    edges = []
    for i, v in enumerate(order):
        if later_nbrs[v]:
            parent_vertex = min(later_nbrs[v], key=lambda u: pos[u])
            edges.append((node_base + i, node_base + pos[parent_vertex]))
    return TreeDecomposition(nodes=nodes, tree_edges=edges, bags=bags,
                             root=nodes[-1])


def _join_tds(parts: list[TreeDecomposition]) -> TreeDecomposition:
    nodes: list[int] = []
    edges: list[tuple[int, int]] = []
    bags: dict[int, frozenset[int]] = {}
    anchors = []
    for td in parts:
        nodes += td.nodes
        edges += td.tree_edges
        bags.update(td.bags)
        anchors.append(td.root if td.root is not None else td.nodes[0])
    for a, b in zip(anchors, anchors[1:]):
        edges.append((a, b))
    return TreeDecomposition(nodes=nodes, tree_edges=edges, bags=bags,
                             root=anchors[0])


def exact_treewidth(g: Graph, cap: Optional[int] = None,
                    limit: int = EXACT_VERTEX_LIMIT) -> WidthResult:
    started = time.monotonic()
    if g.n == 0:
        raise TooLargeError("empty graph has no treewidth")
    if g.n > limit:
        raise TooLargeError("n=%d exceeds exact limit %d" % (g.n, limit))
    adj = _adj_of(g)
    parts: list[TreeDecomposition] = []
    total = 0
    node_base = 0
    for comp in _components(adj):
        sub = {v: adj[v] & set(comp) for v in comp}
        order_f, ub_f = _greedy_order(sub, "fill")
        order_d, ub_d = _greedy_order(sub, "degree")
        order, ub = (order_f, ub_f) if ub_f <= ub_d else (order_d, ub_d)
        lb = _mmd_lower_bound(sub) if len(comp) > 1 else 0
        if cap is not None and lb > cap:
            return WidthResult(width=lb, certificate=None, method="bb",
                               elapsed=time.monotonic() - started,
                               exceeded_cap=True)
        k = lb
        while k < ub:
            found = _decide(sub, k)
            if found is not None:
                order, ub = found, k
                break
            k += 1
        total = max(total, ub)
        td = _td_from_order(sub, order, node_base)
        node_base += len(order)
        parts.append(td)
    cert = _join_tds(parts)
    return WidthResult(width=total, certificate=cert, method="bb",
                       elapsed=time.monotonic() - started)


def brute_force_treewidth(g: Graph) -> int:
    """Minimum over all elimination orderings of the largest degree at
    elimination time; plain depth-first enumeration."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise TooLargeError("n=%d exceeds brute-force limit %d"
                            % (g.n, BRUTE_FORCE_LIMIT))
    adj = _adj_of(g)
    best = g.n - 1

    def rec(adj: dict[int, set[int]], cur: int):
        nonlocal best
        if cur >= best:
            return
        if len(adj) <= 1:
            best = min(best, cur)
            return
        for v in sorted(adj):
            w = max(cur, len(adj[v]))
            if w >= best:
                continue
            nxt = _copy(adj)
            _eliminate(nxt, v)
            rec(nxt, w)

    rec(adj, 0)
    return best


def supertree_width(h: Hypergraph, limit: int = EXACT_VERTEX_LIMIT) -> WidthResult:
    """Width of the best supertree decomposition, computed on the line
    graph; the certificate sets each vertex bag to the union of its edge
    bag, which always upgrades a line-graph decomposition."""
    started = time.monotonic()
    lg = line_graph(h)
    res = exact_treewidth(lg, limit=limit)
    td = res.certificate
    vertex_bags = {}
    for t in td.nodes:
        union: set[int] = set()
        for e in td.bags[t]:
            union |= h.edges[e]
        vertex_bags[t] = frozenset(union)
    std = SupertreeDecomposition(nodes=list(td.nodes),
                                 tree_edges=list(td.tree_edges),
                                 vertex_bags=vertex_bags,
                                 edge_bags=dict(td.bags))
    return WidthResult(width=res.width + 1, certificate=std,
                       method="via_line_graph",
                       elapsed=time.monotonic() - started)
