"""Constructive conversions between tree decompositions of the 2-section
and supertree decompositions of the hypergraph.

Both directions are width-controlled: vertex decomposition -> supertree
multiplies by (max degree - 1), supertree -> vertex decomposition yields
the mixed quadratic upper bound.  Bags are rebuilt from scratch at the
end of each conversion, so validity never depends on bookkeeping during
the tree surgery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import Hypergraph
from .decomp import (
    LeafBasedDecomposition,
    SupertreeDecomposition,
    TreeDecomposition,
    normalize_leaf_based,
    spanned_subtree,
    tree_adjacency,
)
from .errors import InvalidInputError, PreconditionFailedError


# ---------------------------------------------------------------------------
# vertex decomposition -> supertree decomposition

def td_to_supertree(h: Hypergraph,
                    d: LeafBasedDecomposition) -> SupertreeDecomposition:
    """Build a supertree decomposition from a leaf-based decomposition of
    the 2-section.  Width at most (max_degree - 1) * (tw + 1) + 1."""
    td = d.td
    nodes = list(td.nodes)
    edges = {tuple(sorted(e)) for e in td.tree_edges}
    bags = {t: set(td.bags[t]) for t in nodes}
    lam: dict[int, set[int]] = {t: set() for t in nodes}

    # per-vertex placements of incident hyperedges
    tuples: set[tuple[int, int]] = set()
    for v in range(h.n):
        fv = sorted(h.incident_edges(v))
        binv = [t for t in nodes if v in bags[t]]
        if len(fv) == 1:
            for t in binv:
                lam[t].add(fv[0])
            continue
        f1, f2 = fv[0], fv[1]
        b2 = d.base[f2]
        for t in binv:
            if t == b2:
                lam[t].update(g for g in fv if g != f1)
            else:
                lam[t].update(g for g in fv if g != f2)
        tuples.add((f1, f2))

    def matches(a: int, b: int) -> list[tuple[int, int, int, int]]:
        """Tuples whose two hyperedges split across the tree edge (a, b),
        oriented so the first hyperedge sits on the first returned node."""
        out = []
        for f1, f2 in sorted(tuples):
            if f1 in lam[a] and f1 not in lam[b] \
                    and f2 in lam[b] and f2 not in lam[a]:
                out.append((a, b, f1, f2))
            elif f1 in lam[b] and f1 not in lam[a] \
                    and f2 in lam[a] and f2 not in lam[b]:
                out.append((b, a, f1, f2))
        return out

    next_id = max(nodes) + 1
    while True:
        crowded = None
        for a, b in sorted(edges):
            hit = matches(a, b)
            if len(hit) >= 2:
                crowded = ((a, b), hit[0])
                break
        if crowded is None:
            break
        (a, b), (side, other, f1, f2) = crowded
        t2 = next_id
        next_id += 1
        nodes.append(t2)
        bags[t2] = bags[a] & bags[b]
        lam[t2] = (lam[side] - {f1}) | {f2}
        edges.remove((a, b))
        edges.add(tuple(sorted((a, t2))))
        edges.add(tuple(sorted((t2, b))))

    # one hyperedge insertion per remaining split pair
    insertions = []
    for a, b in sorted(edges):
        for side, other, f1, f2 in matches(a, b):
            insertions.append((other, f1))
    for t, f in insertions:
        lam[t].add(f)

    return SupertreeDecomposition(
        nodes=nodes,
        tree_edges=[tuple(e) for e in sorted(edges)],
        vertex_bags={t: frozenset(bags[t]) for t in nodes},
        edge_bags={t: frozenset(lam[t]) for t in nodes})


def hypergraph_supertree_from_td(h: Hypergraph,
                                 td: TreeDecomposition,
                                 ) -> SupertreeDecomposition:
    """Normalize an arbitrary tree decomposition of the 2-section, then
    convert it."""
    return td_to_supertree(h, normalize_leaf_based(h, td))


# ---------------------------------------------------------------------------
# supertree decomposition -> vertex decomposition

@dataclass
class SplitEvaluation:
    edge: tuple[int, int]
    alpha: frozenset[int]
    beta: frozenset[int]
    threshold: Fraction

    @property
    def ok(self) -> bool:
        return (len(self.alpha) <= self.threshold
                and len(self.beta) <= self.threshold)


def _gamma(h: Hypergraph, lam_t: frozenset[int], f: int) -> set[int]:
    """Vertices of hyperedge f shared with another hyperedge of the bag."""
    out = set()
    for g in lam_t:
        if g != f:
            out |= (h.edges[f] & h.edges[g])
    return out


def split_candidates(h: Hypergraph, std: SupertreeDecomposition, f: int,
                     k: Optional[int] = None) -> list[SplitEvaluation]:
    """Evaluate every edge of the subtree carrying f against the balanced
    split threshold (2/3)|f| + (k-1)/3."""
    if k is None:
        k = std.width()
    carrier = {t for t in std.nodes if f in std.edge_bags[t]}
    if not carrier:
        raise InvalidInputError("hyperedge %d appears in no bag" % f)
    adj = std.adjacency()
    inner_edges = [e for e in std.tree_edges
                   if e[0] in carrier and e[1] in carrier]
    threshold = Fraction(2, 3) * len(h.edges[f]) + Fraction(k - 1, 3)
    gammas = {t: _gamma(h, std.edge_bags[t], f) for t in carrier}

    evaluations = []
    for a, b in sorted(tuple(sorted(e)) for e in inner_edges):
        # flood from a within the carrier, avoiding the edge itself
        side_a = {a}
        stack = [a]
        while stack:
            t = stack.pop()
            for u in adj[t]:
                if u in carrier and u not in side_a \
                        and not ({t, u} == {a, b}):
                    side_a.add(u)
                    stack.append(u)
        side_b = carrier - side_a
        alpha = set()
        for t in side_a:
            alpha |= gammas[t]
        beta = set()
        for t in side_b:
            beta |= gammas[t]
        evaluations.append(SplitEvaluation(
            edge=(a, b), alpha=frozenset(alpha), beta=frozenset(beta),
            threshold=threshold))
    return evaluations


def find_splitting_edge(h: Hypergraph, std: SupertreeDecomposition, f: int,
                        k: Optional[int] = None) -> SplitEvaluation:
    candidates = split_candidates(h, std, f, k=k)
    for ev in candidates:
        if ev.ok:
            return ev
    raise PreconditionFailedError(
        "no balanced splitting edge for hyperedge %d" % f)


def limit_tree_degree(std: SupertreeDecomposition,
                      cap: int = 3) -> SupertreeDecomposition:
    """Split high-degree tree nodes into chains of duplicate bags."""
    nodes = list(std.nodes)
    edges = {tuple(sorted(e)) for e in std.tree_edges}
    vb = dict(std.vertex_bags)
    eb = dict(std.edge_bags)
    next_id = max(nodes) + 1 if nodes else 0
    adj = tree_adjacency(nodes, edges)
    queue = [t for t in nodes if len(adj[t]) > cap]
    while queue:
        t = queue.pop()
        neigh = sorted(adj[t])
        if len(neigh) <= cap:
            continue
        keep = neigh[:cap - 1]
        moved = neigh[cap - 1:]
        t2 = next_id
        next_id += 1
        nodes.append(t2)
        vb[t2] = vb[t]
        eb[t2] = eb[t]
        adj[t2] = set()
        for u in moved:
            edges.remove(tuple(sorted((t, u))))
            edges.add(tuple(sorted((t2, u))))
            adj[t].discard(u)
            adj[u].discard(t)
            adj[u].add(t2)
            adj[t2].add(u)
        edges.add(tuple(sorted((t, t2))))
        adj[t].add(t2)
        adj[t2].add(t)
        if len(adj[t2]) > cap:
            queue.append(t2)
        if len(adj[t]) > cap:
            queue.append(t)
    return SupertreeDecomposition(
        nodes=nodes, tree_edges=[tuple(e) for e in sorted(edges)],
        vertex_bags=vb, edge_bags=eb)


def supertree_to_td(h: Hypergraph, std: SupertreeDecomposition,
                    ) -> tuple[TreeDecomposition, dict[int, int]]:
    """Build a tree decomposition of the 2-section from a supertree
    decomposition; returns the decomposition plus the base-node map.

    The resulting width respects the mixed quadratic bound
    (2/3) k r + (1/3)(k-1)^2 + (1/3) r - 1 for k the supertree width.
    """
    std = limit_tree_degree(std)
    k = std.width()
    nodes = list(std.nodes)
    edges = {tuple(sorted(e)) for e in std.tree_edges}
    next_id = max(nodes) + 1

    base: dict[int, int] = {}
    large: list[int] = []
    for f in range(h.m):
        if len(h.edges[f]) <= k - 1:
            carrier = sorted(t for t in nodes if f in std.edge_bags[t])
            if not carrier:
                raise InvalidInputError("hyperedge %d appears in no bag" % f)
            base[f] = carrier[0]
        else:
            large.append(f)

    # a singleton carrier has no internal edge to split; grow a pendant twin
    eb = dict(std.edge_bags)
    vb = dict(std.vertex_bags)
    for f in large:
        carrier = [t for t in nodes if f in eb[t]]
        if len(carrier) == 1:
            t = carrier[0]
            twin = next_id
            next_id += 1
            nodes.append(twin)
            eb[twin] = eb[t]
            vb[twin] = vb[t]
            edges.add(tuple(sorted((t, twin))))
    std = SupertreeDecomposition(
        nodes=nodes, tree_edges=[tuple(e) for e in sorted(edges)],
        vertex_bags=vb, edge_bags=eb)

    chosen: dict[int, tuple[int, int]] = {}
    for f in large:
        chosen[f] = find_splitting_edge(h, std, f, k=k).edge

    # subdivide each selected tree edge once per hyperedge, chained in id order
    by_edge: dict[tuple[int, int], list[int]] = {}
    for f, e in chosen.items():
        by_edge.setdefault(e, []).append(f)
    for e, fs in sorted(by_edge.items()):
        a, b = e
        edges.remove(e)
        prev = a
        for f in sorted(fs):
            t = next_id
            next_id += 1
            nodes.append(t)
            base[f] = t
            edges.add(tuple(sorted((prev, t))))
            prev = t
        edges.add(tuple(sorted((prev, b))))

    adj = tree_adjacency(nodes, edges)
    bags: dict[int, set[int]] = {t: set() for t in nodes}
    for v in range(h.n):
        anchors = {base[f] for f in h.incident_edges(v)}
        for t in spanned_subtree(anchors, adj):
            bags[t].add(v)

    td = TreeDecomposition(nodes=nodes,
                           tree_edges=[tuple(e) for e in sorted(edges)],
                           bags={t: frozenset(s) for t, s in bags.items()})
    return td, base


def mixed_width_cap(k: int, rank: int) -> Fraction:
    """Largest bag size the supertree-to-vertex conversion may produce."""
    return (Fraction(2, 3) * k * rank + Fraction(1, 3) * (k - 1) ** 2
            + Fraction(1, 3) * rank)
