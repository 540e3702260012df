"""Tree decompositions, supertree decompositions and their validators,
plus the normalization that gives every hyperedge a private base leaf.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import Hypergraph
from .derive import Graph, two_section
from .errors import InvalidInputError


# ---------------------------------------------------------------------------
# small tree helpers

def tree_adjacency(nodes: Iterable[int],
                   edges: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {t: set() for t in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def is_tree(nodes: list[int], edges: Iterable[tuple[int, int]]) -> bool:
    edges = list(edges)
    if not nodes:
        return False
    if len(edges) != len(nodes) - 1:
        return False
    adj = tree_adjacency(nodes, edges)
    seen = set()
    stack = [nodes[0]]
    while stack:
        t = stack.pop()
        if t in seen:
            continue
        seen.add(t)
        stack.extend(adj[t] - seen)
    return len(seen) == len(nodes)


def subtree_connected(nodes: set[int], adj: dict[int, set[int]]) -> bool:
    if not nodes:
        return False
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for u in adj[t]:
            if u in nodes and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == nodes


def tree_path(a: int, b: int, adj: dict[int, set[int]]) -> list[int]:
    """Unique path between two nodes of a tree."""
    if a == b:
        return [a]
    parent = {a: None}
    stack = [a]
    while stack:
        t = stack.pop()
        if t == b:
            break
        for u in adj[t]:
            if u not in parent:
                parent[u] = t
                stack.append(u)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def spanned_subtree(terminals: Iterable[int], adj: dict[int, set[int]]) -> set[int]:
    """Node set of the smallest subtree containing all terminals."""
    terms = list(terminals)
    if not terms:
        return set()
    out = {terms[0]}
    for t in terms[1:]:
        out |= set(tree_path(terms[0], t, adj))
    # the union of paths from one terminal covers the Steiner tree in a tree
    return out


def rooted_children(root: int, adj: dict[int, set[int]]) -> dict[int, list[int]]:
    children: dict[int, list[int]] = {}
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        t = stack.pop()
        kids = sorted(u for u in adj[t] if u != parent[t])
        children[t] = kids
        for u in kids:
            parent[u] = t
            stack.append(u)
            order.append(u)
    return children


# ---------------------------------------------------------------------------
# data types

@dataclass
class TreeDecomposition:
    nodes: list[int]
    tree_edges: list[tuple[int, int]]
    bags: dict[int, frozenset[int]]
    root: Optional[int] = None

    def adjacency(self) -> dict[int, set[int]]:
        return tree_adjacency(self.nodes, self.tree_edges)

    def width(self) -> int:
        return max(len(b) for b in self.bags.values()) - 1


@dataclass
class SupertreeDecomposition:
    nodes: list[int]
    tree_edges: list[tuple[int, int]]
    vertex_bags: dict[int, frozenset[int]]
    edge_bags: dict[int, frozenset[int]]

    def adjacency(self) -> dict[int, set[int]]:
        return tree_adjacency(self.nodes, self.tree_edges)

    def width(self) -> int:
        return max(len(b) for b in self.edge_bags.values())

    def as_td(self) -> TreeDecomposition:
        return TreeDecomposition(nodes=list(self.nodes),
                                 tree_edges=list(self.tree_edges),
                                 bags=dict(self.vertex_bags))


@dataclass
class LeafBasedDecomposition:
    """Rooted binary tree decomposition of the 2-section where every
    hyperedge owns a dedicated base leaf whose bag is exactly the edge."""

    td: TreeDecomposition
    base: dict[int, int]  # edge id -> leaf node id
    single_edge: bool = False  # m == 1: root has a single child, flagged

    def width(self) -> int:
        return self.td.width()


def width(d: TreeDecomposition) -> int:
    return d.width()


# ---------------------------------------------------------------------------
# validators

def validate_td(g: Graph, d: TreeDecomposition) -> list[str]:
    """Empty report iff d is a tree decomposition of g."""
    problems: list[str] = []
    if not d.nodes:
        return ["decomposition has no nodes"]
    if not is_tree(d.nodes, d.tree_edges):
        problems.append("underlying graph is not a tree")
        return problems
    if set(d.bags) != set(d.nodes):
        problems.append("bags and nodes disagree")
        return problems
    adj = d.adjacency()
    occurrences: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for t, bag in d.bags.items():
        for v in bag:
            if not (0 <= v < g.n):
                problems.append("bag %d contains unknown vertex %d" % (t, v))
            else:
                occurrences[v].add(t)
    for v in range(g.n):
        occ = occurrences[v]
        if not occ:
            problems.append("vertex %d in no bag" % v)
        elif not subtree_connected(occ, adj):
            problems.append("bags containing vertex %d are disconnected" % v)
    for u, v in sorted(g.edges):
        if not any(u in bag and v in bag for bag in d.bags.values()):
            problems.append("edge (%d,%d) not covered by any bag" % (u, v))
    return problems


def validate_std(h: Hypergraph, d: SupertreeDecomposition) -> list[str]:
    problems: list[str] = []
    td = d.as_td()
    problems += ["2-section: " + p for p in validate_td(two_section(h), td)]
    if set(d.edge_bags) != set(d.nodes):
        problems.append("edge bags and nodes disagree")
        return problems
    for t in d.nodes:
        covered = set()
        for e in d.edge_bags[t]:
            if not (0 <= e < h.m):
                problems.append("node %d names unknown edge %d" % (t, e))
                continue
            covered |= h.edges[e]
        extra = set(d.vertex_bags[t]) - covered
        if extra:
            problems.append("node %d: vertices %s not covered by its edge bag"
                            % (t, sorted(extra)))
    adj = d.adjacency()
    for e in range(h.m):
        occ = {t for t in d.nodes if e in d.edge_bags[t]}
        if not occ:
            problems.append("edge %d in no edge bag" % e)
        elif not subtree_connected(occ, adj):
            problems.append("edge bags containing edge %d are disconnected" % e)
    for e1 in range(h.m):
        for e2 in range(e1 + 1, h.m):
            if h.edges[e1] & h.edges[e2]:
                if not any(e1 in d.edge_bags[t] and e2 in d.edge_bags[t]
                           for t in d.nodes):
                    problems.append("intersecting edges %d,%d never share "
                                    "an edge bag" % (e1, e2))
    return problems


def check_leaf_based(h: Hypergraph, d: LeafBasedDecomposition) -> list[str]:
    """Structural invariants beyond plain tree-decomposition validity."""
    problems = validate_td(two_section(h), d.td)
    td = d.td
    if td.root is None:
        return problems + ["missing root"]
    adj = td.adjacency()
    children = rooted_children(td.root, adj)
    leaves = {t for t in td.nodes if not children[t]}
    for t in td.nodes:
        if children[t] and len(children[t]) != 2:
            if not (d.single_edge and t == td.root and len(children[t]) == 1):
                problems.append("internal node %d has outdegree %d"
                                % (t, len(children[t])))
    if set(d.base.keys()) != set(range(h.m)):
        problems.append("base assignment misses some edges")
    if set(d.base.values()) != leaves or len(set(d.base.values())) != h.m:
        problems.append("base is not a bijection onto the leaves")
    for e, t in d.base.items():
        if not h.edges[e] <= td.bags.get(t, frozenset()):
            problems.append("bag of base leaf %d misses vertices of edge %d"
                            % (t, e))
    for v in range(h.n):
        terminals = [d.base[e] for e in sorted(h.degree_index[v])]
        st = spanned_subtree(terminals, adj)
        occ = {t for t in td.nodes if v in td.bags[t]}
        if occ != st:
            problems.append("vertex %d: bag occurrences differ from the "
                            "spanned subtree of its base leaves" % v)
    return problems


# ---------------------------------------------------------------------------
# leaf-based normalization

def normalize_leaf_based(h: Hypergraph,
                         d: TreeDecomposition) -> LeafBasedDecomposition:
    g = two_section(h)
    problems = validate_td(g, d)
    if problems:
        raise InvalidInputError("input decomposition invalid: %s" % problems[0])

    next_id = max(d.nodes) + 1
    adj = {t: set(s) for t, s in d.adjacency().items()}
    bags = dict(d.bags)

    # one fresh private leaf per edge, hanging off a bag that contains it
    base: dict[int, int] = {}
    for e in range(h.m):
        anchor = min(t for t in d.nodes if h.edges[e] <= bags[t])
        leaf = next_id
        next_id += 1
        adj[leaf] = {anchor}
        adj[anchor].add(leaf)
        base[e] = leaf

    base_leaves = set(base.values())

    # drop leaves that are not base leaves, repeatedly
    changed = True
    while changed:
        changed = False
        for t in list(adj):
            if len(adj[t]) <= 1 and t not in base_leaves and len(adj) > 1:
                (nb,) = adj[t] if adj[t] else (None,)
                if nb is not None:
                    adj[nb].discard(t)
                del adj[t]
                changed = True

    # pick a root and binarize; fresh comb nodes get new ids
    internal = [t for t in adj if t not in base_leaves]
    single_edge = False
    if not internal:
        # m == 1 leaves just the base leaf: rebuild a 2-node tree
        leaf = base[0]
        root = next_id
        next_id += 1
        new_adj = {root: {leaf}, leaf: {root}}
        adj = new_adj
        single_edge = True
    else:
        root = max(internal, key=lambda t: (len(adj[t]), -t))
        min_leaf: dict[int, int] = {}

        def smallest_leaf(t: int, parent: Optional[int]) -> int:
            kids = [u for u in adj[t] if u != parent]
            if not kids:
                return t
            return min(smallest_leaf(u, t) for u in kids)

        new_adj: dict[int, set[int]] = {}

        def link(a: int, b: int):
            new_adj.setdefault(a, set()).add(b)
            new_adj.setdefault(b, set()).add(a)

        def build(t: int, parent: Optional[int]) -> int:
            """Return the root of the binarized subtree below t."""
            nonlocal next_id
            kids = [u for u in adj[t] if u != parent]
            if not kids:
                return t
            kids.sort(key=lambda u: smallest_leaf(u, t))
            sub = [build(u, t) for u in kids]
            if len(sub) == 1:
                # splice out this chain node
                return sub[0]
            node = t
            while len(sub) > 2:
                comb = next_id
                next_id += 1
                last = sub.pop()
                second = sub.pop()
                link(comb, second)
                link(comb, last)
                sub.append(comb)
            link(node, sub[0])
            link(node, sub[1])
            return node

        top = build(root, None)
        if top in base_leaves:
            # root collapsed to a leaf: m == 1 shape
            fresh = next_id
            next_id += 1
            link(fresh, top)
            top = fresh
            single_edge = True
        root = top
        adj = new_adj

    if h.m == 1:
        single_edge = True

    nodes = sorted(adj)
    # bags: exactly the nodes spanned by the base leaves of each vertex
    new_bags: dict[int, set[int]] = {t: set() for t in nodes}
    for v in range(h.n):
        terminals = [base[e] for e in sorted(h.degree_index[v])]
        for t in spanned_subtree(terminals, adj):
            new_bags[t].add(v)
    edges_out = []
    for t in nodes:
        for u in adj[t]:
            if t < u:
                edges_out.append((t, u))
    td = TreeDecomposition(nodes=nodes, tree_edges=edges_out,
                           bags={t: frozenset(b) for t, b in new_bags.items()},
                           root=root)
    out = LeafBasedDecomposition(td=td, base=base, single_edge=single_edge)
    if td.width() > d.width():
        raise InvalidInputError("normalization increased the width")
    return out
