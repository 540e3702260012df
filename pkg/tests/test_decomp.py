import random

from hgtw.core import build_hypergraph
from hgtw.decomp import (
    TreeDecomposition,
    check_leaf_based,
    normalize_leaf_based,
    spanned_subtree,
    subtree_connected,
    tree_adjacency,
    validate_std,
    validate_td,
)
from hgtw.derive import two_section
from hgtw.errors import InfeasibleError
from hgtw.families import random_linear
from hgtw.solve import exact_treewidth, supertree_width


def triangle():
    return build_hypergraph(3, [[0, 1], [1, 2], [0, 2]])


def path_td():
    # P3: bags {0,1},{1,2} on a 2-node tree
    return TreeDecomposition(nodes=[0, 1], tree_edges=[(0, 1)],
                             bags={0: frozenset({0, 1}),
                                   1: frozenset({1, 2})})


def test_validate_td_accepts_and_rejects():
    from hgtw.derive import make_graph
    g = make_graph(3, [(0, 1), (1, 2)])
    assert validate_td(g, path_td()) == []

    broken = TreeDecomposition(nodes=[0, 1], tree_edges=[(0, 1)],
                               bags={0: frozenset({0, 1}),
                                     1: frozenset({2})})
    assert any("edge" in p for p in validate_td(g, broken))

    # vertex occurrences must induce a connected subtree
    disc = TreeDecomposition(nodes=[0, 1, 2],
                             tree_edges=[(0, 1), (1, 2)],
                             bags={0: frozenset({0, 1}),
                                   1: frozenset({1}),
                                   2: frozenset({0, 1, 2})})
    assert any("connected" in p for p in validate_td(g, disc))


def test_subtree_helpers():
    adj = tree_adjacency([0, 1, 2, 3], [(0, 1), (1, 2), (1, 3)])
    assert subtree_connected({0, 1, 2}, adj)
    assert not subtree_connected({0, 2}, adj)
    assert spanned_subtree({0, 2}, adj) == {0, 1, 2}
    assert spanned_subtree({3}, adj) == {3}


def test_validate_std_on_solver_certificate():
    h = triangle()
    res = supertree_width(h)
    assert validate_std(h, res.certificate) == []
    assert res.certificate.width() == res.width


def test_validate_std_flags_missing_pair():
    h = triangle()
    std = supertree_width(h).certificate
    # drop one hyperedge everywhere: intersecting pairs lose coverage
    stripped = type(std)(
        nodes=std.nodes, tree_edges=std.tree_edges,
        vertex_bags=std.vertex_bags,
        edge_bags={t: frozenset(b - {0}) for t, b in std.edge_bags.items()})
    assert validate_std(h, stripped) != []


def test_normalize_leaf_based_triangle():
    h = triangle()
    td = exact_treewidth(two_section(h)).certificate
    lb = normalize_leaf_based(h, td)
    assert check_leaf_based(h, lb) == []
    assert lb.width() <= td.width()
    # base leaves carry exactly their hyperedge
    for e, leaf in lb.base.items():
        assert lb.td.bags[leaf] == h.edges[e]


def test_normalize_single_edge():
    h = build_hypergraph(3, [[0, 1, 2]])
    td = exact_treewidth(two_section(h)).certificate
    lb = normalize_leaf_based(h, td)
    assert lb.single_edge
    assert check_leaf_based(h, lb) == []


def test_normalize_random_instances():
    rng = random.Random(42)
    done = 0
    while done < 15:
        try:
            h = random_linear(rng.randrange(5, 11), rng.randrange(3, 9),
                              rng.choice([2, 3]), 2,
                              seed=rng.randrange(10 ** 6))
        except InfeasibleError:
            continue
        done += 1
        td = exact_treewidth(two_section(h)).certificate
        lb = normalize_leaf_based(h, td)
        assert check_leaf_based(h, lb) == []
        assert lb.width() <= td.width()
