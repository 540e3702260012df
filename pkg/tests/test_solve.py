import random

from hypothesis import given, settings, strategies as st

from hgtw.core import build_hypergraph
from hgtw.derive import line_graph, make_graph, two_section
from hgtw.solve import (
    brute_force_treewidth,
    exact_treewidth,
    supertree_width,
)
from hgtw.decomp import validate_std, validate_td


def complete(n):
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_known_widths():
    assert exact_treewidth(make_graph(1, [])).width == 0
    assert exact_treewidth(make_graph(5, [(i, i + 1) for i in range(4)])).width == 1
    assert exact_treewidth(cycle(5)).width == 2
    assert exact_treewidth(complete(6)).width == 5
    # 3x3 grid
    edges = []
    for r in range(3):
        for c in range(3):
            v = 3 * r + c
            if c < 2:
                edges.append((v, v + 1))
            if r < 2:
                edges.append((v, v + 3))
    assert exact_treewidth(make_graph(9, edges)).width == 3


def test_disconnected_graphs():
    g = make_graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)])
    assert exact_treewidth(g).width == 2


def test_certificate_is_valid():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randrange(2, 11)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < 0.4]
        g = make_graph(n, edges)
        res = exact_treewidth(g)
        assert validate_td(g, res.certificate) == []
        assert res.certificate.width() == res.width


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(all_pairs), unique=True)
                 if all_pairs else st.just([]))
    return make_graph(n, edges)


@settings(max_examples=150, deadline=None)
@given(small_graphs())
def test_matches_brute_force(g):
    assert exact_treewidth(g).width == brute_force_treewidth(g)


def test_supertree_width_identity_and_certificate():
    h = build_hypergraph(6, [[0, 1, 2], [2, 3], [3, 4, 5], [0, 5]])
    res = supertree_width(h)
    assert res.width == exact_treewidth(line_graph(h)).width + 1
    assert validate_std(h, res.certificate) == []
    # the vertex bags of the certificate decompose the 2-section
    assert validate_td(two_section(h), res.certificate.as_td()) == []
