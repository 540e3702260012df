import pytest

from hgtw.core import build_hypergraph, is_linear
from hgtw.derive import (
    dual,
    line_graph,
    linear_cover,
    make_graph,
    two_section,
    witness_dual_is_line_graph,
    witness_two_section_is_dual_line_graph,
)
from hgtw.errors import NotTwoRegularError
from hgtw.families import graph_dual, path_power, path_power_dual


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return make_graph(10, outer + inner + spokes)


def test_two_section_triangle():
    h = build_hypergraph(3, [[0, 1, 2]])
    g = two_section(h)
    assert g.m == 3 and g.has_edge(0, 1) and g.has_edge(1, 2)


def test_dual_of_triangle_is_triangle():
    h = build_hypergraph(3, [[0, 1], [1, 2], [0, 2]])
    d = dual(h)
    assert d.valid
    hd = d.to_hypergraph()
    assert sorted(map(sorted, hd.edges)) == sorted(map(sorted, h.edges))


def test_dual_roundtrip_reproduces_path_power():
    g = path_power(6, 2)
    h = graph_dual(g)
    d = dual(h)
    assert d.valid
    assert {frozenset(e) for e in d.edges} == {frozenset(e) for e in g.edges}


def test_line_graph_of_star():
    h = build_hypergraph(4, [[0, 1], [0, 2], [0, 3]])
    lg = line_graph(h)
    assert lg.n == 3 and lg.m == 3  # pairwise intersecting


def test_witnesses_on_petersen_dual():
    h = graph_dual(petersen())
    assert witness_two_section_is_dual_line_graph(h).verified
    assert witness_dual_is_line_graph(h).verified


def test_witness_requires_two_regular():
    h = build_hypergraph(4, [[0, 1], [0, 2], [0, 3], [1, 2], [2, 3]])
    with pytest.raises(NotTwoRegularError):
        witness_two_section_is_dual_line_graph(h)


def test_linear_cover_reconstructs_graph():
    g = petersen()
    h = linear_cover(g)
    assert is_linear(h)
    back = two_section(h)
    assert back.edges == g.edges

    g = path_power(7, 2)
    h = linear_cover(g)
    assert is_linear(h)
    assert two_section(h).edges == g.edges
