from fractions import Fraction

import pytest

from hgtw.core import is_linear, stats
from hgtw.derive import make_graph
from hgtw.errors import BadParamsError, InfeasibleError, MinDegreeTooLowError
from hgtw.families import (
    cycle_power,
    cycle_power_dual,
    graph_dual,
    path_power,
    path_power_dual,
    random_linear,
)


def test_path_power_shapes():
    g = path_power(5, 1)
    assert g.m == 4 and g.degrees() == [1, 2, 2, 2, 1]
    g = path_power(5, 2)
    assert g.m == 7
    assert sorted(g.degrees()) == [2, 2, 3, 3, 4]
    with pytest.raises(BadParamsError):
        path_power(3, 2)


def test_cycle_power_shapes():
    g = cycle_power(6, 2)
    assert g.m == 12 and set(g.degrees()) == {4}
    with pytest.raises(BadParamsError):
        cycle_power(5, 2)


def test_graph_dual_shapes():
    k4 = make_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    h = graph_dual(k4)
    assert h.n == 6 and h.m == 4
    assert set(h.edge_sizes()) == {3}
    assert is_linear(h)

    c5 = make_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    h = graph_dual(c5)
    assert h.m == 5 and set(h.edge_sizes()) == {2}

    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(MinDegreeTooLowError):
        graph_dual(star)


def test_path_power_dual():
    with pytest.raises(BadParamsError):
        path_power_dual(5, 1)  # nested endpoint stars
    h = path_power_dual(6, 2)
    st = stats(h)
    assert st.m == 6 and st.n == 9
    assert st.regular == 2 and st.is_linear
    assert h.labels is not None and h.labels[0] == "v_{0,1}"
    h = path_power_dual(8, 2)
    assert stats(h).avg_rank == Fraction(2 * 13, 8)


def test_cycle_power_dual_anti_rank():
    assert min(cycle_power_dual(8, 2).edge_sizes()) == 4
    assert min(cycle_power_dual(6, 1).edge_sizes()) == 2
    assert min(cycle_power_dual(10, 2, odd_variant=True).edge_sizes()) == 3
    assert min(cycle_power_dual(11, 2, odd_variant=True).edge_sizes()) == 3


def test_random_linear_properties():
    h = random_linear(7, 7, 3, 2, seed=1)
    st = stats(h)
    assert st.is_linear and st.rank == 3 and st.min_degree >= 2
    # deterministic per seed
    again = random_linear(7, 7, 3, 2, seed=1)
    assert again.edges == h.edges
    assert random_linear(7, 7, 3, 2, seed=2).edges != h.edges

    with pytest.raises(InfeasibleError):
        random_linear(4, 3, 3, 1, seed=0)  # pair budget 6 < 9

    h = random_linear(6, 4, 2, 1, seed=0)
    assert h.m == 4 and set(h.edge_sizes()) == {2}
