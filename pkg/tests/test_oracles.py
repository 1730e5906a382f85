import random
import warnings
from itertools import product

import pytest
from hypothesis import given, settings
from strategies import multigraphs

from tuttepoly.catalog import bouquet, complete_graph, connected_catalog, dipole, k4_minus_e, path_graph
from tuttepoly.engine import tutte
from tuttepoly.errors import BudgetExceededError, GraphInputError, NotConnectedError
from tuttepoly.multigraph import MultiGraph
from tuttepoly.oracles import (
    Budgets,
    LoopConventionWarning,
    _arcs,
    _smallest_on_directed_cocycle,
    activity_table,
    bicycle_dimension,
    count_acyclic_orientations,
    count_acyclic_unique_source,
    count_ice_configurations,
    count_nowhere_zero_flows,
    count_score_vectors,
    count_spanning_connected,
    count_spanning_forests,
    count_spanning_trees,
    count_subsets,
    count_totally_cyclic,
    derivative_via_activities,
    orientation_activities,
    tutte_activities,
    tutte_from_orientation_activities,
    tutte_rank_nullity,
)
from tuttepoly.polynomial import BiPoly

X, Y = BiPoly.x(), BiPoly.y()
K4E_T = X**3 + 2 * X**2 + X + 2 * X * Y + Y + Y**2


def test_rank_nullity_examples():
    assert tutte_rank_nullity(bouquet(1)) == Y
    assert tutte_rank_nullity(path_graph(2)) == X
    assert tutte_rank_nullity(k4_minus_e()) == K4E_T


def test_budget_refusal():
    tiny = Budgets(max_subsets=16, max_orientations=16)
    with pytest.raises(BudgetExceededError):
        tutte_rank_nullity(complete_graph(4), tiny)
    with pytest.raises(BudgetExceededError):
        count_acyclic_orientations(complete_graph(4), tiny)
    assert tutte_rank_nullity(complete_graph(3), tiny) == X**2 + X + Y


# activities


def test_activities_triangle():
    rows = activity_table(complete_graph(3))
    assert len(rows) == 3
    assert sorted((i, j) for _, i, j in rows) == [(0, 1), (1, 0), (2, 0)]
    for order in ([0, 1, 2], [2, 0, 1], [1, 2, 0]):
        assert tutte_activities(complete_graph(3), order) == X**2 + X + Y


def test_activities_tree():
    tree = MultiGraph(5, ((0, 1), (1, 2), (1, 3), (3, 4)))
    assert tutte_activities(tree) == X**4


def test_activities_k4e_random_orders():
    rng = random.Random(3)
    for _ in range(10):
        order = list(range(5))
        rng.shuffle(order)
        assert tutte_activities(k4_minus_e(), order) == K4E_T


def test_activities_reject_disconnected_and_bad_orders():
    with pytest.raises(NotConnectedError):
        tutte_activities(MultiGraph(3, ((0, 1),)))
    with pytest.raises(GraphInputError):
        tutte_activities(complete_graph(3), [0, 0, 1])


# counts


def test_count_examples():
    assert count_spanning_trees(complete_graph(4)) == 16
    assert count_spanning_connected(complete_graph(3)) == 4
    assert count_subsets(k4_minus_e()) == 32
    tri = complete_graph(3)
    assert count_acyclic_orientations(tri) == 6
    assert count_totally_cyclic(tri) == 2
    assert all(count_acyclic_unique_source(tri, v) == 2 for v in range(3))


def test_loop_kills_acyclicity():
    g = MultiGraph(2, ((0, 1), (1, 1)))
    assert count_acyclic_orientations(g) == 0
    assert tutte(g).eval(2, 0) == 0


@pytest.mark.parametrize("g", list(connected_catalog(4, 6)), ids=str)
def test_counts_match_evaluations(g):
    t = tutte(g)
    assert t.eval(1, 1) == count_spanning_trees(g)
    assert t.eval(2, 1) == count_spanning_forests(g) == count_score_vectors(g)
    assert t.eval(1, 2) == count_spanning_connected(g)
    assert t.eval(2, 2) == count_subsets(g)
    assert t.eval(2, 0) == count_acyclic_orientations(g)
    assert t.eval(0, 2) == count_totally_cyclic(g)
    assert all(t.eval(1, 0) == count_acyclic_unique_source(g, v) for v in range(g.vertex_count))


# flows


def test_flow_examples():
    for k in range(1, 6):
        assert count_nowhere_zero_flows(path_graph(2), k) == 0
        assert count_nowhere_zero_flows(bouquet(1), k) == k - 1
    assert count_nowhere_zero_flows(complete_graph(3), 2) == 1
    assert count_nowhere_zero_flows(complete_graph(3), 3) == 2


@given(multigraphs(max_edges=7))
@settings(max_examples=60, deadline=None)
def test_flows_independent_of_reference_orientation(g):
    for k in (2, 3, 4):
        base = count_nowhere_zero_flows(g, k)
        for e in range(g.edge_count):
            assert count_nowhere_zero_flows(g, k, flip=[e]) == base


def test_flow_budget():
    with pytest.raises(BudgetExceededError):
        count_nowhere_zero_flows(complete_graph(5), 5, budgets=Budgets(max_flow_assignments=1000))


# ice


def test_ice_examples():
    assert count_ice_configurations(dipole(4)) == 6
    k5 = complete_graph(5)
    assert count_ice_configurations(k5) == abs(tutte(k5).eval(0, -2))
    with pytest.warns(LoopConventionWarning):
        assert count_ice_configurations(bouquet(2)) == 4
    with pytest.raises(GraphInputError):
        count_ice_configurations(complete_graph(4))


# bicycle


def test_bicycle_examples():
    assert bicycle_dimension(complete_graph(3)) == 0
    assert tutte(complete_graph(3)).eval(-1, -1) == -1
    k4 = complete_graph(4)
    assert tutte(k4).eval(-1, -1) == (-2) ** bicycle_dimension(k4)
    assert bicycle_dimension(path_graph(5)) == 0
    # a loop is a cycle but never lies in a cut
    assert bicycle_dimension(bouquet(1)) == 0
    # the digon: its two edges form both a cycle and a cut
    assert bicycle_dimension(dipole(2)) == 1


@given(multigraphs(max_vertices=6, max_edges=9))
@settings(max_examples=100, deadline=None)
def test_bicycle_theorem(g):
    assert tutte(g).eval(-1, -1) == (-1) ** g.edge_count * (-2) ** bicycle_dimension(g)


# derivatives


def test_derivative_examples():
    tri = complete_graph(3)
    assert derivative_via_activities(tri, 0, 0) == tutte(tri)
    assert derivative_via_activities(tri, 1, 0) == 2 * X + 1
    assert derivative_via_activities(k4_minus_e(), 0, 1) == 2 * X + 1 + 2 * Y


@given(multigraphs(max_edges=6))
@settings(max_examples=40, deadline=None)
def test_derivative_formula(g):
    t = tutte(g)
    order = list(range(g.edge_count))
    random.Random(g.edge_count).shuffle(order)
    for p in range(3):
        for q in range(3):
            assert derivative_via_activities(g, p, q, order) == t.partial_derivative(p, q)


# orientation activities


def test_orientation_activity_examples():
    assert orientation_activities(bouquet(1)) == {(0, 1): 2}
    assert orientation_activities(path_graph(2)) == {(1, 0): 2}
    table = orientation_activities(complete_graph(3))
    assert sum(table.values()) == 8
    assert tutte_from_orientation_activities(table) == X**2 + X + Y


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        tutte_from_orientation_activities({(1, 0): 3})


def _cocycle_bruteforce(n, arcs, e, pos):
    """Is e the smallest edge of some cut whose edges all point out of S?"""
    u, v = arcs[e]
    if u == v:
        return False
    for bits in product((0, 1), repeat=n):
        if not bits[u] or bits[v]:
            continue
        cut = [f for f, (s, t) in enumerate(arcs) if bits[s] != bits[t]]
        if all(bits[arcs[f][0]] for f in cut) and min(cut, key=pos.__getitem__) == e:
            return True
    return False


@given(multigraphs(max_vertices=5, max_edges=6))
@settings(max_examples=60, deadline=None)
def test_cocycle_closure_matches_cut_enumeration(g):
    m = g.edge_count
    rng = random.Random(m)
    order = list(range(m))
    rng.shuffle(order)
    pos = [0] * m
    for k, e in enumerate(order):
        pos[e] = k
    for _ in range(8):
        arcs = _arcs(g, rng.getrandbits(max(m, 1)))
        for e in range(m):
            assert _smallest_on_directed_cocycle(g.vertex_count, arcs, e, pos) == _cocycle_bruteforce(
                g.vertex_count, arcs, e, pos
            )


@given(multigraphs(max_edges=7))
@settings(max_examples=60, deadline=None)
def test_orientation_activity_theorem(g):
    order = list(range(g.edge_count))
    random.Random(5).shuffle(order)
    assert tutte_from_orientation_activities(orientation_activities(g, order)) == tutte(g)


def test_warning_free_on_loopless_ice():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        count_ice_configurations(dipole(4))
