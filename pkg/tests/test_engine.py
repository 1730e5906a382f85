import random
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import multigraphs

from tuttepoly.catalog import (
    bouquet,
    complete_graph,
    connected_catalog,
    cycle_graph,
    dipole,
    k4_minus_e,
    path_graph,
    random_multigraph,
)
from tuttepoly.engine import TutteEngine, canonical_key, tg_invariant_eval, tutte, tutte_eval
from tuttepoly.multigraph import MultiGraph, blocks, disjoint_union, one_point_join, rank, relabel
from tuttepoly.oracles import rank_nullity_profile, tutte_activities, tutte_rank_nullity
from tuttepoly.polynomial import BiPoly
from tuttepoly.specializations import reliability_polynomial

X, Y = BiPoly.x(), BiPoly.y()


def test_k4_minus_e_value():
    assert tutte(k4_minus_e()).to_string() == "x^3 + 2*x^2 + x + 2*x*y + y + y^2"


def test_k4_minus_e_is_fast():
    g = k4_minus_e()
    best = min(_timed(lambda: tutte(g)) for _ in range(30))
    assert best < 1e-3


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


@pytest.mark.parametrize("i, j", [(0, 0), (1, 0), (0, 1), (3, 2), (2, 4)])
def test_bridges_and_loops(i, j):
    # a path of i edges with j loops hung on its last vertex
    edges = tuple((k, k + 1) for k in range(i)) + ((i, i),) * j
    assert tutte(MultiGraph(i + 1, edges)) == BiPoly.monomial(i, j)


def test_small_values():
    assert tutte(complete_graph(3)) == X**2 + X + Y
    assert tutte(MultiGraph(3, ())) == BiPoly.one()
    assert tutte(MultiGraph(0, ())) == BiPoly.one()
    assert tutte(complete_graph(4)) == X**3 + 3 * X**2 + 2 * X + 4 * X * Y + 2 * Y + 3 * Y**2 + Y**3


def test_closed_forms_agree_with_oracle():
    for m in range(1, 8):
        assert tutte(dipole(m)) == tutte_rank_nullity(dipole(m))
        assert tutte(cycle_graph(m)) == tutte_rank_nullity(cycle_graph(m))


def test_engine_matches_oracles_on_6_8_catalog():
    for g in connected_catalog(6, 8):
        t = tutte(g)
        assert t == tutte_rank_nullity(g), g
        assert t == tutte_activities(g), g


def test_engine_matches_oracles_on_random_graphs():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        m = rng.randint(n - 1, 10)
        g = random_multigraph(rng, n, m)
        t = tutte(g)
        assert t == tutte_rank_nullity(g), g
        order = list(range(m))
        rng.shuffle(order)
        assert t == tutte_activities(g, order), g


@given(multigraphs(max_vertices=5, max_edges=8))
@settings(max_examples=60, deadline=None)
def test_pivot_order_independence(g):
    t = tutte(g)
    for seed in range(20):
        assert TutteEngine(pivot_rng=random.Random(seed))(g) == t


@given(multigraphs(max_edges=6), multigraphs(max_edges=6))
@settings(max_examples=50, deadline=None)
def test_multiplicative(g, h):
    assert tutte(disjoint_union(g, h)) == tutte(g) * tutte(h)
    assert tutte(one_point_join(g, h, 0, h.vertex_count - 1)) == tutte(g) * tutte(h)


def test_two_triangles_product():
    bowtie = one_point_join(complete_graph(3), complete_graph(3), 0, 0)
    assert tutte(bowtie) == tutte(complete_graph(3)) * tutte(complete_graph(3))


@given(multigraphs(max_edges=8, loops=False, connected=True))
@settings(max_examples=60, deadline=None)
def test_block_factorization(g):
    prod = BiPoly.one()
    for b in blocks(g):
        prod = prod * tutte(b)
    assert prod == tutte(g)


@given(multigraphs(max_edges=8))
@settings(max_examples=80, deadline=None)
def test_loop_divisibility_and_nonnegative(g):
    t = tutte(g)
    s = sum(1 for a, b in g.edges if a == b)
    assert all(c > 0 for c in t.terms.values())
    assert min(j for _, j in t.terms) == s


@given(multigraphs(max_edges=7))
@settings(max_examples=60, deadline=None)
def test_strong_and_fast_keys_agree(g):
    assert tutte(g, key_mode="strong") == tutte(g, key_mode="fast")


def test_shared_cache_reuses_blocks():
    eng = TutteEngine(shared_cache=True, key_mode="strong")
    eng(complete_graph(4))
    misses = eng.misses
    eng(relabel(complete_graph(4), [3, 1, 0, 2]))
    assert eng.misses == misses and eng.hits > 0


def test_canonical_key_examples():
    tri = complete_graph(3)
    assert canonical_key(tri) == canonical_key(relabel(tri, [2, 0, 1]))
    assert canonical_key(tri) != canonical_key(path_graph(4))
    k4 = complete_graph(4)
    assert canonical_key(k4) == canonical_key(MultiGraph(4, ((2, 3), (0, 3), (1, 3), (0, 1), (0, 2), (1, 2))))
    with pytest.raises(ValueError):
        canonical_key(tri, mode="other")


@given(multigraphs(max_edges=7))
@settings(max_examples=60, deadline=None)
def test_fast_key_equal_means_isomorphic(g):
    perm = list(range(g.vertex_count))
    random.Random(1).shuffle(perm)
    h = relabel(g, perm)
    if canonical_key(g, "fast") == canonical_key(h, "fast"):
        assert canonical_key(g) == canonical_key(h)


# point evaluation


def test_tutte_eval_examples():
    assert tutte_eval(k4_minus_e(), 1, 1) == 8
    assert tutte_eval(complete_graph(3), -1, -1) == -1
    for g in (k4_minus_e(), complete_graph(4), dipole(3), bouquet(2)):
        assert tutte_eval(g, 2, 2) == 2**g.edge_count


@given(multigraphs(max_edges=7))
@settings(max_examples=60, deadline=None)
def test_tutte_eval_matches_polynomial(g):
    t = tutte(g)
    for x, y in ((Fraction(1, 3), Fraction(-5, 2)), (0, 0), (-1, 2)):
        assert tutte_eval(g, x, y) == t.eval(x, y)


# recipe theorem


def _recipe_by_subsets(g, a, b, x0, y0):
    r = rank(g)
    nul = g.edge_count - r
    total = Fraction(0)
    for (cr, n_a), cnt in rank_nullity_profile(g).items():
        total += cnt * Fraction(a) ** (nul - n_a) * Fraction(b) ** (r - cr) * (x0 - Fraction(b)) ** cr * (y0 - Fraction(a)) ** n_a
    return total


def test_recipe_examples():
    assert tg_invariant_eval(k4_minus_e(), 1, 1, 1, 1) == 8
    assert tg_invariant_eval(path_graph(2), 1, 1, 5, 7) == 5
    assert tg_invariant_eval(bouquet(1), 1, 1, 5, 7) == 7


def test_recipe_reproduces_reliability():
    for g in (k4_minus_e(), complete_graph(4), MultiGraph(3, ((0, 1), (1, 2), (1, 2), (2, 2)))):
        rel = reliability_polynomial(g)
        for p in (Fraction(1, 3), Fraction(3, 4), Fraction(0), Fraction(1)):
            assert tg_invariant_eval(g, 1 - p, p, p, 1) == rel(p)


small_q = st.fractions(min_value=-5, max_value=5, max_denominator=5)


@given(multigraphs(max_edges=6), small_q, small_q, small_q, small_q)
@settings(max_examples=80, deadline=None)
def test_recipe_matches_subset_sum(g, a, b, x0, y0):
    assert tg_invariant_eval(g, a, b, x0, y0) == _recipe_by_subsets(g, a, b, x0, y0)


@pytest.mark.parametrize("a, b", [(0, 1), (1, 0), (0, 0)])
def test_recipe_with_zero_constants(a, b):
    for g in (k4_minus_e(), dipole(3), MultiGraph(2, ((0, 1), (1, 1)))):
        assert tg_invariant_eval(g, a, b, 3, 5) == _recipe_by_subsets(g, a, b, Fraction(3), Fraction(5))
