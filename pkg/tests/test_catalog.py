import random

from tuttepoly.catalog import (
    connected_catalog,
    dual_pairs,
    four_regular_graphs,
    random_multigraph,
    random_series_parallel,
)
from tuttepoly.multigraph import blocks, canonical_form, classify_edge
from tuttepoly.verify import verify_dual_pairs, verify_graph
from tuttepoly import oracles
from tuttepoly.catalog import k4_minus_e


def test_catalog_is_connected_and_duplicate_free(catalog):
    assert len(catalog) == 1177
    assert all(g.is_connected() for g in catalog)
    assert len({canonical_form(g) for g in catalog}) == len(catalog)
    assert all(g.vertex_count <= 5 and g.edge_count <= 7 for g in catalog)


def test_small_catalog_counts():
    # one vertex with 0..2 loops; the edge, digon, edge+loop; the 2-path
    assert len(connected_catalog(1, 2)) == 3
    assert len(connected_catalog(2, 2)) == 6
    assert len(connected_catalog(3, 2)) == 7


def test_random_multigraph_shape():
    rng = random.Random(0)
    for _ in range(50):
        g = random_multigraph(rng, 5, 7)
        assert g.vertex_count == 5 and g.edge_count == 7 and g.is_connected()
        assert not random_multigraph(rng, 4, 6, loops=False).has_loop()


def test_series_parallel_generator():
    rng = random.Random(4)
    for _ in range(30):
        g = random_series_parallel(rng, 12)
        assert 2 <= g.edge_count <= 12
        assert not g.has_loop()
        assert len(blocks(g)) == 1
        assert all(classify_edge(g, e) == "ordinary" for e in range(g.edge_count))


def test_four_regular_graphs():
    graphs = four_regular_graphs()
    assert len(graphs) >= 3
    for _, g in graphs:
        assert all(d == 4 for d in g.degrees())


def test_dual_pairs_have_matching_sizes():
    for name, g, g_star, bij in dual_pairs():
        assert g.edge_count == g_star.edge_count == len(bij)
        # Euler: V - E + F = 2
        assert g.vertex_count - g.edge_count + g_star.vertex_count == 2, name


def test_verify_graph_all_pass():
    results = verify_graph(k4_minus_e())
    assert len(results) >= 30
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_verify_dual_pairs_all_pass():
    assert all(r.passed for r in verify_dual_pairs())


def test_verify_detects_corrupted_oracle(monkeypatch):
    real = oracles.count_spanning_trees
    monkeypatch.setattr(oracles, "count_spanning_trees", lambda g, b=None: real(g, b) + 1)
    failed = [r.name for r in verify_graph(k4_minus_e()) if not r.passed]
    assert failed == ["T(1,1) spanning trees"]
