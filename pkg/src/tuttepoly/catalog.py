"""Named graphs, the exhaustive small-graph catalog, random generators and dual pairs."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from .multigraph import MultiGraph, canonical_form

__all__ = [
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "dipole",
    "bouquet",
    "k4_minus_e",
    "triangle",
    "octahedron",
    "cube",
    "connected_catalog",
    "random_multigraph",
    "random_series_parallel",
    "dual_pairs",
    "four_regular_graphs",
    "NAMED",
]


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> MultiGraph:
    """``C_n``; ``n = 1`` is a loop and ``n = 2`` a digon."""
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    if n == 1:
        return MultiGraph(1, ((0, 0),))
    return MultiGraph(n, tuple((i, (i + 1) % n) if i + 1 < n else (0, n - 1) for i in range(n)))


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def dipole(m: int) -> MultiGraph:
    """Two vertices joined by ``m`` parallel edges."""
    return MultiGraph(2, ((0, 1),) * m)


def bouquet(m: int) -> MultiGraph:
    """One vertex with ``m`` loops."""
    return MultiGraph(1, ((0, 0),) * m)


def triangle() -> MultiGraph:
    return complete_graph(3)


def k4_minus_e() -> MultiGraph:
    return MultiGraph(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)))


def octahedron() -> MultiGraph:
    # vertices 2c and 2c+1 are the two ends of axis c; opposite vertices are not adjacent
    return MultiGraph(6, tuple((u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2))


def cube() -> MultiGraph:
    return MultiGraph(8, tuple((u, u | (1 << k)) for u in range(8) for k in range(3) if not u & (1 << k)))


NAMED = {
    "triangle": triangle,
    "k4": lambda: complete_graph(4),
    "k4-e": k4_minus_e,
    "k5": lambda: complete_graph(5),
    "octahedron": octahedron,
    "cube": cube,
}


def _augment(g: MultiGraph) -> list[MultiGraph]:
    n = g.vertex_count
    return [MultiGraph(n, g.edges + ((a, b),)) for a in range(n) for b in range(a, n)]


@lru_cache(maxsize=None)
def _graphs_with(n: int, m: int) -> tuple[MultiGraph, ...]:
    """All multigraphs (loops allowed) on ``n`` vertices with ``m`` edges, up to isomorphism."""
    if m == 0:
        return (MultiGraph(n, ()),)
    seen: dict = {}
    for g in _graphs_with(n, m - 1):
        for h in _augment(g):
            key = canonical_form(h)
            if key not in seen:
                seen[key] = MultiGraph(key[0], key[1])
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def connected_catalog(max_vertices: int = 5, max_edges: int = 7) -> tuple[MultiGraph, ...]:
    """Every connected multigraph with loops, 1..max_vertices vertices and
    at most ``max_edges`` edges, one per isomorphism class, in a fixed order."""
    out = []
    for n in range(1, max_vertices + 1):
        for m in range(n - 1, max_edges + 1):
            out.extend(g for g in _graphs_with(n, m) if g.is_connected())
    return tuple(out)


def random_multigraph(rng: random.Random, n: int, m: int, loops: bool = True, connected: bool = True) -> MultiGraph:
    """Random multigraph; with ``connected`` a random spanning tree is laid down first."""
    edges = []
    if connected:
        if m < n - 1:
            raise ValueError("too few edges for a connected graph")
        for v in range(1, n):
            edges.append((rng.randrange(v), v))
    while len(edges) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b and not loops:
            continue
        edges.append((min(a, b), max(a, b)))
    rng.shuffle(edges)
    return MultiGraph(n, tuple(edges))


def random_series_parallel(rng: random.Random, max_edges: int = 12) -> MultiGraph:
    """2-connected series-parallel graph grown from a digon.

    Each step either doubles an edge (parallel) or subdivides it
    (series); both keep the graph 2-connected and series-parallel.
    """
    n = 2
    edges = [(0, 1), (0, 1)]
    target = rng.randint(2, max_edges)
    while len(edges) < target:
        k = rng.randrange(len(edges))
        a, b = edges[k]
        if rng.random() < 0.5:
            edges.append((a, b))
        else:
            w = n
            n += 1
            edges[k] = (a, w)
            edges.append((b, w))
    return MultiGraph(n, tuple((min(a, b), max(a, b)) for a, b in edges))


def _k4_dual() -> tuple[MultiGraph, MultiGraph, list[int]]:
    g = complete_graph(4)  # 01 02 03 12 13 23
    # draw vertex 3 inside triangle 012; faces 013, 123, 023 and the outer face 012
    # become dual vertices 0, 1, 2, 3, and edge k of g crosses dual edge k
    star = MultiGraph(4, ((0, 3), (2, 3), (0, 2), (1, 3), (0, 1), (1, 2)))
    return g, star, list(range(6))


def _cube_dual() -> tuple[MultiGraph, MultiGraph, list[int]]:
    g = cube()
    # face (c, s) of the cube is {u : bit c of u = s}; it is octahedron vertex 2c + s.
    # A cube edge flipping bit k lies on the two faces fixing the other two coordinates.
    dual_edges = []
    for u, v in g.edges:
        k = (u ^ v).bit_length() - 1
        c1, c2 = (c for c in range(3) if c != k)
        f1, f2 = 2 * c1 + ((u >> c1) & 1), 2 * c2 + ((u >> c2) & 1)
        dual_edges.append((min(f1, f2), max(f1, f2)))
    return g, MultiGraph(6, tuple(dual_edges)), list(range(12))


def dual_pairs() -> list[tuple[str, MultiGraph, MultiGraph, list[int]]]:
    """Built-in planar dual pairs ``(name, G, G*, bijection)``; edge ``k`` of G
    corresponds to edge ``bijection[k]`` of G*."""
    pairs = [("bridge/loop", path_graph(2), bouquet(1), [0])]
    for n in range(2, 7):
        pairs.append((f"C{n}/dipole{n}", cycle_graph(n), dipole(n), list(range(n))))
    pairs.append(("K4/K4", *_k4_dual()))
    pairs.append(("cube/octahedron", *_cube_dual()))
    return pairs


def four_regular_graphs() -> list[tuple[str, MultiGraph]]:
    return [
        ("dipole4", dipole(4)),
        ("two-loops", bouquet(2)),
        ("K5", complete_graph(5)),
        ("octahedron", octahedron()),
        ("C4-doubled", MultiGraph(4, cycle_graph(4).edges * 2)),
    ]
