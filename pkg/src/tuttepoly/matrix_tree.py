"""Laplacian matrices and spanning-tree counts by exact cofactor determinants."""

from __future__ import annotations

import warnings

from .multigraph import MultiGraph, component_count

__all__ = ["laplacian", "reduced_laplacian", "bareiss_determinant", "spanning_tree_count"]


def laplacian(g: MultiGraph) -> list[list[int]]:
    """``L[i][i] = deg(i)`` (a loop adds 2), ``L[i][j] = -(number of i-j edges)``."""
    n = g.vertex_count
    lap = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        lap[a][a] += 1
        lap[b][b] += 1
        if a != b:
            lap[a][b] -= 1
            lap[b][a] -= 1
    return lap


def reduced_laplacian(g: MultiGraph, q: int) -> list[list[int]]:
    """Laplacian with row and column ``q`` removed."""
    g.check_vertex(q)
    lap = laplacian(g)
    return [[v for j, v in enumerate(row) if j != q] for i, row in enumerate(lap) if i != q]


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; every intermediate is an integer."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: MultiGraph, deleted: int = 0) -> int:
    """Number of spanning trees as the determinant of a first cofactor.

    Loops are dropped first: with the loop-counts-twice diagonal of
    :func:`laplacian` the cofactor would no longer count trees. A
    disconnected graph gives 0 (with a warning); the edgeless one-vertex
    graph has one spanning tree.
    """
    if g.vertex_count == 0:
        return 1
    if component_count(g) > 1:
        warnings.warn("graph is disconnected; the cofactor determinant is 0", RuntimeWarning, stacklevel=2)
    loopless = MultiGraph(g.vertex_count, tuple(e for e in g.edges if e[0] != e[1]))
    return bareiss_determinant(reduced_laplacian(loopless, deleted))
