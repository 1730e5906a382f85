"""Graph polynomials obtained from the Tutte polynomial.

Most quantities here are computed twice: once by substituting into
``T(G; x, y)`` and once from their own definition, so the two can be
compared exactly.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, prod
from typing import Sequence

from .engine import tutte
from .errors import GraphInputError, NotConnectedError
from .multigraph import (
    MultiGraph,
    block_edge_sets,
    blocks,
    components,
    contract_edges,
    count_components,
    induced_subgraph,
    rank,
    restrict,
)
from .oracles import Budgets, DEFAULT_BUDGETS, _check, _subset_budget, _subset_edges
from .polynomial import BiPoly, UniPoly

LAMBDA = UniPoly.var()

__all__ = [
    "chromatic_polynomial",
    "chromatic_whitney",
    "count_proper_colorings",
    "flow_polynomial",
    "bad_coloring_polynomial",
    "bad_coloring_via_tutte",
    "count_bad_colorings",
    "reliability_polynomial",
    "reliability_product",
    "reliability_bruteforce",
    "face_enumerators",
    "face_vectors_direct",
    "shelling_polynomials",
    "h_vectors",
    "beta_invariant",
    "beta_from_tutte",
    "brylawski_sums",
    "brylawski_coefficient_check",
    "convolution_sum",
    "convolution_identity_check",
    "tutte_chromatic_identity_check",
    "duality_report",
    "duality_check",
    "critical_config_polynomial_via_tutte",
    "block_factorization",
    "swap_xy",
]


def _t(g: MultiGraph, poly: BiPoly | None) -> BiPoly:
    return poly if poly is not None else tutte(g)


def uni_to_bi(p: UniPoly, var: str) -> BiPoly:
    """Embed a univariate polynomial as a polynomial in ``x`` or ``y``."""
    if var == "x":
        return BiPoly({(d, 0): c for d, c in enumerate(p.coeffs)})
    return BiPoly({(0, d): c for d, c in enumerate(p.coeffs)})


def swap_xy(p: BiPoly) -> BiPoly:
    return BiPoly({(j, i): c for (i, j), c in p.items()})


# ---------------------------------------------------------------------------
# chromatic
# ---------------------------------------------------------------------------

def chromatic_polynomial(g: MultiGraph, poly: BiPoly | None = None) -> UniPoly:
    """``(-1)^r(E) λ^κ(G) T(G; 1 - λ, 0)``."""
    t = _t(g, poly)
    kappa = count_components(g.vertex_count, g.edges)
    r = g.vertex_count - kappa
    inner = t.substitute(1 - LAMBDA, UniPoly(), UniPoly.constant(1))
    return inner * LAMBDA**kappa * (-1) ** r


def chromatic_whitney(g: MultiGraph, budgets: Budgets | None = None) -> UniPoly:
    """``sum_A (-1)^|A| λ^κ(A)``."""
    _subset_budget(g, budgets)
    coeffs: dict[int, int] = {}
    for mask in range(1 << g.edge_count):
        edges = _subset_edges(g, mask)
        k = count_components(g.vertex_count, edges)
        coeffs[k] = coeffs.get(k, 0) + (-1) ** len(edges)
    return UniPoly.from_dict(coeffs)


def _all_colorings(n: int, colors: int, budgets: Budgets | None):
    _check("colourings", colors**n, (budgets or DEFAULT_BUDGETS).max_configs)
    if n == 0:
        yield ()
        return
    if colors == 0:
        return
    phi = [0] * n
    while True:
        yield tuple(phi)
        i = 0
        while i < n:
            phi[i] += 1
            if phi[i] < colors:
                break
            phi[i] = 0
            i += 1
        if i == n:
            return


def count_proper_colorings(g: MultiGraph, colors: int, budgets: Budgets | None = None) -> int:
    return sum(
        1
        for phi in _all_colorings(g.vertex_count, colors, budgets)
        if all(phi[a] != phi[b] for a, b in g.edges)
    )


# ---------------------------------------------------------------------------
# flow
# ---------------------------------------------------------------------------

def flow_polynomial(g: MultiGraph, poly: BiPoly | None = None) -> UniPoly:
    """``(-1)^(|E| - r(E)) T(G; 0, 1 - λ)``."""
    t = _t(g, poly)
    nul = g.edge_count - rank(g)
    return t.substitute(UniPoly(), 1 - LAMBDA, UniPoly.constant(1)) * (-1) ** nul


# ---------------------------------------------------------------------------
# bad colourings; the result is a BiPoly in (λ, t) stored as (x, y)
# ---------------------------------------------------------------------------

def bad_coloring_polynomial(g: MultiGraph, budgets: Budgets | None = None) -> BiPoly:
    """``B(G; λ, t)`` from ``B(G; λ, t + 1) = sum_A t^|A| λ^κ(A)``.

    Shifting ``t`` back gives ``B(G; λ, t) = sum_A (t - 1)^|A| λ^κ(A)``.
    The returned polynomial uses ``x`` for λ and ``y`` for ``t``.
    """
    _subset_budget(g, budgets)
    profile: dict[tuple[int, int], int] = {}
    for mask in range(1 << g.edge_count):
        edges = _subset_edges(g, mask)
        key = (len(edges), count_components(g.vertex_count, edges))
        profile[key] = profile.get(key, 0) + 1
    total = BiPoly.zero()
    t_minus_1 = BiPoly.y() - 1
    for (size, k), cnt in profile.items():
        total = total + (t_minus_1**size).shift(k, 0).scale(cnt)
    return total


def bad_coloring_via_tutte(g: MultiGraph, poly: BiPoly | None = None) -> BiPoly:
    """``B(G; λ, t)`` from ``t^r λ^κ T(G; (λ + t)/t, 1 + t)`` with ``t -> t - 1``.

    ``T`` has x-degree at most ``r``, so ``t^r`` is distributed over the
    terms and no division happens.
    """
    t_poly = _t(g, poly)
    kappa = count_components(g.vertex_count, g.edges)
    r = g.vertex_count - kappa
    lam, t = BiPoly.x(), BiPoly.y() - 1
    total = BiPoly.zero()
    for (i, j), c in t_poly.items():
        total = total + ((lam + t) ** i * t ** (r - i) * (t + 1) ** j).scale(c)
    return total.shift(kappa, 0)


def count_bad_colorings(g: MultiGraph, colors: int, budgets: Budgets | None = None) -> list[int]:
    """``b_j``: colourings with exactly ``j`` monochromatic edges, ``j = 0..|E|``."""
    out = [0] * (g.edge_count + 1)
    for phi in _all_colorings(g.vertex_count, colors, budgets):
        out[sum(phi[a] == phi[b] for a, b in g.edges)] += 1
    return out


# ---------------------------------------------------------------------------
# reliability
# ---------------------------------------------------------------------------

def reliability_polynomial(g: MultiGraph, poly: BiPoly | None = None) -> UniPoly:
    """All-terminal reliability ``R(G; p)`` of a connected graph.

    Uses ``T(G; 1, y + 1) = sum_k g_k y^k`` where ``g_k`` counts spanning
    connected subgraphs with ``k + n - 1`` edges.
    """
    if count_components(g.vertex_count, g.edges) > 1:
        raise NotConnectedError("reliability needs a connected graph; see reliability_product")
    t = _t(g, poly)
    n, m = g.vertex_count, g.edge_count
    g_k = t.substitute(UniPoly.constant(1), LAMBDA + 1, UniPoly.constant(1))
    p, q = LAMBDA, 1 - LAMBDA
    r = max(n - 1, 0)
    total = UniPoly()
    for k, c in enumerate(g_k.coeffs):
        total = total + p ** (k + r) * q ** (m - k - r) * c
    return total


def reliability_product(g: MultiGraph) -> UniPoly:
    """Reliability extended multiplicatively over connected components."""
    out = UniPoly.constant(1)
    for verts in components(g):
        out = out * reliability_polynomial(induced_subgraph(g, verts))
    return out


def reliability_bruteforce(g: MultiGraph, budgets: Budgets | None = None) -> UniPoly:
    """``sum over spanning connected A of p^|A| (1 - p)^|E - A|``."""
    _subset_budget(g, budgets)
    m = g.edge_count
    total = UniPoly()
    for mask in range(1 << m):
        edges = _subset_edges(g, mask)
        if count_components(g.vertex_count, edges) == 1:
            total = total + LAMBDA ** len(edges) * (1 - LAMBDA) ** (m - len(edges))
    return total


# ---------------------------------------------------------------------------
# face enumerators and shelling polynomials
# ---------------------------------------------------------------------------

def _require_connected(g: MultiGraph, what: str) -> None:
    if count_components(g.vertex_count, g.edges) > 1:
        raise NotConnectedError(f"{what} needs a connected graph")


def face_enumerators(g: MultiGraph, poly: BiPoly | None = None) -> tuple[UniPoly, UniPoly]:
    """``(T(G; x + 1, 1), T(G; 1, y + 1))``: face enumerators of the forest
    complex and of the complex of complements of spanning connected subgraphs."""
    _require_connected(g, "face enumerators")
    t = _t(g, poly)
    one = UniPoly.constant(1)
    return t.substitute(LAMBDA + 1, one, one), t.substitute(one, LAMBDA + 1, one)


def face_vectors_direct(g: MultiGraph, budgets: Budgets | None = None) -> tuple[list[int], list[int]]:
    """f-vectors by enumeration.

    ``f[k]`` counts forests with ``k`` edges (``k = 0..r(E)``); ``f_star[i]``
    counts complements of spanning connected subgraphs with ``i`` edges
    (``i = 0..|E| - r(E)``).
    """
    _require_connected(g, "face vectors")
    _subset_budget(g, budgets)
    n, m = g.vertex_count, g.edge_count
    d = rank(g)
    f = [0] * (d + 1)
    f_star = [0] * (m - d + 1)
    for mask in range(1 << m):
        edges = _subset_edges(g, mask)
        k = count_components(n, edges)
        if len(edges) == n - k:
            f[len(edges)] += 1
        if k == 1:
            f_star[m - len(edges)] += 1
    return f, f_star


def enumerator_from_vector(vec: Sequence[int]) -> UniPoly:
    """``sum_k vec[k] z^(d - k)`` with ``d = len(vec) - 1``."""
    d = len(vec) - 1
    return UniPoly.from_dict({d - k: c for k, c in enumerate(vec)})


def shelling_polynomials(g: MultiGraph, poly: BiPoly | None = None) -> tuple[UniPoly, UniPoly]:
    """``(T(G; x, 1), T(G; 1, y))``."""
    _require_connected(g, "shelling polynomials")
    t = _t(g, poly)
    return t.substitute_line("y", 1), t.substitute_line("x", 1)


def h_vectors(g: MultiGraph, poly: BiPoly | None = None) -> tuple[list[int], list[int]]:
    """h-vectors read off the shelling polynomials (``h_i`` is the coefficient of ``z^(d-i)``)."""
    h, h_star = shelling_polynomials(g, poly)
    d = rank(g)
    d_star = g.edge_count - d
    return [h.coefficient(d - i) for i in range(d + 1)], [h_star.coefficient(d_star - i) for i in range(d_star + 1)]


# ---------------------------------------------------------------------------
# beta invariant and coefficient identities
# ---------------------------------------------------------------------------

def beta_invariant(g: MultiGraph, budgets: Budgets | None = None) -> int:
    """``(-1)^r(E) sum_A (-1)^|A| r(A)``."""
    _subset_budget(g, budgets)
    n = g.vertex_count
    total = 0
    for mask in range(1 << g.edge_count):
        edges = _subset_edges(g, mask)
        total += (-1) ** len(edges) * (n - count_components(n, edges))
    return (-1) ** rank(g) * total


def beta_from_tutte(g: MultiGraph, poly: BiPoly | None = None) -> tuple[int, int]:
    """``(t_10, t_01)``."""
    t = _t(g, poly)
    return t.coefficient(1, 0), t.coefficient(0, 1)


def brylawski_sums(t: BiPoly, m: int) -> list[int]:
    """``sum_i sum_j (-1)^j C(k-i, j) t_ij`` for ``k = 0..m-1``."""
    out = []
    for k in range(m):
        s = 0
        for i in range(k + 1):
            for j in range(k - i + 1):
                s += (-1) ** j * comb(k - i, j) * t.coefficient(i, j)
        out.append(s)
    return out


def brylawski_coefficient_check(t: BiPoly, m: int) -> bool:
    return all(s == 0 for s in brylawski_sums(t, m))


def convolution_sum(g: MultiGraph, budgets: Budgets | None = None) -> BiPoly:
    """``sum_A T(G/A; x, 0) T(G|_A; 0, y)``."""
    _subset_budget(g, budgets)
    m = g.edge_count
    total = BiPoly.zero()
    for size in range(m + 1):
        for a in combinations(range(m), size):
            contracted = tutte(contract_edges(g, a))
            restricted = tutte(restrict(g, a))
            left = BiPoly({(i, 0): c for (i, j), c in contracted.items() if j == 0})
            right = BiPoly({(0, j): c for (i, j), c in restricted.items() if i == 0})
            total = total + left * right
    return total


def convolution_identity_check(g: MultiGraph, poly: BiPoly | None = None, budgets: Budgets | None = None) -> bool:
    return convolution_sum(g, budgets) == _t(g, poly)


def tutte_chromatic_identity_check(g: MultiGraph, budgets: Budgets | None = None) -> bool:
    """``χ(G; x + y) = sum over vertex sets A of χ(G[A]; x) χ(G[V - A]; y)``."""
    n = g.vertex_count
    _check("vertex subsets", 1 << n, (budgets or DEFAULT_BUDGETS).max_subsets)
    lhs = chromatic_polynomial(g).compose(BiPoly.x() + BiPoly.y())
    rhs = BiPoly.zero()
    for mask in range(1 << n):
        inside = [v for v in range(n) if mask >> v & 1]
        outside = [v for v in range(n) if not mask >> v & 1]
        left = uni_to_bi(chromatic_polynomial(induced_subgraph(g, inside)), "x")
        right = uni_to_bi(chromatic_polynomial(induced_subgraph(g, outside)), "y")
        rhs = rhs + left * right
    return lhs == rhs


# ---------------------------------------------------------------------------
# planar duality (dual pairs are supplied by the caller)
# ---------------------------------------------------------------------------

def duality_report(
    g: MultiGraph, g_star: MultiGraph, edge_bijection: Sequence[int] | None = None, budgets: Budgets | None = None
) -> dict[str, bool]:
    """Check a plane-dual pair sharing an edge identification.

    ``edge_bijection[e]`` is the id in ``g_star`` of the dual of edge ``e``
    of ``g`` (identity by default). Returns one flag per identity:
    ``tutte_swap``, ``rank_duality`` and ``tree_complement``.
    """
    m = g.edge_count
    if g_star.edge_count != m:
        raise GraphInputError(f"edge counts differ: {m} vs {g_star.edge_count}")
    bij = list(range(m)) if edge_bijection is None else list(edge_bijection)
    if sorted(bij) != list(range(m)):
        raise GraphInputError("edge_bijection must be a permutation of the edge ids")
    _subset_budget(g, budgets)

    n, ns = g.vertex_count, g_star.vertex_count
    r_full = n - count_components(n, g.edges)

    def r_g(mask):
        return n - count_components(n, _subset_edges(g, mask))

    def r_star(mask):
        return ns - count_components(ns, [g_star.edges[bij[k]] for k in range(m) if mask >> k & 1])

    full = (1 << m) - 1
    rank_ok = tree_ok = True
    for mask in range(1 << m):
        size = bin(mask).count("1")
        if r_star(mask) != size - r_full + r_g(full ^ mask):
            rank_ok = False
        comp = full ^ mask
        is_tree = size == r_g(mask) == n - 1
        dual_tree = bin(comp).count("1") == r_star(comp) == ns - 1
        if is_tree != dual_tree:
            tree_ok = False
    return {
        "tutte_swap": tutte(g) == swap_xy(tutte(g_star)),
        "rank_duality": rank_ok,
        "tree_complement": tree_ok,
    }


def duality_check(g: MultiGraph, g_star: MultiGraph, edge_bijection: Sequence[int] | None = None) -> bool:
    return all(duality_report(g, g_star, edge_bijection).values())


# ---------------------------------------------------------------------------
# misc
# ---------------------------------------------------------------------------

def critical_config_polynomial_via_tutte(g: MultiGraph, poly: BiPoly | None = None) -> UniPoly:
    """``T(G; 1, y)`` for a connected graph."""
    _require_connected(g, "critical configuration polynomial")
    return _t(g, poly).substitute_line("x", 1)


def block_factorization(g: MultiGraph) -> list[tuple[list[int], BiPoly]]:
    """``(edge ids, T(block))`` per block; their product is ``T(G)``."""
    return [(ids, tutte(b)) for ids, b in zip(block_edge_sets(g), blocks(g))]


def product(polys: Sequence[BiPoly]) -> BiPoly:
    return prod(polys, start=BiPoly.one())
