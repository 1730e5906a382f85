"""Brute-force reference implementations.

Everything here enumerates subsets, spanning trees, orientations or flow
assignments directly, so it is exponential and meant for small graphs
(|E| up to about 16). Each enumeration checks its size against an explicit
budget first and raises :class:`BudgetExceededError` rather than
truncating.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .errors import BudgetExceededError, GraphInputError, NotConnectedError
from .multigraph import MultiGraph, count_components
from .polynomial import BiPoly

__all__ = [
    "Budgets",
    "DEFAULT_BUDGETS",
    "LoopConventionWarning",
    "tutte_rank_nullity",
    "spanning_trees",
    "activity_table",
    "tutte_activities",
    "count_spanning_trees",
    "count_spanning_forests",
    "count_spanning_connected",
    "count_subsets",
    "count_acyclic_orientations",
    "count_totally_cyclic",
    "count_acyclic_unique_source",
    "count_score_vectors",
    "count_nowhere_zero_flows",
    "count_ice_configurations",
    "bicycle_dimension",
    "generalized_activities",
    "derivative_via_activities",
    "orientation_activities",
]


@dataclass(frozen=True)
class Budgets:
    max_subsets: int = 1 << 20
    max_orientations: int = 1 << 20
    max_configs: int = 10**6
    max_flow_assignments: int = 1 << 24


DEFAULT_BUDGETS = Budgets()


class LoopConventionWarning(UserWarning):
    """Result depends on the package's convention for loops."""


def _check(what: str, needed: int, budget: int) -> None:
    if needed > budget:
        raise BudgetExceededError(what, needed, budget)


def _subset_budget(g: MultiGraph, budgets: Budgets | None) -> None:
    _check("edge subsets", 1 << g.edge_count, (budgets or DEFAULT_BUDGETS).max_subsets)


def _orientation_budget(g: MultiGraph, budgets: Budgets | None) -> None:
    _check("orientations", 1 << g.edge_count, (budgets or DEFAULT_BUDGETS).max_orientations)


def _order_positions(g: MultiGraph, order: Sequence[int] | None) -> list[int]:
    """``pos[e]`` = rank of edge ``e`` in ``order`` (smallest first)."""
    m = g.edge_count
    if order is None:
        return list(range(m))
    order = list(order)
    if sorted(order) != list(range(m)):
        raise GraphInputError("order must be a permutation of the edge ids")
    pos = [0] * m
    for r, e in enumerate(order):
        pos[e] = r
    return pos


def _subset_edges(g: MultiGraph, mask: int) -> list[tuple[int, int]]:
    return [g.edges[k] for k in range(g.edge_count) if mask >> k & 1]


def _binomial_expand(p: int, var: str) -> BiPoly:
    """``(x - 1)**p`` or ``(y - 1)**p``."""
    terms = {}
    for a in range(p + 1):
        c = comb(p, a) * (-1) ** (p - a)
        terms[(a, 0) if var == "x" else (0, a)] = c
    return BiPoly(terms)


# ---------------------------------------------------------------------------
# rank-nullity expansion
# ---------------------------------------------------------------------------

def rank_nullity_profile(g: MultiGraph, budgets: Budgets | None = None) -> dict[tuple[int, int], int]:
    """Count subsets ``A`` by ``(r(E) - r(A), n(A))``."""
    _subset_budget(g, budgets)
    n, m = g.vertex_count, g.edge_count
    r_full = n - count_components(n, g.edges)
    profile: dict[tuple[int, int], int] = {}
    for mask in range(1 << m):
        edges = _subset_edges(g, mask)
        r_a = n - count_components(n, edges)
        key = (r_full - r_a, len(edges) - r_a)
        profile[key] = profile.get(key, 0) + 1
    return profile


def tutte_rank_nullity(g: MultiGraph, budgets: Budgets | None = None) -> BiPoly:
    """``sum_A (x-1)^(r(E)-r(A)) (y-1)^n(A)``, expanded symbolically."""
    total = BiPoly.zero()
    for (p, q), count in rank_nullity_profile(g, budgets).items():
        total = total + (_binomial_expand(p, "x") * _binomial_expand(q, "y")).scale(count)
    return total


# ---------------------------------------------------------------------------
# spanning trees and activities
# ---------------------------------------------------------------------------

def _is_spanning_tree(n: int, edges: list[tuple[int, int]]) -> bool:
    return len(edges) == n - 1 and count_components(n, edges) == 1


def spanning_trees(g: MultiGraph, budgets: Budgets | None = None) -> list[frozenset[int]]:
    """All spanning trees of a connected graph, as edge-id sets."""
    n, m = g.vertex_count, g.edge_count
    if count_components(n, g.edges) > 1:
        raise NotConnectedError("spanning trees need a connected graph")
    if n == 0:
        return [frozenset()]
    _check("spanning tree candidates", comb(m, n - 1), (budgets or DEFAULT_BUDGETS).max_subsets)
    candidates = [k for k, (a, b) in enumerate(g.edges) if a != b]
    out = []
    for combo in combinations(candidates, n - 1):
        if count_components(n, [g.edges[k] for k in combo]) == 1:
            out.append(frozenset(combo))
    return out


def activity_table(
    g: MultiGraph, order: Sequence[int] | None = None, budgets: Budgets | None = None
) -> list[tuple[frozenset[int], int, int]]:
    """``(tree, internal activity, external activity)`` for every spanning tree.

    The cut defined by a tree edge ``f`` is taken literally as every edge
    ``f'`` for which ``(S - f) + f'`` is a spanning tree; the cycle defined
    by a non-tree edge ``e`` is every ``h`` in ``S + e`` whose removal
    leaves a spanning tree.
    """
    pos = _order_positions(g, order)
    n, m = g.vertex_count, g.edge_count
    rows = []
    for tree in spanning_trees(g, budgets):
        internal = 0
        for f in tree:
            rest = [g.edges[k] for k in tree if k != f]
            cut = [h for h in range(m) if _is_spanning_tree(n, rest + [g.edges[h]])]
            if min(cut, key=pos.__getitem__) == f:
                internal += 1
        external = 0
        for e in range(m):
            if e in tree:
                continue
            with_e = sorted(tree | {e})
            cycle = [h for h in with_e if _is_spanning_tree(n, [g.edges[k] for k in with_e if k != h])]
            if min(cycle, key=pos.__getitem__) == e:
                external += 1
        rows.append((tree, internal, external))
    return rows


def tutte_activities(g: MultiGraph, order: Sequence[int] | None = None, budgets: Budgets | None = None) -> BiPoly:
    """``sum_{i,j} t_ij x^i y^j`` with ``t_ij`` counted over spanning trees."""
    counts: dict[tuple[int, int], int] = {}
    for _, i, j in activity_table(g, order, budgets):
        counts[(i, j)] = counts.get((i, j), 0) + 1
    return BiPoly(counts)


# ---------------------------------------------------------------------------
# spanning subgraph counts
# ---------------------------------------------------------------------------

def _count_subsets_where(g: MultiGraph, pred, budgets: Budgets | None) -> int:
    _subset_budget(g, budgets)
    n, m = g.vertex_count, g.edge_count
    k_full = count_components(n, g.edges)
    total = 0
    for mask in range(1 << m):
        edges = _subset_edges(g, mask)
        if pred(len(edges), count_components(n, edges), k_full, n):
            total += 1
    return total


def count_spanning_trees(g: MultiGraph, budgets: Budgets | None = None) -> int:
    # acyclic and connected: |A| = n - 1 with one component
    return _count_subsets_where(g, lambda size, k, k_full, n: k == 1 and size == n - 1, budgets)


def count_spanning_forests(g: MultiGraph, budgets: Budgets | None = None) -> int:
    return _count_subsets_where(g, lambda size, k, k_full, n: size == n - k, budgets)


def count_spanning_connected(g: MultiGraph, budgets: Budgets | None = None) -> int:
    return _count_subsets_where(g, lambda size, k, k_full, n: k == k_full, budgets)


def count_subsets(g: MultiGraph, budgets: Budgets | None = None) -> int:
    return _count_subsets_where(g, lambda *_: True, budgets)


# ---------------------------------------------------------------------------
# orientations
# ---------------------------------------------------------------------------

def _arcs(g: MultiGraph, bits: int) -> list[tuple[int, int]]:
    """Bit ``k`` clear: edge ``k`` points ``u -> v``; set: ``v -> u``."""
    return [(b, a) if bits >> k & 1 else (a, b) for k, (a, b) in enumerate(g.edges)]


def _is_acyclic(n: int, arcs: list[tuple[int, int]]) -> bool:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        if a == b:
            return False
        out[a].append(b)
        indeg[b] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def _reach(n: int, out: list[list[int]], src: int) -> list[bool]:
    seen = [False] * n
    seen[src] = True
    stack = [src]
    while stack:
        v = stack.pop()
        for w in out[v]:
            if not seen[w]:
                seen[w] = True
                stack.append(w)
    return seen


def count_acyclic_orientations(g: MultiGraph, budgets: Budgets | None = None) -> int:
    """Orientations with no directed cycle; a loop always is one."""
    _orientation_budget(g, budgets)
    n = g.vertex_count
    return sum(1 for bits in range(1 << g.edge_count) if _is_acyclic(n, _arcs(g, bits)))


def count_totally_cyclic(g: MultiGraph, budgets: Budgets | None = None) -> int:
    """Orientations in which every arc lies on a directed cycle."""
    _orientation_budget(g, budgets)
    n = g.vertex_count
    total = 0
    for bits in range(1 << g.edge_count):
        arcs = _arcs(g, bits)
        out: list[list[int]] = [[] for _ in range(n)]
        for a, b in arcs:
            out[a].append(b)
        reach: dict[int, list[bool]] = {}
        ok = True
        for a, b in arcs:
            if a == b:
                continue
            if b not in reach:
                reach[b] = _reach(n, out, b)
            if not reach[b][a]:
                ok = False
                break
        total += ok
    return total


def count_acyclic_unique_source(g: MultiGraph, v: int, budgets: Budgets | None = None) -> int:
    """Acyclic orientations whose only source is ``v``."""
    g.check_vertex(v)
    _orientation_budget(g, budgets)
    n = g.vertex_count
    total = 0
    for bits in range(1 << g.edge_count):
        arcs = _arcs(g, bits)
        if not _is_acyclic(n, arcs):
            continue
        has_in = [False] * n
        for _, b in arcs:
            has_in[b] = True
        if [w for w in range(n) if not has_in[w]] == [v]:
            total += 1
    return total


def count_score_vectors(g: MultiGraph, budgets: Budgets | None = None) -> int:
    """Distinct out-degree vectors; a loop adds one to its vertex either way."""
    _orientation_budget(g, budgets)
    n = g.vertex_count
    seen = set()
    for bits in range(1 << g.edge_count):
        score = [0] * n
        for a, _ in _arcs(g, bits):
            score[a] += 1
        seen.add(tuple(score))
    return len(seen)


# ---------------------------------------------------------------------------
# flows
# ---------------------------------------------------------------------------

def count_nowhere_zero_flows(
    g: MultiGraph, k: int, flip: Sequence[int] = (), budgets: Budgets | None = None
) -> int:
    """Nowhere-zero ``Z_k`` flows for the reference orientation ``u -> v``.

    Edges listed in ``flip`` are reversed first. Assignment is by
    backtracking; a vertex is checked for conservation as soon as its last
    incident edge is set.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    flips = set(flip)
    for e in flips:
        g.check_edge(e)
    arcs = [((b, a) if idx in flips else (a, b)) for idx, (a, b) in enumerate(g.edges)]
    loops = sum(1 for a, b in arcs if a == b)
    plain = [e for e in arcs if e[0] != e[1]]
    _check("flow assignments", (k - 1) ** len(plain), (budgets or DEFAULT_BUDGETS).max_flow_assignments)
    if k == 1:
        return 1 if not arcs else 0
    plain.sort(key=lambda e: (max(e), min(e)))
    n = g.vertex_count
    last = [-1] * n
    for idx, (a, b) in enumerate(plain):
        last[a] = idx
        last[b] = idx
    closes: list[list[int]] = [[] for _ in plain]
    for v in range(n):
        if last[v] >= 0:
            closes[last[v]].append(v)
    net = [0] * n

    def go(idx: int) -> int:
        if idx == len(plain):
            return 1
        a, b = plain[idx]
        total = 0
        for val in range(1, k):
            net[a] -= val
            net[b] += val
            if all(net[v] % k == 0 for v in closes[idx]):
                total += go(idx + 1)
            net[a] += val
            net[b] -= val
        return total

    return go(0) * (k - 1) ** loops


def count_ice_configurations(g: MultiGraph, budgets: Budgets | None = None) -> int:
    """Orientations of a 4-regular graph with in-degree 2 at every vertex.

    A loop contributes one in and one out under either direction bit, so
    each loop doubles the count. A :class:`LoopConventionWarning` is issued
    when loops are present.
    """
    if any(d != 4 for d in g.degrees()):
        raise GraphInputError("ice configurations need a 4-regular graph")
    _orientation_budget(g, budgets)
    if g.has_loop():
        warnings.warn("loops counted as one in-arc and one out-arc", LoopConventionWarning, stacklevel=2)
    n = g.vertex_count
    total = 0
    for bits in range(1 << g.edge_count):
        indeg = [0] * n
        for _, b in _arcs(g, bits):
            indeg[b] += 1
        if all(d == 2 for d in indeg):
            total += 1
    return total


# ---------------------------------------------------------------------------
# bicycle space over GF(2)
# ---------------------------------------------------------------------------

def _gf2_basis(vectors: list[int]) -> list[int]:
    """Reduced row basis of a set of bitmask vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def _gf2_nullspace(rows: list[int], m: int) -> list[int]:
    """Basis of ``{x : row . x = 0 for every row}`` in GF(2)^m."""
    pivots: dict[int, int] = {}  # pivot column -> row
    for r in rows:
        for col, pr in pivots.items():
            if r >> col & 1:
                r ^= pr
        if not r:
            continue
        col = r.bit_length() - 1
        for c2 in list(pivots):
            if pivots[c2] >> col & 1:
                pivots[c2] ^= r
        pivots[col] = r
    free = [c for c in range(m) if c not in pivots]
    out = []
    for f in free:
        vec = 1 << f
        for col, r in pivots.items():
            if r >> f & 1:
                vec |= 1 << col
        out.append(vec)
    return out


def bicycle_dimension(g: MultiGraph) -> int:
    """``dim(C ∩ C⊥)`` over GF(2), C the cycle space of ``g``."""
    m = g.edge_count
    incidence = [0] * g.vertex_count
    for k, (a, b) in enumerate(g.edges):
        if a != b:
            incidence[a] ^= 1 << k
            incidence[b] ^= 1 << k
    cut_basis = _gf2_basis(incidence)
    cycle_basis = _gf2_nullspace(incidence, m)
    joint = _gf2_basis(cut_basis + cycle_basis)
    return len(cycle_basis) + len(cut_basis) - len(joint)


# ---------------------------------------------------------------------------
# generalised activities and derivatives
# ---------------------------------------------------------------------------

def _connected_via(n: int, edges: list[tuple[int, int]], u: int, v: int) -> bool:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        parent[find(a)] = find(b)
    return find(u) == find(v)


def generalized_activities(g: MultiGraph, a: frozenset[int], pos: Sequence[int]) -> tuple[int, int]:
    """``(in(A), ex(A))`` for an arbitrary edge set ``A``.

    ``e`` in ``A`` is internally active if some cut through ``e`` uses only
    ``e`` and edges outside ``A``, with ``e`` smallest: equivalently the
    endpoints of ``e`` are separated once ``A - e`` and the smaller edges
    outside ``A`` are kept. ``e`` outside ``A`` is externally active if it
    closes a cycle with larger edges of ``A`` (a loop always does).
    """
    n = g.vertex_count
    internal = external = 0
    for e, (u, v) in enumerate(g.edges):
        pe = pos[e]
        if e in a:
            if u == v:
                continue
            keep = [g.edges[f] for f in range(g.edge_count)
                    if f != e and (f in a or pos[f] < pe)]
            if not _connected_via(n, keep, u, v):
                internal += 1
        else:
            if u == v:
                external += 1
                continue
            keep = [g.edges[f] for f in a if pos[f] > pe]
            if _connected_via(n, keep, u, v):
                external += 1
    return internal, external


def derivative_table(
    g: MultiGraph, order: Sequence[int] | None = None, budgets: Budgets | None = None
) -> dict[tuple[int, int], BiPoly]:
    """``{(p, q): sum over A x^in(A) y^ex(A)}`` without the ``p! q!`` factor."""
    _subset_budget(g, budgets)
    pos = _order_positions(g, order)
    n, m = g.vertex_count, g.edge_count
    r_full = n - count_components(n, g.edges)
    buckets: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    for mask in range(1 << m):
        a = frozenset(k for k in range(m) if mask >> k & 1)
        r_a = n - count_components(n, [g.edges[k] for k in a])
        key = (r_full - r_a, len(a) - r_a)
        act = generalized_activities(g, a, pos)
        bucket = buckets.setdefault(key, {})
        bucket[act] = bucket.get(act, 0) + 1
    return {key: BiPoly(b) for key, b in buckets.items()}


def derivative_via_activities(
    g: MultiGraph, p: int, q: int, order: Sequence[int] | None = None, budgets: Budgets | None = None
) -> BiPoly:
    """``p! q! sum x^in(A) y^ex(A)`` over ``A`` with corank ``p`` and nullity ``q``."""
    if p < 0 or q < 0:
        raise ValueError("derivative orders must be non-negative")
    table = derivative_table(g, order, budgets)
    return table.get((p, q), BiPoly.zero()).scale(factorial(p) * factorial(q))


# ---------------------------------------------------------------------------
# orientation activities
# ---------------------------------------------------------------------------

def _smallest_on_directed_cycle(n: int, arcs, e: int, pos) -> bool:
    a, b = arcs[e]
    if a == b:
        return True
    out: list[list[int]] = [[] for _ in range(n)]
    for f, (s, t) in enumerate(arcs):
        if pos[f] > pos[e]:
            out[s].append(t)
    return _reach(n, out, b)[a]


def _smallest_on_directed_cocycle(n: int, arcs, e: int, pos) -> bool:
    """Is there a vertex set ``S`` holding the tail of ``e`` but not its head,
    with every edge across it leaving ``S`` and none smaller than ``e``?

    The smallest candidate ``S`` is the closure of the tail under smaller
    edges (either direction) and under larger arcs entering ``S``.
    """
    u, v = arcs[e]
    if u == v:
        return False
    pe = pos[e]
    nbr: list[list[int]] = [[] for _ in range(n)]
    for f, (s, t) in enumerate(arcs):
        if f == e or s == t:
            continue
        if pos[f] < pe:
            nbr[s].append(t)
            nbr[t].append(s)
        else:
            nbr[t].append(s)  # arc s -> t entering S forces s into S
    return not _reach(n, nbr, u)[v]


def orientation_activities(
    g: MultiGraph, order: Sequence[int] | None = None, budgets: Budgets | None = None
) -> dict[tuple[int, int], int]:
    """``o_ij``: orientations with ``i`` edges smallest on a directed cocycle
    and ``j`` edges smallest on a directed cycle."""
    _orientation_budget(g, budgets)
    pos = _order_positions(g, order)
    n, m = g.vertex_count, g.edge_count
    table: dict[tuple[int, int], int] = {}
    for bits in range(1 << m):
        arcs = _arcs(g, bits)
        i = sum(_smallest_on_directed_cocycle(n, arcs, e, pos) for e in range(m))
        j = sum(_smallest_on_directed_cycle(n, arcs, e, pos) for e in range(m))
        table[(i, j)] = table.get((i, j), 0) + 1
    return table


def tutte_from_orientation_activities(table: dict[tuple[int, int], int]) -> BiPoly:
    """Divide ``o_ij`` by ``2^(i+j)``; raises if any division is inexact."""
    terms = {}
    for (i, j), o in table.items():
        q, r = divmod(o, 1 << (i + j))
        if r:
            raise ArithmeticError(f"o[{i},{j}] = {o} is not divisible by 2^{i + j}")
        terms[(i, j)] = q
    return BiPoly(terms)
