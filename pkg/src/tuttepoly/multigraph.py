"""Multigraph value type and structural operations.

A :class:`MultiGraph` is a vertex count plus an ordered tuple of edges
``(u, v)``; the position of an edge in the tuple is its id. Loops are
``(u, u)`` and parallel edges are simply repeated pairs. All operations
return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import GraphInputError, ParseError

Edge = tuple[int, int]

__all__ = [
    "MultiGraph",
    "delete_edge",
    "contract_edge",
    "delete_edges",
    "contract_edges",
    "restrict",
    "induced_subgraph",
    "components",
    "component_count",
    "rank",
    "nullity",
    "classify_edge",
    "bridges",
    "block_edge_sets",
    "blocks",
    "disjoint_union",
    "one_point_join",
    "relabel",
    "canonical_form",
    "is_isomorphic",
    "parse_edge_list",
    "format_edge_list",
    "read_edge_list",
]


@dataclass(frozen=True, slots=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex_count must be a non-negative int, got {n!r}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {eid} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> range:
        return range(len(self.edges))

    def degree(self, v: int) -> int:
        """Degree with loops counted twice."""
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def loop_count(self) -> int:
        return sum(1 for a, b in self.edges if a == b)

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)

    def multiplicity(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        return sum(1 for a, b in self.edges if (min(a, b), max(a, b)) == key)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of ``(neighbour, edge_id)``; a loop appears once."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (a, b) in enumerate(self.edges):
            adj[a].append((b, eid))
            if a != b:
                adj[b].append((a, eid))
        return adj

    def is_connected(self) -> bool:
        return component_count(self) <= 1

    def check_edge(self, e: int) -> None:
        if not isinstance(e, int) or not 0 <= e < len(self.edges):
            raise GraphInputError(f"unknown edge id {e!r} (graph has {len(self.edges)} edges)")

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise GraphInputError(f"unknown vertex {v!r} (graph has {self.vertex_count} vertices)")

    def check_subset(self, a: Iterable[int]) -> frozenset[int]:
        s = frozenset(a)
        for e in s:
            self.check_edge(e)
        return s

    def __str__(self):
        return f"MultiGraph(n={self.vertex_count}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# union-find helpers (also used by the oracles)
# ---------------------------------------------------------------------------

def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def component_labels(n: int, edges: Iterable[Edge]) -> list[int]:
    """Root label per vertex for the spanning subgraph with the given edges."""
    parent = list(range(n))
    for a, b in edges:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [_find(parent, v) for v in range(n)]


def count_components(n: int, edges: Iterable[Edge]) -> int:
    parent = list(range(n))
    k = n
    for a, b in edges:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            k -= 1
    return k


def components(g: MultiGraph, a: Iterable[int] | None = None) -> list[list[int]]:
    """Vertex sets of the components of ``(V, A)`` (``A = E`` by default)."""
    edges = g.edges if a is None else [g.edges[e] for e in g.check_subset(a)]
    labels = component_labels(g.vertex_count, edges)
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(labels):
        groups.setdefault(r, []).append(v)
    return list(groups.values())


def component_count(g: MultiGraph, a: Iterable[int] | None = None) -> int:
    """kappa(A): components of the spanning subgraph, isolated vertices included."""
    edges = g.edges if a is None else [g.edges[e] for e in g.check_subset(a)]
    return count_components(g.vertex_count, edges)


def rank(g: MultiGraph, a: Iterable[int] | None = None) -> int:
    return g.vertex_count - component_count(g, a)


def nullity(g: MultiGraph, a: Iterable[int] | None = None) -> int:
    size = g.edge_count if a is None else len(g.check_subset(a))
    return size - rank(g, a)


# ---------------------------------------------------------------------------
# minors
# ---------------------------------------------------------------------------

def delete_edge(g: MultiGraph, e: int) -> MultiGraph:
    g.check_edge(e)
    return MultiGraph(g.vertex_count, g.edges[:e] + g.edges[e + 1:])


def _merge_map(n: int, keep: int, gone: int) -> list[int]:
    """Vertex map for identifying ``gone`` into ``keep`` (keep < gone)."""
    return [keep if v == gone else (v - 1 if v > gone else v) for v in range(n)]


def contract_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Identify the endpoints of ``e`` and drop it.

    The merged vertex takes the smaller index and higher indices shift
    down by one. Contracting a loop is the same as deleting it.
    """
    g.check_edge(e)
    u, v = g.edges[e]
    if u == v:
        return delete_edge(g, e)
    keep, gone = min(u, v), max(u, v)
    m = _merge_map(g.vertex_count, keep, gone)
    rest = [(m[a], m[b]) for k, (a, b) in enumerate(g.edges) if k != e]
    return MultiGraph(g.vertex_count - 1, tuple(rest))


def delete_edges(g: MultiGraph, a: Iterable[int]) -> MultiGraph:
    drop = g.check_subset(a)
    return MultiGraph(g.vertex_count, tuple(ed for k, ed in enumerate(g.edges) if k not in drop))


def restrict(g: MultiGraph, a: Iterable[int]) -> MultiGraph:
    """``G|_A``: keep every vertex and only the edges in ``A``."""
    keep = g.check_subset(a)
    return MultiGraph(g.vertex_count, tuple(ed for k, ed in enumerate(g.edges) if k in keep))


def contract_edges(g: MultiGraph, a: Iterable[int]) -> MultiGraph:
    """``G/A``: contract every edge of ``A``.

    Each component of ``(V, A)`` becomes one vertex, numbered in order of
    its smallest original vertex; edges of ``A`` disappear (including
    loops in ``A``), the rest keep their relative order.
    """
    sel = g.check_subset(a)
    labels = component_labels(g.vertex_count, [g.edges[k] for k in sel])
    roots = sorted(set(labels))
    idx = {r: i for i, r in enumerate(roots)}
    m = [idx[labels[v]] for v in range(g.vertex_count)]
    rest = tuple((m[u], m[v]) for k, (u, v) in enumerate(g.edges) if k not in sel)
    return MultiGraph(len(roots), rest)


def induced_subgraph(g: MultiGraph, vertices: Iterable[int]) -> MultiGraph:
    """Subgraph induced by a vertex set, relabelled to ``0..k-1`` in order."""
    vs = sorted(set(vertices))
    for v in vs:
        g.check_vertex(v)
    idx = {v: i for i, v in enumerate(vs)}
    edges = tuple((idx[a], idx[b]) for a, b in g.edges if a in idx and b in idx)
    return MultiGraph(len(vs), edges)


# ---------------------------------------------------------------------------
# bridges and blocks
# ---------------------------------------------------------------------------

def _lowpoint_dfs(n: int, edges: Sequence[Edge]):
    """Iterative DFS over non-loop edges yielding bridges and biconnected edge groups."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (a, b) in enumerate(edges):
        if a != b:
            adj[a].append((b, eid))
            adj[b].append((a, eid))
    disc = [-1] * n
    low = [0] * n
    time = 0
    bridge_ids: list[int] = []
    groups: list[list[int]] = []
    edge_stack: list[int] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = time
        time += 1
        # frames: (vertex, parent edge id, iterator index)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, pe, i + 1)
                w, eid = adj[v][i]
                if eid == pe:
                    continue
                if disc[w] == -1:
                    edge_stack.append(eid)
                    disc[w] = low[w] = time
                    time += 1
                    stack.append((w, eid, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    break
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    group = []
                    while True:
                        eid = edge_stack.pop()
                        group.append(eid)
                        if eid == pe:
                            break
                    groups.append(sorted(group))
                if low[v] > disc[p]:
                    bridge_ids.append(pe)
    return sorted(bridge_ids), groups


def bridges(g: MultiGraph) -> list[int]:
    return _lowpoint_dfs(g.vertex_count, g.edges)[0]


def classify_edge(g: MultiGraph, e: int) -> str:
    """Return ``"loop"``, ``"bridge"`` or ``"ordinary"``."""
    g.check_edge(e)
    u, v = g.edges[e]
    if u == v:
        return "loop"
    rest = g.edges[:e] + g.edges[e + 1:]
    labels = component_labels(g.vertex_count, rest)
    return "bridge" if labels[u] != labels[v] else "ordinary"


def block_edge_sets(g: MultiGraph) -> list[list[int]]:
    """Edge ids of each block; loops form their own single-edge blocks.

    Blocks are listed in order of their smallest edge id.
    """
    _, groups = _lowpoint_dfs(g.vertex_count, g.edges)
    groups = groups + [[k] for k, (a, b) in enumerate(g.edges) if a == b]
    return sorted(groups, key=lambda grp: grp[0])


def _subgraph_on_edges(g: MultiGraph, ids: Sequence[int]) -> MultiGraph:
    vs = sorted({v for k in ids for v in g.edges[k]})
    idx = {v: i for i, v in enumerate(vs)}
    return MultiGraph(len(vs), tuple((idx[g.edges[k][0]], idx[g.edges[k][1]]) for k in sorted(ids)))


def blocks(g: MultiGraph) -> list[MultiGraph]:
    """Block decomposition; each block is relabelled onto its own vertices."""
    return [_subgraph_on_edges(g, ids) for ids in block_edge_sets(g)]


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def disjoint_union(g: MultiGraph, h: MultiGraph) -> MultiGraph:
    off = g.vertex_count
    return MultiGraph(off + h.vertex_count, g.edges + tuple((a + off, b + off) for a, b in h.edges))


def one_point_join(g: MultiGraph, h: MultiGraph, u: int, v: int) -> MultiGraph:
    """Identify vertex ``u`` of ``g`` with vertex ``v`` of ``h``.

    The joined vertex keeps label ``u``; the other vertices of ``h``
    follow after ``g``'s in their original order.
    """
    g.check_vertex(u)
    h.check_vertex(v)
    m = []
    nxt = g.vertex_count
    for w in range(h.vertex_count):
        if w == v:
            m.append(u)
        else:
            m.append(nxt)
            nxt += 1
    return MultiGraph(nxt, g.edges + tuple((m[a], m[b]) for a, b in h.edges))


def relabel(g: MultiGraph, mapping: Sequence[int]) -> MultiGraph:
    """Apply a vertex permutation ``v -> mapping[v]``; edge order is kept."""
    if sorted(mapping) != list(range(g.vertex_count)):
        raise GraphInputError("mapping must be a permutation of the vertex set")
    return MultiGraph(g.vertex_count, tuple((mapping[a], mapping[b]) for a, b in g.edges))


# ---------------------------------------------------------------------------
# canonical labelling (individualisation-refinement)
# ---------------------------------------------------------------------------

def _edge_counts(n: int, edges: Iterable[Edge]):
    loops = [0] * n
    nbr: list[dict[int, int]] = [dict() for _ in range(n)]
    for a, b in edges:
        if a == b:
            loops[a] += 1
        else:
            nbr[a][b] = nbr[a].get(b, 0) + 1
            nbr[b][a] = nbr[b].get(a, 0) + 1
    return loops, nbr


def _rank_colors(sigs: list) -> list[int]:
    order = sorted(set(sigs))
    idx = {s: i for i, s in enumerate(order)}
    return [idx[s] for s in sigs]


def _refine(colors: list[int], loops, nbr) -> list[int]:
    n = len(colors)
    while True:
        sigs = [
            (colors[v], loops[v], tuple(sorted((colors[w], m) for w, m in nbr[v].items())))
            for v in range(n)
        ]
        new = _rank_colors(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _encode(n: int, edges: Iterable[Edge], perm: Sequence[int]) -> tuple:
    return tuple(sorted((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in edges))


def canonical_form(g: MultiGraph) -> tuple[int, tuple[Edge, ...]]:
    """Canonical ``(n, sorted edge multiset)`` shared by all isomorphic copies.

    Uses colour refinement with individualisation; practical for the small
    graphs this package works with (up to roughly ten vertices).
    """
    n = g.vertex_count
    if n == 0:
        return (0, ())
    loops, nbr = _edge_counts(n, g.edges)
    start = _refine([0] * n, loops, nbr)
    best: tuple | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            code = _encode(n, g.edges, colors)
            if best is None or code < best:
                best = code
            return
        for v in range(n):
            if colors[v] == target:
                ind = _rank_colors([(colors[w], 0 if w == v else 1) for w in range(n)])
                search(_refine(ind, loops, nbr))

    search(start)
    return (n, best)


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def is_isomorphic_bruteforce(g: MultiGraph, h: MultiGraph) -> bool:
    """Permutation search; only for tiny graphs (used to test ``canonical_form``)."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    target = _encode(h.vertex_count, h.edges, range(h.vertex_count))
    return any(_encode(g.vertex_count, g.edges, p) == target for p in permutations(range(g.vertex_count)))


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> MultiGraph:
    """Parse the ``n <count>`` / ``u v`` edge-list format.

    Blank lines and lines starting with ``#`` are ignored. Edge order in
    the text defines edge ids.
    """
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected header 'n <vertex_count>', got {line!r}", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"vertex count is not an integer: {parts[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"edge endpoints must be integers, got {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1} in {line!r}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header line 'n <vertex_count>'")
    return MultiGraph(n, tuple(edges))


def format_edge_list(g: MultiGraph) -> str:
    lines = [f"n {g.vertex_count}"] + [f"{a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> MultiGraph:
    return parse_edge_list(Path(path).read_text())

