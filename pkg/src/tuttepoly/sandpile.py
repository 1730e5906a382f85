"""Chip-firing (abelian sandpile) dynamics with a sink vertex.

Toppling uses the reduced Laplacian: a non-sink vertex ``i`` fires when it
holds at least ``deg(i)`` chips (loops count twice), sends one chip along
each incident edge, and chips reaching the sink disappear. A loop sends
its two chips back to ``i``.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Iterable, Sequence

from .errors import GraphInputError, NotConnectedError
from .multigraph import MultiGraph, count_components
from .oracles import Budgets, DEFAULT_BUDGETS, _check
from .polynomial import UniPoly

__all__ = [
    "SandpileConfig",
    "topple",
    "stabilize",
    "is_stable",
    "is_recurrent",
    "is_recurrent_definitional",
    "level",
    "stable_configurations",
    "recurrent_configurations",
    "critical_config_polynomial",
    "sandpile_report",
]


@dataclass(frozen=True)
class _Board:
    """Per-(graph, sink) data: thresholds and chips sent on one firing."""

    graph: MultiGraph
    sink: int
    sites: tuple[int, ...]  # non-sink vertices in order
    threshold: tuple[int, ...]
    gain: tuple[tuple[tuple[int, int], ...], ...]  # per site: (site index, chips received)

    @classmethod
    def build(cls, g: MultiGraph, sink: int) -> "_Board":
        g.check_vertex(sink)
        sites = tuple(v for v in range(g.vertex_count) if v != sink)
        idx = {v: i for i, v in enumerate(sites)}
        deg = g.degrees()
        gains: list[dict[int, int]] = [dict() for _ in sites]
        for a, b in g.edges:
            if a == b:
                if a != sink:
                    gains[idx[a]][idx[a]] = gains[idx[a]].get(idx[a], 0) + 2
                continue
            if a != sink and b != sink:
                gains[idx[a]][idx[b]] = gains[idx[a]].get(idx[b], 0) + 1
                gains[idx[b]][idx[a]] = gains[idx[b]].get(idx[a], 0) + 1
        return cls(
            g,
            sink,
            sites,
            tuple(deg[v] for v in sites),
            tuple(tuple(sorted(d.items())) for d in gains),
        )


@dataclass(frozen=True)
class SandpileConfig:
    """Chip counts on the non-sink vertices of ``graph``, in vertex order."""

    graph: MultiGraph
    sink: int
    heights: tuple[int, ...]
    _board: _Board = field(default=None, repr=False, compare=False)  # type: ignore[assignment]

    def __post_init__(self):
        board = self._board
        if board is None or board.graph is not self.graph or board.sink != self.sink:
            board = _Board.build(self.graph, self.sink)
            object.__setattr__(self, "_board", board)
        heights = tuple(int(h) for h in self.heights)
        if len(heights) != len(board.sites):
            raise GraphInputError(f"expected {len(board.sites)} heights, got {len(heights)}")
        object.__setattr__(self, "heights", heights)

    @classmethod
    def from_vertex_heights(cls, g: MultiGraph, sink: int, heights: dict[int, int]) -> "SandpileConfig":
        board = _Board.build(g, sink)
        return cls(g, sink, tuple(heights.get(v, 0) for v in board.sites), board)

    def _with(self, heights: Sequence[int]) -> "SandpileConfig":
        return SandpileConfig(self.graph, self.sink, tuple(heights), self._board)

    @property
    def sites(self) -> tuple[int, ...]:
        return self._board.sites

    @property
    def thresholds(self) -> tuple[int, ...]:
        return self._board.threshold

    def weight(self) -> int:
        return sum(self.heights)

    def add(self, vertex: int, chips: int = 1) -> "SandpileConfig":
        i = self._site_index(vertex)
        h = list(self.heights)
        h[i] += chips
        return self._with(h)

    def _site_index(self, vertex: int) -> int:
        self.graph.check_vertex(vertex)
        if vertex == self.sink:
            raise GraphInputError("the sink carries no height")
        return self.sites.index(vertex)

    def to_json_obj(self) -> dict:
        return {"sink": self.sink, "heights": {str(v): h for v, h in zip(self.sites, self.heights)}}


def is_stable(c: SandpileConfig) -> bool:
    return all(h < t for h, t in zip(c.heights, c.thresholds))


def _fire(h: list[int], board: _Board, i: int) -> None:
    h[i] -= board.threshold[i]
    for j, k in board.gain[i]:
        h[j] += k


def topple(c: SandpileConfig, vertex: int) -> SandpileConfig:
    """Fire ``vertex`` once; it must be a non-sink vertex at or above threshold."""
    i = c._site_index(vertex)
    if c.heights[i] < c.thresholds[i]:
        raise GraphInputError(f"vertex {vertex} holds {c.heights[i]} < {c.thresholds[i]} chips")
    h = list(c.heights)
    _fire(h, c._board, i)
    return c._with(h)


def _stabilize_in_place(h: list[int], board: _Board, rng: random.Random | None = None) -> list[int]:
    """Topple until stable; returns how many times each site fired."""
    n = len(h)
    fired = [0] * n
    thr = board.threshold
    if rng is None:
        # lowest-index unstable site first
        while True:
            i = next((k for k in range(n) if h[k] >= thr[k]), -1)
            if i < 0:
                return fired
            _fire(h, board, i)
            fired[i] += 1
    while True:
        unstable = [k for k in range(n) if h[k] >= thr[k]]
        if not unstable:
            return fired
        i = rng.choice(unstable)
        _fire(h, board, i)
        fired[i] += 1


def _check_dissipative(g: MultiGraph) -> None:
    if count_components(g.vertex_count, g.edges) > 1:
        raise NotConnectedError("stabilization needs a connected graph (every site must reach the sink)")


def stabilize(c: SandpileConfig, rng: random.Random | None = None) -> SandpileConfig:
    """Stable configuration reached from ``c``.

    With ``rng`` the next unstable site is picked at random; the abelian
    property says the result is the same.
    """
    _check_dissipative(c.graph)
    h = list(c.heights)
    _stabilize_in_place(h, c._board, rng)
    return c._with(h)


def _sink_row(board: _Board) -> list[int]:
    """Chips each site receives when the sink fires."""
    add = [0] * len(board.sites)
    idx = {v: i for i, v in enumerate(board.sites)}
    for a, b in board.graph.edges:
        if a == b:
            continue
        if a == board.sink:
            add[idx[b]] += 1
        elif b == board.sink:
            add[idx[a]] += 1
    return add


def is_recurrent(c: SandpileConfig) -> bool:
    """Burning test: fire the sink once, stabilize, and compare with ``c``."""
    if not is_stable(c):
        raise GraphInputError("recurrence is defined for stable configurations")
    _check_dissipative(c.graph)
    h = [x + y for x, y in zip(c.heights, _sink_row(c._board))]
    _stabilize_in_place(h, c._board)
    return tuple(h) == c.heights


def is_recurrent_definitional(c: SandpileConfig, budgets: Budgets | None = None) -> bool:
    """Is ``c`` reachable from the maximal stable configuration by adding chips and stabilizing?

    The maximal configuration can be reached from any configuration, so this
    says ``c`` recurs whatever the start. Returning to itself is not enough:
    chips dropped next to the sink can bring a transient configuration back.
    Breadth-first search over stable configurations; slow, for checking
    :func:`is_recurrent` on small graphs.
    """
    if not is_stable(c):
        raise GraphInputError("recurrence is defined for stable configurations")
    _check_dissipative(c.graph)
    board = c._board
    _check("stable configurations", prod(board.threshold), (budgets or DEFAULT_BUDGETS).max_configs)
    start = tuple(t - 1 for t in board.threshold)
    seen = {start}
    queue = deque([start])
    while queue:
        h = queue.popleft()
        if h == c.heights:
            return True
        for i in range(len(h)):
            nxt = list(h)
            nxt[i] += 1
            _stabilize_in_place(nxt, board)
            key = tuple(nxt)
            if key not in seen:
                seen.add(key)
                queue.append(key)
    return False


def level(c: SandpileConfig) -> int:
    """``weight(c) - |E| + deg(sink)``."""
    return c.weight() - c.graph.edge_count + c.graph.degree(c.sink)


def stable_configurations(g: MultiGraph, sink: int, budgets: Budgets | None = None) -> Iterable[SandpileConfig]:
    board = _Board.build(g, sink)
    _check("stable configurations", prod(board.threshold), (budgets or DEFAULT_BUDGETS).max_configs)
    for h in product(*(range(t) for t in board.threshold)):
        yield SandpileConfig(g, sink, h, board)


def recurrent_configurations(g: MultiGraph, sink: int, budgets: Budgets | None = None) -> list[SandpileConfig]:
    _check_dissipative(g)
    return [c for c in stable_configurations(g, sink, budgets) if is_recurrent(c)]


def critical_config_polynomial(g: MultiGraph, sink: int, budgets: Budgets | None = None) -> UniPoly:
    """``sum_i c_i y^i`` with ``c_i`` the number of recurrent configurations at level ``i``."""
    counts: dict[int, int] = {}
    for c in recurrent_configurations(g, sink, budgets):
        lv = level(c)
        counts[lv] = counts.get(lv, 0) + 1
    return UniPoly.from_dict(counts)


def sandpile_report(g: MultiGraph, sink: int, budgets: Budgets | None = None) -> dict:
    """JSON-ready summary: sink, level histogram ``c``, count and the configurations."""
    rec = recurrent_configurations(g, sink, budgets)
    hist: dict[int, int] = {}
    for c in rec:
        hist[level(c)] = hist.get(level(c), 0) + 1
    top = max(hist, default=-1)
    return {
        "sink": sink,
        "c": [hist.get(i, 0) for i in range(top + 1)],
        "recurrent_count": len(rec),
        "recurrent": [
            {"heights": list(c.heights), "level": level(c)} for c in rec
        ],
        "sites": list(rec[0].sites) if rec else [v for v in range(g.vertex_count) if v != sink],
    }


def sandpile_json(g: MultiGraph, sink: int, budgets: Budgets | None = None) -> str:
    return json.dumps(sandpile_report(g, sink, budgets), sort_keys=False)
