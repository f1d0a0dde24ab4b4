"""Vertex-colored simple graphs and hop-distance queries."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from .errors import ConsistencyError

INF = math.inf


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable simple undirected graph with one color per vertex.

    Vertices are ``0..n-1`` and colors are ``0..c-1`` with every color used.
    Build instances with :meth:`from_edges`; the raw constructor trusts its
    arguments.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    colors: tuple[int, ...]

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], colors: Iterable[int]
    ) -> ColoredGraph:
        colors = tuple(int(x) for x in colors)
        if n < 0:
            raise ConsistencyError(f"negative vertex count {n}")
        if len(colors) != n:
            raise ConsistencyError(f"expected {n} colors, got {len(colors)}")
        if n and (min(colors) < 0 or set(colors) != set(range(max(colors) + 1))):
            raise ConsistencyError(f"colors are not dense 0..c-1: {sorted(set(colors))}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ConsistencyError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ConsistencyError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), colors)

    @property
    def c(self) -> int:
        return max(self.colors) + 1 if self.n else 0

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def color_class(self, color: int) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.colors[v] == color)

    def recolored(self, colors: Iterable[int]) -> ColoredGraph:
        return ColoredGraph.from_edges(self.n, self.edges(), colors)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")


def bfs_distances(
    graph: ColoredGraph, sources: Iterable[int], within: frozenset[int] | set[int] | None = None
) -> dict[int, int]:
    """Multi-source BFS; returns hop distance for every reached vertex.

    With ``within`` the search is confined to the induced subgraph on that set.
    """
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sources:
        if s not in dist and (within is None or s in within):
            dist[s] = 0
            queue.append(s)
    adj = graph.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if w not in dist and (within is None or w in within):
                dist[w] = du
                queue.append(w)
    return dist


def hop_distance(graph: ColoredGraph, u: int, v: int) -> float:
    """Shortest-path length between ``u`` and ``v``; ``INF`` across components."""
    graph._check(u)
    graph._check(v)
    return bfs_distances(graph, [u]).get(v, INF)


def set_distance(graph: ColoredGraph, v: int, targets: Iterable[int]) -> float:
    targets = set(targets)
    if not targets:
        raise ValueError("distance to an empty vertex set is undefined")
    graph._check(v)
    for u in targets:
        graph._check(u)
    # BFS from the whole target set gives the minimum in one pass.
    return bfs_distances(graph, targets).get(v, INF)


def nearest_neighbors(graph: ColoredGraph, v: int, targets: Iterable[int]) -> frozenset[int]:
    """All members of ``targets`` at minimum hop distance from ``v``.

    Empty when no target is reachable.
    """
    targets = set(targets)
    if not targets:
        raise ValueError("nearest neighbors in an empty vertex set are undefined")
    graph._check(v)
    if v in targets:
        return frozenset([v])
    dist = bfs_distances(graph, [v])
    reached = [dist[u] for u in targets if u in dist]
    if not reached:
        return frozenset()
    best = min(reached)
    return frozenset(u for u in targets if dist.get(u) == best)


def closed_neighborhood(graph: ColoredGraph, v: int, within: Iterable[int]) -> frozenset[int]:
    """``{v}`` together with the neighbors of ``v`` that lie in ``within``."""
    within = within if isinstance(within, (set, frozenset)) else set(within)
    return frozenset(w for w in graph.adjacency[v] if w in within) | {v}


def closed_neighborhood_of_set(
    graph: ColoredGraph, vertices: Iterable[int], within: Iterable[int]
) -> frozenset[int]:
    within = within if isinstance(within, (set, frozenset)) else set(within)
    out: set[int] = set()
    for v in vertices:
        out |= closed_neighborhood(graph, v, within)
    return frozenset(out)


def connected_components(
    graph: ColoredGraph, within: Iterable[int] | None = None
) -> list[tuple[int, ...]]:
    """Components as sorted tuples, ordered by smallest member."""
    pool = range(graph.n) if within is None else sorted(set(within))
    allowed = None if within is None else frozenset(pool)
    seen: set[int] = set()
    parts = []
    for s in pool:
        if s in seen:
            continue
        comp = bfs_distances(graph, [s], allowed)
        seen.update(comp)
        parts.append(tuple(sorted(comp)))
    return parts
