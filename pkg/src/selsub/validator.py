"""Checking candidate selective subsets."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .blocks import Block
from .graph import INF, ColoredGraph, bfs_distances


@dataclass(frozen=True)
class Witness:
    vertex: int
    same_color_distance: float
    other_color_distance: float
    colors_at_nearest: tuple[int, ...]

    def explain(self) -> str:
        return (
            f"vertex {self.vertex}: nearest same-color member of S at distance "
            f"{self.same_color_distance}, other color at distance {self.other_color_distance}; "
            f"colors at nearest distance {list(self.colors_at_nearest)}"
        )


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.valid


def _as_set(graph: ColoredGraph, chosen: Iterable[int]) -> frozenset[int]:
    chosen = frozenset(chosen)
    for v in chosen:
        if not (isinstance(v, int) and 0 <= v < graph.n):
            raise IndexError(f"vertex {v!r} out of range for n={graph.n}")
    return chosen


def is_selective_subset(graph: ColoredGraph, chosen: Iterable[int]) -> Verdict:
    """Decide whether every vertex has a same-colored nearest neighbor.

    A vertex ``v`` of color ``l`` is satisfied when the nearest members of
    ``chosen | (V - V_l)`` include one of color ``l``, i.e. its distance to
    ``chosen`` restricted to color ``l`` is finite and no larger than its
    distance to any other color. An unreachable same-color target never
    satisfies, so a monochromatic component needs a chosen vertex of its own.
    """
    chosen = _as_set(graph, chosen)
    failing: Witness | None = None
    for color in range(graph.c):
        same = [v for v in chosen if graph.colors[v] == color]
        other = [v for v in range(graph.n) if graph.colors[v] != color]
        d_same = bfs_distances(graph, same)
        d_other = bfs_distances(graph, other)
        for v in range(graph.n):
            if graph.colors[v] != color:
                continue
            ds = d_same.get(v, INF)
            do = d_other.get(v, INF)
            if ds <= do and ds != INF:
                continue
            if failing is None or v < failing.vertex:
                failing = _witness(graph, chosen, v, ds, do)
            break
    if failing is None:
        return Verdict(True)
    return Verdict(False, failing)


def _witness(graph: ColoredGraph, chosen, v: int, ds: float, do: float) -> Witness:
    best = min(ds, do)
    colors: set[int] = set()
    if best != INF:
        dist = bfs_distances(graph, [v])
        color = graph.colors[v]
        for u, d in dist.items():
            if d == best and (u in chosen or graph.colors[u] != color):
                colors.add(graph.colors[u])
    return Witness(v, ds, do, tuple(sorted(colors)))


def covers_boundary(graph: ColoredGraph, blocks: list[Block], chosen: Iterable[int]) -> bool:
    """True iff every ``b1`` vertex has itself or a ``b3`` neighbor in ``chosen``."""
    chosen = frozenset(chosen)
    for block in blocks:
        b3 = block.b3
        for v in block.b1:
            if v in chosen:
                continue
            if not any(u in chosen and u in b3 for u in graph.adjacency[v]):
                return False
    return True
