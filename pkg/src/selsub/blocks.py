"""Monochromatic blocks and their boundary layers."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ColoredGraph, bfs_distances


@dataclass(frozen=True)
class Block:
    """A maximal connected monochromatic vertex set.

    ``b1`` holds the vertices with a neighbor of another color, ``b2`` the
    remaining vertices adjacent to ``b1``, and ``b3`` their union.
    """

    id: int
    color: int
    vertices: frozenset[int]
    b1: frozenset[int]
    b2: frozenset[int]

    @property
    def b3(self) -> frozenset[int]:
        return self.b1 | self.b2


def boundary_sets(
    graph: ColoredGraph, vertices
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    cols = graph.colors
    b1 = frozenset(v for v in vertices if any(cols[u] != cols[v] for u in graph.adjacency[v]))
    b2 = frozenset(
        v for v in vertices if v not in b1 and any(u in b1 for u in graph.adjacency[v])
    )
    return b1, b2, b1 | b2


def decompose_blocks(graph: ColoredGraph) -> list[Block]:
    """Blocks ordered (and numbered) by their smallest vertex."""
    owner = [-1] * graph.n
    blocks = []
    classes: dict[int, frozenset[int]] = {}
    for s in range(graph.n):
        if owner[s] >= 0:
            continue
        color = graph.colors[s]
        if color not in classes:
            classes[color] = graph.color_class(color)
        members = frozenset(bfs_distances(graph, [s], classes[color]))
        for v in members:
            owner[v] = len(blocks)
        b1, b2, _ = boundary_sets(graph, members)
        blocks.append(Block(len(blocks), color, members, b1, b2))
    return blocks


def block_index(blocks: list[Block]) -> dict[int, Block]:
    """Map each vertex to the block containing it."""
    return {v: b for b in blocks for v in b.vertices}
