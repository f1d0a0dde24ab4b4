"""Greedy set-cover baseline over the block boundary characterization."""

from __future__ import annotations

import time

from .blocks import Block, decompose_blocks
from .exact import SolveResult
from .graph import ColoredGraph


def candidate_sets(graph: ColoredGraph, blocks: list[Block]) -> dict[int, frozenset[int]]:
    """For each ``b3`` vertex ``w``, the ``b1`` vertices of its block that ``w`` covers."""
    sets = {}
    for block in blocks:
        b3 = block.b3
        for w in b3:
            sets[w] = frozenset(
                v for v in block.b1 if v == w or (w in graph.neighbor_sets[v] and w in b3)
            )
    return sets


def greedy_mss(graph: ColoredGraph) -> SolveResult:
    t0 = time.perf_counter()
    blocks = decompose_blocks(graph)
    sets = candidate_sets(graph, blocks)
    owner = {v: b.id for b in blocks for v in b.vertices}
    uncovered = set().union(*(b.b1 for b in blocks)) if blocks else set()
    per_block: dict[int, list[int]] = {b.id: [min(b.vertices)] for b in blocks if not b.b1}
    rounds = 0
    while uncovered:
        rounds += 1
        w = min(sets, key=lambda u: (-len(sets[u] & uncovered), u))
        uncovered -= sets[w]
        per_block.setdefault(owner[w], []).append(w)
    frozen = {k: tuple(sorted(v)) for k, v in sorted(per_block.items())}
    chosen = tuple(sorted(v for part in frozen.values() for v in part))
    return SolveResult(chosen, frozen, "greedy",
                       {"nodes": rounds, "elapsed": time.perf_counter() - t0,
                        "max_candidate": max((len(s) for s in sets.values()), default=0)})
