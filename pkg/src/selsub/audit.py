"""Invariant checks shared by the corpus runner.

Each function returns a list of human-readable failures; empty means pass.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .blocks import Block
from .exact import SolveResult
from .graph import ColoredGraph, bfs_distances, closed_neighborhood_of_set
from .ptas import PtasTrace, d_bound
from .validator import covers_boundary, is_selective_subset


def harmonic(k: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, k + 1)), Fraction(0))


def check_solution(graph: ColoredGraph, blocks: list[Block], result: SolveResult) -> list[str]:
    out = []
    verdict = is_selective_subset(graph, result.chosen)
    if not verdict.valid:
        out.append(f"{result.method}: invalid ({verdict.witness.explain()})")
    allowed = set()
    for b in blocks:
        allowed |= b.b3 if b.b1 else {min(b.vertices)}
    stray = sorted(set(result.chosen) - allowed)
    if stray:
        out.append(f"{result.method}: vertices outside the block boundaries {stray}")
    if not covers_boundary(graph, blocks, result.chosen):
        out.append(f"{result.method}: some b1 vertex is uncovered")
    return out


def check_trace(
    graph: ColoredGraph, blocks: list[Block], trace: PtasTrace, delta: Fraction,
    exact_size: int | None, with_points: bool = False,
) -> list[str]:
    out = []
    by_block: dict[int, list] = {}
    for rec in trace.records:
        by_block.setdefault(rec.block_id, []).append(rec)
        if len(rec.local_solution) > delta * len(rec.d_solution):
            out.append(f"record {rec.block_id}/{rec.seed}: |S(E)| > delta |S(D)|")
        if with_points:
            if rec.r_bar > d_bound(delta):
                out.append(f"record {rec.block_id}/{rec.seed}: r_bar {rec.r_bar} > d_bound")
            if len(rec.local_solution) > (2 * (rec.r_bar + 2) + 1) ** 2:
                out.append(f"record {rec.block_id}/{rec.seed}: local solution above packing bound")
    for block in blocks:
        recs = by_block.get(block.id, [])
        if not block.b1:
            continue
        e_union = [v for r in recs for v in r.e_set]
        if len(e_union) != len(set(e_union)) or set(e_union) != block.b1:
            out.append(f"block {block.id}: e_sets do not partition b1")
        b3 = block.b3
        for r in recs:
            reach = bfs_distances(graph, r.d_set[:1], b3)
            if any(v not in reach for v in r.d_set):
                out.append(f"block {block.id}: d_set of seed {r.seed} not connected in G[b3]")
        for a, b in combinations(recs, 2):
            dist = bfs_distances(graph, a.d_set, b3)
            if any(dist.get(v, 3) <= 2 for v in b.d_set):
                out.append(f"block {block.id}: d_sets of seeds {a.seed},{b.seed} within distance 2")
            na = closed_neighborhood_of_set(graph, a.d_set, b3)
            nb = closed_neighborhood_of_set(graph, b.d_set, b3)
            if na & nb:
                out.append(f"block {block.id}: neighborhoods of seeds {a.seed},{b.seed} overlap")
    if exact_size is not None:
        lower = sum(len(r.d_solution) for r in trace.records)
        mono = sum(1 for b in blocks if not b.b1)
        if lower + mono > exact_size:
            out.append(f"lower bound {lower + mono} exceeds optimum {exact_size}")
    return out
