"""Seeded random instance generators."""

from __future__ import annotations

import random

from .geometry import SCALE, ChordSet, PointSet
from .graph import ColoredGraph
from .instance import Instance

TOPOLOGIES = ("gnp", "tree", "path", "cycle", "udg")


def dense_colors(raw: list[int]) -> list[int]:
    """Relabel colors to ``0..c-1`` in order of first appearance."""
    relabel: dict[int, int] = {}
    return [relabel.setdefault(x, len(relabel)) for x in raw]


def _random_colors(rng: random.Random, n: int, colors: int) -> list[int]:
    return dense_colors([rng.randrange(colors) for _ in range(n)])


def random_points(rng: random.Random, n: int, side: float) -> PointSet:
    span = int(round(side * SCALE))
    return PointSet(tuple((rng.randint(0, span), rng.randint(0, span)) for _ in range(n)))


def random_udg(n: int, side: float, seed: int, colors: int = 2) -> Instance:
    """Uniform points in a ``side`` x ``side`` square, colored uniformly at random.

    The color count actually used may be smaller than ``colors``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(f"udg:{n}:{side}:{colors}:{seed}")
    points = random_points(rng, n, side)
    cols = _random_colors(rng, n, colors)
    prov = f"random_udg(n={n}, side={side}, colors={colors}, seed={seed})"
    return Instance.from_geometry(points, cols, name=f"udg-n{n}-s{seed}", provenance=prov)


def random_chords(n: int, seed: int, colors: int = 1) -> Instance:
    """Random perfect pairing of positions ``0..2n-1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(f"chords:{n}:{colors}:{seed}")
    positions = list(range(2 * n))
    rng.shuffle(positions)
    chords = ChordSet(tuple((positions[2 * i], positions[2 * i + 1]) for i in range(n)))
    cols = _random_colors(rng, n, colors)
    prov = f"random_chords(n={n}, colors={colors}, seed={seed})"
    return Instance.from_geometry(chords, cols, name=f"chords-n{n}-s{seed}", provenance=prov)


def random_colored_graph(
    n: int, seed: int, colors: int = 3, topology: str = "gnp", p: float = 0.3
) -> Instance:
    """Small colored graph of the requested shape, without geometry."""
    if topology not in TOPOLOGIES:
        raise ValueError(f"unknown topology {topology!r}")
    if topology == "udg":
        inst = random_udg(n, side=max(2.0, n ** 0.5 * 1.6), seed=seed, colors=colors)
        return Instance(inst.graph, None, inst.name.replace("udg", "graph-udg"), inst.provenance)
    rng = random.Random(f"graph:{topology}:{n}:{p}:{colors}:{seed}")
    edges: list[tuple[int, int]] = []
    if topology == "gnp":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    elif topology == "tree":
        edges = [(rng.randrange(v), v) for v in range(1, n)]
    elif topology == "path":
        edges = [(v - 1, v) for v in range(1, n)]
    elif topology == "cycle":
        edges = [(v - 1, v) for v in range(1, n)] + ([(0, n - 1)] if n > 2 else [])
    graph = ColoredGraph.from_edges(n, edges, _random_colors(rng, n, colors))
    prov = f"random_colored_graph(n={n}, topology={topology}, p={p}, colors={colors}, seed={seed})"
    return Instance(graph, None, f"graph-{topology}-n{n}-s{seed}", prov)
