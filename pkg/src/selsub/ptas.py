"""Approximation scheme by local neighborhood growth inside each block.

For every block the boundary layer ``b1`` is consumed by repeatedly growing a
ball around a seed until the local optimum two rings further out is within a
factor ``delta`` of the current one. The local optimum of the outer ball is
kept, its ``b1`` vertices are retired, and the next seed is taken from what
is left.

Balls are grown in ``G[b3]`` of the whole block by default (``host="block"``).
With ``host="active"`` they are grown in the shrinking set of not yet carved
``b3`` vertices instead; that variant can place two inner sets within two
hops of each other through an already carved vertex, which voids the lower
bound behind the approximation ratio.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .blocks import Block, decompose_blocks
from .exact import DEFAULT_BUDGET, SolveResult, _Counter, local_min_selective
from .graph import ColoredGraph, bfs_distances

log = logging.getLogger(__name__)

D_BOUND_CUTOFF = 10**7


def _exact_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class PtasConfig:
    epsilon: Fraction | float
    mode: str = "udg"
    radius_cap: int | None = None
    budget: int = DEFAULT_BUDGET
    host: str = "block"

    def __post_init__(self):
        if _exact_fraction(self.epsilon) <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.mode not in ("udg", "general"):
            raise ValueError(f"mode must be 'udg' or 'general', got {self.mode!r}")
        if self.host not in ("block", "active"):
            raise ValueError(f"host must be 'block' or 'active', got {self.host!r}")

    @property
    def delta(self) -> Fraction:
        return 1 + _exact_fraction(self.epsilon)

    def effective_cap(self) -> int | None:
        if self.mode == "general":
            return None
        if self.radius_cap is not None:
            return self.radius_cap
        return d_bound(self.delta)


@dataclass
class ExpansionRecord:
    block_id: int
    seed: int
    r_bar: int
    d_set: tuple[int, ...]
    e_set: tuple[int, ...]
    f_set: tuple[int, ...]
    local_solution: tuple[int, ...]
    d_solution: tuple[int, ...]
    sizes: list[int]
    capped: bool = False

    def to_dict(self) -> dict:
        return {
            "block_id": self.block_id, "seed": self.seed, "r_bar": self.r_bar,
            "d_set": list(self.d_set), "e_set": list(self.e_set), "f_set": list(self.f_set),
            "local_solution": list(self.local_solution), "d_solution": list(self.d_solution),
            "sizes": self.sizes, "capped": self.capped,
        }


@dataclass
class PtasTrace:
    records: list[ExpansionRecord] = field(default_factory=list)
    final: SolveResult | None = None

    def to_dict(self) -> dict:
        return {
            "records": [r.to_dict() for r in self.records],
            "final": self.final.to_dict() if self.final else None,
        }


def _has_foreign_neighbor(graph: ColoredGraph, v: int) -> bool:
    return any(graph.colors[u] != graph.colors[v] for u in graph.adjacency[v])


def r_neighborhood(
    graph: ColoredGraph, b3_active, v: int, r: int
) -> tuple[frozenset[int], frozenset[int]]:
    """The ``r``-ball around ``v`` in ``G[b3_active]``, split into its ``b1`` and ``b2`` parts."""
    active = frozenset(b3_active)
    if v not in active:
        raise ValueError(f"vertex {v} is not in the active boundary set")
    ball = [u for u, d in bfs_distances(graph, [v], active).items() if d <= r]
    xs = frozenset(u for u in ball if _has_foreign_neighbor(graph, u))
    return xs, frozenset(ball) - xs


def d_bound(delta) -> int:
    """Smallest ``d >= 1`` with ``(2d+1)^2 < delta^(d/2)``.

    Compared as ``(2d+1)^4 < delta^d``; floating logs decide clear cases and
    exact rational arithmetic decides the near ties.
    """
    delta = _exact_fraction(delta)
    if delta <= 1:
        raise ValueError(f"delta must exceed 1, got {delta}")
    log_delta = math.log(delta.numerator) - math.log(delta.denominator)
    for d in range(1, D_BOUND_CUTOFF + 1):
        gap = d * log_delta - 4 * math.log(2 * d + 1)
        if gap > 1e-9:
            return d
        if gap > -1e-9 and (2 * d + 1) ** 4 < delta**d:
            return d
    raise ValueError(f"no radius bound below {D_BOUND_CUTOFF} for delta={delta}")


def expand_until_stable(
    graph: ColoredGraph,
    block: Block,
    b1_active: frozenset[int],
    host_b3: frozenset[int],
    seed: int,
    delta,
    radius_cap: int | None = None,
    counter: _Counter | None = None,
) -> ExpansionRecord:
    """Grow the ball around ``seed`` inside ``G[host_b3]`` until the stopping rule fires.

    ``r_bar`` is the first radius with ``|S(X^(r+2))| <= delta * |S(X^r)|``,
    where ``X^r`` is the set of active ``b1`` vertices in the ``r``-ball and
    ``S`` the local minimum selective subset over ``host_b3``.
    """
    if seed not in b1_active:
        raise ValueError(f"seed {seed} is not an active b1 vertex")
    delta = _exact_fraction(delta)
    counter = counter or _Counter(DEFAULT_BUDGET)
    dist = bfs_distances(graph, [seed], host_b3)
    cache: dict[int, tuple[int, ...]] = {}

    def x_set(r: int) -> tuple[int, ...]:
        return tuple(sorted(u for u, d in dist.items() if d <= r and u in b1_active))

    def local(r: int) -> tuple[int, ...]:
        if r not in cache:
            cache[r] = local_min_selective(graph, x_set(r), host_b3, _counter=counter)
        return cache[r]

    capped = False
    r = 0
    while True:
        if radius_cap is not None and not capped and r > radius_cap:
            log.warning(
                "block %d seed %d passed radius cap %d; graph is not a unit disk graph, "
                "continuing without the cap", block.id, seed, radius_cap)
            capped = True
        if len(local(r + 2)) <= delta * len(local(r)):
            break
        r += 1
    sizes = [len(local(q)) for q in range(r + 3)]
    return ExpansionRecord(
        block_id=block.id,
        seed=seed,
        r_bar=r,
        d_set=x_set(r),
        e_set=x_set(r + 2),
        f_set=tuple(sorted(u for u, d in dist.items() if d <= r + 2)),
        local_solution=local(r + 2),
        d_solution=local(r),
        sizes=sizes,
        capped=capped,
    )


def ptas_block(
    graph: ColoredGraph, block: Block, delta, radius_cap: int | None = None,
    counter: _Counter | None = None, host: str = "block",
) -> tuple[frozenset[int], list[ExpansionRecord]]:
    if not block.b1:
        raise ValueError(f"block {block.id} has no boundary vertices")
    counter = counter or _Counter(DEFAULT_BUDGET)
    b1_active = block.b1
    b3_active = block.b3
    chosen: set[int] = set()
    records = []
    while b1_active:
        seed = min(b1_active)
        ball_host = block.b3 if host == "block" else b3_active
        rec = expand_until_stable(graph, block, b1_active, ball_host, seed, delta, radius_cap, counter)
        records.append(rec)
        chosen.update(rec.local_solution)
        b3_active = b3_active - frozenset(rec.f_set)
        b1_active = b1_active - frozenset(rec.e_set)
    return frozenset(chosen), records


def ptas_mss(graph: ColoredGraph, config: PtasConfig) -> tuple[SolveResult, PtasTrace]:
    t0 = time.perf_counter()
    if _exact_fraction(config.epsilon) >= Fraction(1, 10):
        log.warning("epsilon=%s: the unit disk running-time bound assumes epsilon < 1/10", config.epsilon)
    cap = config.effective_cap()
    counter = _Counter(config.budget)
    trace = PtasTrace()
    per_block: dict[int, tuple[int, ...]] = {}
    for block in decompose_blocks(graph):
        if not block.b1:
            per_block[block.id] = (min(block.vertices),)
            continue
        chosen, records = ptas_block(graph, block, config.delta, cap, counter, config.host)
        per_block[block.id] = tuple(sorted(chosen))
        trace.records.extend(records)
    result = SolveResult(
        tuple(sorted(v for part in per_block.values() for v in part)), per_block, "ptas",
        {
            "nodes": counter.nodes,
            "elapsed": time.perf_counter() - t0,
            "epsilon": str(config.epsilon),
            "r_bar_max": max((r.r_bar for r in trace.records), default=0),
        },
    )
    trace.final = result
    return result, trace
