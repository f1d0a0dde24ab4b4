"""Exact minimum selective subsets and minimum dominating sets.

Every exact routine here reduces to the same unit-cost covering problem:
pick the fewest candidates so that each universe element is covered. The
engine below solves it with branch and bound over bitmasks and returns the
lexicographically smallest optimum.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .blocks import Block, decompose_blocks
from .errors import BudgetExceeded, GuardExceeded
from .graph import ColoredGraph, closed_neighborhood, closed_neighborhood_of_set, connected_components
from .validator import is_selective_subset

DEFAULT_BUDGET = 10**8
ORACLE_GUARD = 20


@dataclass
class SolveResult:
    chosen: tuple[int, ...]
    per_block: dict[int, tuple[int, ...]]
    method: str
    stats: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.chosen)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "size": self.size,
            "chosen": list(self.chosen),
            "per_block": {str(k): list(v) for k, v in sorted(self.per_block.items())},
            "stats": self.stats,
        }


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)


class CoverProblem:
    """Unit-cost set cover with candidates and elements as bit positions."""

    def __init__(self, universe: Iterable[int], covers: Mapping[int, Iterable[int]]):
        self.universe = sorted(set(universe))
        self.candidates = sorted(covers)
        pos = {e: i for i, e in enumerate(self.universe)}
        self.cover_mask = []
        for w in self.candidates:
            m = 0
            for e in covers[w]:
                if e in pos:
                    m |= 1 << pos[e]
            self.cover_mask.append(m)
        # coverers[i]: bitmask over candidate indices that cover element i
        self.coverers = [0] * len(self.universe)
        for ci, m in enumerate(self.cover_mask):
            for i in _bits(m):
                self.coverers[i] |= 1 << ci
        self.full = (1 << len(self.universe)) - 1
        self._dead: dict[tuple[int, int], int] = {}

    def lower_bound(self, uncovered: int, allowed: int) -> int:
        """Elements with pairwise disjoint coverer sets each need their own pick.

        Returns a value larger than any feasible size when some element has
        no allowed coverer.
        """
        order = sorted(_bits(uncovered), key=lambda i: (self.coverers[i] & allowed).bit_count())
        used = 0
        count = 0
        for i in order:
            cov = self.coverers[i] & allowed
            if not cov:
                return len(self.candidates) + 1
            if not cov & used:
                used |= cov
                count += 1
        return count

    def greedy(self) -> list[int]:
        uncovered = self.full
        picked: list[int] = []
        while uncovered:
            best = max(
                range(len(self.candidates)),
                key=lambda ci: ((self.cover_mask[ci] & uncovered).bit_count(), -ci),
            )
            if not self.cover_mask[best] & uncovered:
                raise ValueError("universe cannot be covered by the candidates")
            picked.append(best)
            uncovered &= ~self.cover_mask[best]
        return picked

    def feasible(self, uncovered: int, k: int, allowed: int, counter: _Counter) -> bool:
        """Can ``uncovered`` be covered by at most ``k`` allowed candidates?"""
        counter.tick()
        if not uncovered:
            return True
        if k <= 0:
            return False
        key = (uncovered, allowed)
        if self._dead.get(key, -1) >= k:
            return False
        if self.lower_bound(uncovered, allowed) > k:
            self._dead[key] = max(self._dead.get(key, -1), k)
            return False
        pivot = min(_bits(uncovered), key=lambda i: (self.coverers[i] & allowed).bit_count())
        options = self.coverers[pivot] & allowed
        for ci in _bits(options):
            if self.feasible(uncovered & ~self.cover_mask[ci], k - 1, allowed, counter):
                return True
            # every cover using ci has been ruled out
            allowed &= ~(1 << ci)
        self._dead[key] = max(self._dead.get(key, -1), k)
        return False

    def solve(self, counter: _Counter) -> tuple[int, ...]:
        """Lexicographically smallest minimum cover, as candidate ids."""
        if not self.universe:
            return ()
        every = (1 << len(self.candidates)) - 1
        upper = len(self.greedy())
        k = self.lower_bound(self.full, every)
        while k < upper and not self.feasible(self.full, k, every, counter):
            k += 1
        picked: list[int] = []
        uncovered = self.full
        start = 0
        for slot in range(k):
            remaining = k - slot - 1
            for ci in range(start, len(self.candidates)):
                later = every & ~((1 << (ci + 1)) - 1)
                if self.feasible(uncovered & ~self.cover_mask[ci], remaining, later, counter):
                    picked.append(ci)
                    uncovered &= ~self.cover_mask[ci]
                    start = ci + 1
                    break
            else:  # pragma: no cover - feasibility of size k was established above
                raise AssertionError("lexicographic reconstruction failed")
        return tuple(self.candidates[ci] for ci in picked)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _local_cover_problem(graph: ColoredGraph, targets: Iterable[int], b3: frozenset[int]) -> CoverProblem:
    targets = frozenset(targets)
    pool = closed_neighborhood_of_set(graph, targets, b3)
    covers = {w: closed_neighborhood(graph, w, b3) & targets for w in pool}
    return CoverProblem(targets, covers)


def local_min_selective(
    graph: ColoredGraph, targets: Iterable[int], b3: Iterable[int], budget: int = DEFAULT_BUDGET,
    _counter: _Counter | None = None,
) -> tuple[int, ...]:
    """Smallest subset of ``N[targets, b3]`` covering every target.

    A target is covered by itself or by a ``b3`` neighbor. Among minima the
    lexicographically smallest sorted tuple is returned.
    """
    targets = frozenset(targets)
    if not targets:
        raise ValueError("local selective subset of an empty set")
    counter = _counter or _Counter(budget)
    return _local_cover_problem(graph, targets, frozenset(b3)).solve(counter)


def exact_block_cover(
    graph: ColoredGraph, b1: Iterable[int], b3: Iterable[int], budget: int = DEFAULT_BUDGET,
    _counter: _Counter | None = None,
) -> tuple[int, ...]:
    return local_min_selective(graph, b1, b3, budget, _counter)


def _mono_components(graph: ColoredGraph) -> list[tuple[int, ...]]:
    return [c for c in connected_components(graph) if len({graph.colors[v] for v in c}) == 1]


def exact_mss(graph: ColoredGraph, budget: int = DEFAULT_BUDGET, blocks: list[Block] | None = None) -> SolveResult:
    """Minimum selective subset, solved block by block."""
    t0 = time.perf_counter()
    blocks = decompose_blocks(graph) if blocks is None else blocks
    counter = _Counter(budget)
    per_block: dict[int, tuple[int, ...]] = {}
    for block in blocks:
        if block.b1:
            per_block[block.id] = exact_block_cover(graph, block.b1, block.b3, _counter=counter)
        else:
            # no foreign neighbor: the block is a whole monochromatic component
            per_block[block.id] = (min(block.vertices),)
    chosen = tuple(sorted(v for part in per_block.values() for v in part))
    return SolveResult(chosen, per_block, "exact",
                       {"nodes": counter.nodes, "elapsed": time.perf_counter() - t0})


def enumerate_oracle(graph: ColoredGraph) -> SolveResult:
    """Exhaustive search over subsets of the block boundaries, smallest first.

    Candidates are the union of all ``b3`` sets plus one representative per
    monochromatic component. Each subset is checked with the definition-level
    validator, so this shares nothing with the cover formulation.
    """
    t0 = time.perf_counter()
    blocks = decompose_blocks(graph)
    pool = sorted(set().union(*(b.b3 for b in blocks)) if blocks else set())
    forced = tuple(sorted(min(c) for c in _mono_components(graph)))
    if len(pool) > ORACLE_GUARD:
        raise GuardExceeded(f"{len(pool)} boundary vertices exceed oracle guard {ORACLE_GUARD}")
    checked = 0
    for size in range(len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            checked += 1
            chosen = tuple(sorted(forced + combo))
            if is_selective_subset(graph, chosen).valid:
                owner = {v: b.id for b in blocks for v in b.vertices}
                per_block: dict[int, tuple[int, ...]] = {}
                for v in chosen:
                    per_block[owner[v]] = per_block.get(owner[v], ()) + (v,)
                return SolveResult(chosen, per_block, "oracle",
                                   {"nodes": checked, "elapsed": time.perf_counter() - t0})
    raise AssertionError("the full boundary set is always selective")  # pragma: no cover


def exact_dominating_set(graph: ColoredGraph, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Minimum dominating set; lexicographically smallest among minima."""
    everything = frozenset(range(graph.n))
    covers = {w: closed_neighborhood(graph, w, everything) for w in range(graph.n)}
    return CoverProblem(everything, covers).solve(_Counter(budget))
