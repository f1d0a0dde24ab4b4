"""Point and chord representations and the graphs they induce.

Coordinates are held in fixed point (six fractional digits) so that the
``distance <= 2`` edge rule is decided in integer arithmetic.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .errors import ConsistencyError, GuardExceeded
from .graph import ColoredGraph, bfs_distances

SCALE = 10**6
# squared threshold for center distance 2, in scaled units
_THRESHOLD_SQ = (2 * SCALE) ** 2

MIS_GUARD = 24


def to_fixed(value) -> int:
    """Round a coordinate to the nearest micro-unit and return it as an int."""
    try:
        d = value if isinstance(value, Decimal) else Decimal(str(value))
        if not d.is_finite():
            raise ConsistencyError(f"non-finite coordinate {value!r}")
        return int((d * SCALE).to_integral_value())
    except InvalidOperation as exc:
        raise ConsistencyError(f"bad coordinate {value!r}") from exc


@dataclass(frozen=True)
class PointSet:
    """Disk centers in micro-units, one per vertex."""

    fixed: tuple[tuple[int, int], ...]

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence]) -> PointSet:
        pts = []
        for pair in coords:
            if len(pair) != 2:
                raise ConsistencyError(f"coordinate must be [x, y], got {pair!r}")
            pts.append((to_fixed(pair[0]), to_fixed(pair[1])))
        return cls(tuple(pts))

    def __len__(self) -> int:
        return len(self.fixed)

    @property
    def coords(self) -> list[tuple[float, float]]:
        return [(x / SCALE, y / SCALE) for x, y in self.fixed]


@dataclass(frozen=True)
class ChordSet:
    """Chords of a circle given by integer endpoint positions."""

    endpoints: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for a, b in self.endpoints:
            if a == b:
                raise ConsistencyError(f"degenerate chord ({a},{b})")
            for p in (a, b):
                if p in seen:
                    raise ConsistencyError(f"duplicate chord position {p}")
                seen.add(p)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> ChordSet:
        return cls(tuple((int(a), int(b)) for a, b in pairs))

    def __len__(self) -> int:
        return len(self.endpoints)


def udg_from_points(points: PointSet) -> list[tuple[int, int]]:
    """Edges ``(u, v)``, ``u < v``, between centers at distance at most 2."""
    pts = points.fixed
    edges = []
    for u in range(len(pts)):
        xu, yu = pts[u]
        for v in range(u + 1, len(pts)):
            dx = pts[v][0] - xu
            dy = pts[v][1] - yu
            if dx * dx + dy * dy <= _THRESHOLD_SQ:
                edges.append((u, v))
    return edges


def chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    lo, hi = sorted(a)
    inside = sum(lo < p < hi for p in b)
    return inside == 1


def circle_graph_from_chords(chords: ChordSet) -> list[tuple[int, int]]:
    """Edges between chords whose endpoints interleave around the circle."""
    ends = chords.endpoints
    # Sweep over sorted positions: a chord opening inside an open chord and
    # closing after it crosses it.
    events = sorted((p, i) for i, pair in enumerate(ends) for p in pair)
    open_stack: list[int] = []
    opened: dict[int, int] = {}
    edges = set()
    for _, i in events:
        if i not in opened:
            opened[i] = len(open_stack)
            open_stack.append(i)
            continue
        idx = open_stack.index(i)
        # every chord opened after i and still open crosses i
        for j in open_stack[idx + 1:]:
            edges.add((min(i, j), max(i, j)))
        open_stack.pop(idx)
    return sorted(edges)


def max_independent_in_ball(
    graph: ColoredGraph, active: Iterable[int], v: int, r: int
) -> int:
    """Exact maximum independent set size inside the ``r``-ball around ``v``.

    The ball is taken in the subgraph induced on ``active``.
    """
    active = frozenset(active)
    if v not in active:
        raise ValueError(f"vertex {v} is not in the active set")
    ball = sorted(u for u, d in bfs_distances(graph, [v], active).items() if d <= r)
    if len(ball) > MIS_GUARD:
        raise GuardExceeded(f"ball of {len(ball)} vertices exceeds guard {MIS_GUARD}")
    index = {u: i for i, u in enumerate(ball)}
    nbr = [0] * len(ball)
    for u in ball:
        for w in graph.adjacency[u]:
            if w in index:
                nbr[index[u]] |= 1 << index[w]
    return _mis_size((1 << len(ball)) - 1, nbr)


def _mis_size(mask: int, nbr: list[int]) -> int:
    if not mask:
        return 0
    low = mask & -mask
    i = low.bit_length() - 1
    rest = mask & ~low
    if not (nbr[i] & rest):
        return 1 + _mis_size(rest, nbr)
    return max(1 + _mis_size(rest & ~nbr[i], nbr), _mis_size(rest, nbr))
