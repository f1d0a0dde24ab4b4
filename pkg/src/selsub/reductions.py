"""Dominating-set reductions that produce selective-subset instances.

Each reduction maps an instance whose colors are ignored to a colored
instance whose minimum selective subset size is an exact affine function of
the input's domination number:

* ``reduce_ds_general``: ``gamma(G) + 1 + extra_apexes``
* ``reduce_ds_udg``: ``n*m + gamma(U)``
* ``reduce_circle``: ``|V(G)| + gamma(G)``
"""

from __future__ import annotations

from .errors import ConsistencyError, SelsubError
from .geometry import ChordSet, PointSet
from .graph import ColoredGraph, connected_components
from .instance import Instance


class ReductionError(SelsubError):
    pass


def _unwrap(source: Instance | ColoredGraph) -> Instance:
    return source if isinstance(source, Instance) else Instance(source)


def _label(inst: Instance) -> str:
    return inst.provenance or inst.name or "input"


def reduce_ds_general(source: Instance | ColoredGraph, extra_apexes: int = 0) -> Instance:
    """Add an apex ``z`` of a new color adjacent to every vertex.

    Every extra apex is adjacent to all original vertices and gets its own
    color. Originals get color 0, ``z`` color 1, extra apexes 2, 3, ...
    """
    inst = _unwrap(source)
    g = inst.graph
    if g.n < 1:
        raise ReductionError("input graph must have at least one vertex")
    if extra_apexes < 0:
        raise ReductionError("extra_apexes must be non-negative")
    if len(connected_components(g)) != 1:
        raise ReductionError("input graph must be connected")
    edges = g.edges()
    colors = [0] * g.n
    for a in range(1 + extra_apexes):
        apex = g.n + a
        edges += [(u, apex) for u in range(g.n)]
        colors.append(1 + a)
    out = ColoredGraph.from_edges(g.n + 1 + extra_apexes, edges, colors)
    prov = f"ds2mss(extra_apexes={extra_apexes}) <- {_label(inst)}"
    return Instance(out, None, f"ds2mss-{inst.name or 'input'}", prov)


def reduce_ds_udg(source: Instance, m: int = 1) -> Instance:
    """Attach ``m`` freshly colored disks at each disk's own center.

    Copies sit at identical coordinates, so each is adjacent to its original
    (and possibly to neighbors of it). Originals keep color 0; the ``n*m``
    copies get colors ``1..n*m``, ordered by original vertex then copy.
    """
    if not isinstance(source.geometry, PointSet):
        raise ReductionError("udg2mss needs an instance with point geometry")
    if m < 1:
        raise ReductionError("m must be at least 1")
    g = source.graph
    if len(connected_components(g)) != 1:
        raise ReductionError("input unit disk graph must be connected")
    fixed = list(source.geometry.fixed)
    colors = [0] * g.n
    for i in range(g.n):
        for _ in range(m):
            fixed.append(source.geometry.fixed[i])
            colors.append(len(colors) - g.n + 1)
    prov = f"udg2mss(m={m}) <- {_label(source)}"
    return Instance.from_geometry(PointSet(tuple(fixed)), colors, f"udg2mss-{source.name or 'input'}", prov)


def reduce_circle(source: Instance) -> Instance:
    """Give every chord a private crossing chord of the other color.

    Positions ``p`` become ``3p + 1``; the mate of chord ``(a, b)`` spans
    ``3a`` to ``3a + 2`` and so crosses only that chord. Mate ``i`` is vertex
    ``n + i``.
    """
    if not isinstance(source.geometry, ChordSet):
        raise ReductionError("circle2mss needs an instance with chord geometry")
    ends = source.geometry.endpoints
    scaled = [(3 * a + 1, 3 * b + 1) for a, b in ends]
    mates = [(3 * a, 3 * a + 2) for a, _ in ends]
    try:
        chords = ChordSet(tuple(scaled + mates))
    except ConsistencyError as exc:  # pragma: no cover - impossible by construction
        raise ReductionError(f"position collision after rescaling: {exc}") from exc
    colors = [0] * len(ends) + [1] * len(ends)
    prov = f"circle2mss <- {_label(source)}"
    return Instance.from_geometry(chords, colors, f"circle2mss-{source.name or 'input'}", prov)
