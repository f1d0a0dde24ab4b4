"""Instances and their JSON file format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal

from .errors import ConsistencyError, ParseError
from .geometry import SCALE, ChordSet, PointSet, circle_graph_from_chords, udg_from_points
from .graph import ColoredGraph


@dataclass(frozen=True)
class Instance:
    graph: ColoredGraph
    geometry: PointSet | ChordSet | None = None
    name: str = ""
    provenance: str = ""

    def __post_init__(self):
        if self.geometry is None:
            return
        if len(self.geometry) != self.graph.n:
            raise ConsistencyError(
                f"geometry has {len(self.geometry)} entries for {self.graph.n} vertices"
            )
        expected = set(geometry_edges(self.geometry))
        actual = set(self.graph.edges())
        if expected != actual:
            missing = sorted(expected - actual)[:3]
            extra = sorted(actual - expected)[:3]
            raise ConsistencyError(
                f"edges disagree with geometry (missing {missing}, unexpected {extra})"
            )

    @classmethod
    def from_geometry(
        cls, geometry: PointSet | ChordSet, colors, name: str = "", provenance: str = ""
    ) -> Instance:
        graph = ColoredGraph.from_edges(len(geometry), geometry_edges(geometry), colors)
        return cls(graph, geometry, name, provenance)


def geometry_edges(geometry: PointSet | ChordSet) -> list[tuple[int, int]]:
    if isinstance(geometry, PointSet):
        return udg_from_points(geometry)
    return circle_graph_from_chords(geometry)


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def load_instance(text: str) -> Instance:
    """Parse the JSON instance format and establish all invariants."""
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object")
    for key in ("n", "edges", "colors"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    n = _int(doc["n"], "n")
    if not isinstance(doc["edges"], list) or not isinstance(doc["colors"], list):
        raise ParseError("edges and colors must be arrays")
    edges = []
    for e in doc["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"edge must be a pair, got {e!r}")
        u, v = _int(e[0], "edge endpoint"), _int(e[1], "edge endpoint")
        if u == v:
            raise ConsistencyError(f"self-loop at vertex {u}")
        if u > v:
            raise ParseError(f"edge [{u},{v}] must be listed with u < v")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ConsistencyError("duplicate edge")
    colors = [_int(x, "color") for x in doc["colors"]]
    graph = ColoredGraph.from_edges(n, edges, colors)

    geometry = None
    geo = doc.get("geometry")
    if geo is not None:
        if not isinstance(geo, dict) or "kind" not in geo:
            raise ParseError("geometry must be an object with a 'kind'")
        if geo["kind"] == "points":
            coords = geo.get("coords")
            if not isinstance(coords, list):
                raise ParseError("points geometry needs a 'coords' array")
            for pair in coords:
                if not isinstance(pair, list) or not all(
                    isinstance(x, (int, Decimal)) and not isinstance(x, bool) for x in pair
                ):
                    raise ParseError(f"coordinate must be a numeric pair, got {pair!r}")
            geometry = PointSet.from_coords(coords)
        elif geo["kind"] == "chords":
            ends = geo.get("endpoints")
            if not isinstance(ends, list):
                raise ParseError("chords geometry needs an 'endpoints' array")
            pairs = []
            for pair in ends:
                if not isinstance(pair, list) or len(pair) != 2:
                    raise ParseError(f"chord must be a pair, got {pair!r}")
                pairs.append((_int(pair[0], "chord position"), _int(pair[1], "chord position")))
            geometry = ChordSet.from_pairs(pairs)
        else:
            raise ParseError(f"unknown geometry kind {geo['kind']!r}")
    return Instance(graph, geometry, str(doc.get("name", "")), str(doc.get("provenance", "")))


def instance_to_dict(inst: Instance) -> dict:
    doc: dict = {"n": inst.graph.n, "edges": [list(e) for e in inst.graph.edges()],
                 "colors": list(inst.graph.colors)}
    if isinstance(inst.geometry, PointSet):
        doc["geometry"] = {
            "kind": "points",
            # shortest float repr reproduces the 6-digit decimal exactly
            "coords": [[x / SCALE, y / SCALE] for x, y in inst.geometry.fixed],
        }
    elif isinstance(inst.geometry, ChordSet):
        doc["geometry"] = {"kind": "chords", "endpoints": [list(p) for p in inst.geometry.endpoints]}
    if inst.name:
        doc["name"] = inst.name
    if inst.provenance:
        doc["provenance"] = inst.provenance
    return doc


def dump_instance(inst: Instance) -> str:
    return json.dumps(instance_to_dict(inst)) + "\n"
