"""Directed graphs with per-edge property vectors, paths and path sets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Sequence

from .errors import GraphError, PathError, UnknownNameError

NONNEGATIVE = "nonnegative-real"
PROBABILITY = "probability"
DOMAINS = (NONNEGATIVE, PROBABILITY)


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.source}→{self.target}"


@dataclass(frozen=True)
class EdgePropertyVector:
    """A named weight for every edge of a graph.

    ``values`` maps edge id to a finite real. The domain is checked on
    construction: probabilities must lie in [0, 1], everything else must be
    nonnegative.
    """

    name: str
    values: Mapping[str, float]
    unit: str = ""
    domain: str = NONNEGATIVE

    def __post_init__(self) -> None:
        if self.domain not in DOMAINS:
            raise GraphError(f"property {self.name!r}: unknown domain {self.domain!r}")
        checked = {}
        for edge_id, raw in self.values.items():
            try:
                value = float(raw)
            except (TypeError, ValueError):
                raise GraphError(
                    f"property {self.name!r}: edge {edge_id!r} has non-numeric value {raw!r}"
                ) from None
            if not math.isfinite(value) or value < 0:
                raise GraphError(
                    f"property {self.name!r}: edge {edge_id!r} value {value} is not a nonnegative real"
                )
            if self.domain == PROBABILITY and value > 1:
                raise GraphError(
                    f"property {self.name!r}: edge {edge_id!r} probability {value} outside [0, 1]"
                )
            checked[edge_id] = value
        object.__setattr__(self, "values", MappingProxyType(checked))

    def __getitem__(self, edge_id: str) -> float:
        return self.values[edge_id]

    def __contains__(self, edge_id: object) -> bool:
        return edge_id in self.values


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable directed multigraph without self-loops.

    Edge insertion order is the canonical row order of every matrix built
    over this graph.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    properties: Mapping[str, EdgePropertyVector] = field(default_factory=dict)
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphError("duplicate vertex identifier")
        known = set(vertices)
        index: dict[str, int] = {}
        for edge in self.edges:
            if edge.id in index:
                raise GraphError(f"duplicate edge id {edge.id!r}")
            for end in (edge.source, edge.target):
                if end not in known:
                    raise GraphError(f"edge {edge.id!r} references unknown vertex {end!r}")
            if edge.source == edge.target:
                raise GraphError(f"edge {edge.id!r} is a self-loop on {edge.source!r}")
            index[edge.id] = len(index)
        for name, prop in self.properties.items():
            if name != prop.name:
                raise GraphError(f"property registered as {name!r} is named {prop.name!r}")
            missing = [e for e in index if e not in prop.values]
            if missing:
                raise GraphError(f"property {name!r} has no value for edge(s) {', '.join(missing)}")
            extra = [e for e in prop.values if e not in index]
            if extra:
                raise GraphError(f"property {name!r} has values for unknown edge(s) {', '.join(extra)}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "properties", MappingProxyType(dict(self.properties)))
        object.__setattr__(self, "_index", MappingProxyType(index))

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edges[self._index[edge_id]]
        except KeyError:
            raise UnknownNameError(f"unknown edge id {edge_id!r}") from None

    def edge_index(self, edge_id: str) -> int:
        try:
            return self._index[edge_id]
        except KeyError:
            raise UnknownNameError(f"unknown edge id {edge_id!r}") from None

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._index

    def property(self, name: str) -> EdgePropertyVector:
        try:
            return self.properties[name]
        except KeyError:
            raise UnknownNameError(f"unknown property {name!r}") from None


@dataclass(frozen=True)
class DirectedPath:
    edges: tuple[str, ...]
    source: str
    destination: str
    vertices: tuple[str, ...] = field(compare=False, default=())

    @property
    def edge_set(self) -> frozenset[str]:
        return frozenset(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PathSet:
    """Simple paths between one source and one destination.

    An empty path set has ``source`` and ``destination`` set to None.
    """

    graph: DirectedGraph = field(repr=False)
    paths: tuple[DirectedPath, ...]
    source: str | None
    destination: str | None

    @property
    def is_empty(self) -> bool:
        return not self.paths

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"P{i}" for i in range(1, len(self.paths) + 1))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def union_edges(self) -> frozenset[str]:
        return frozenset().union(*(p.edge_set for p in self.paths))

    def subset(self, indices: Iterable[int]) -> PathSet:
        """Sub-path-set keeping the paths at ``indices`` in their original order."""
        return validate_path_set(self.graph, [self.paths[i] for i in sorted(set(indices))])


_EDGE_KEYS = {"id", "from", "to", "weights"}
_GRAPH_KEYS = {"vertices", "edges", "properties"}
_PROPERTY_KEYS = {"unit", "domain"}


def build_graph(description: Mapping[str, Any]) -> DirectedGraph:
    """Build a graph from a plain mapping.

    Expected keys: ``vertices`` (list of ids), ``edges`` (list of
    ``{"id", "from", "to", "weights"}``) and optionally ``properties``
    (``{name: {"unit", "domain"}}``). Every edge must carry a value for
    every property name that appears on any edge or in ``properties``.
    """
    unknown = set(description) - _GRAPH_KEYS
    if unknown:
        raise GraphError(f"unknown graph key(s): {', '.join(sorted(unknown))}")
    vertices = description.get("vertices")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphError("'vertices' must be a list of strings")
    raw_edges = description.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphError("'edges' must be a list")
    meta = description.get("properties", {}) or {}
    if not isinstance(meta, dict):
        raise GraphError("'properties' must be a mapping")

    edges = []
    weights: dict[str, dict[str, Any]] = {name: {} for name in meta}
    for raw in raw_edges:
        if not isinstance(raw, dict):
            raise GraphError(f"edge record must be an object, got {raw!r}")
        extra = set(raw) - _EDGE_KEYS
        if extra:
            raise GraphError(f"edge record has unknown key(s): {', '.join(sorted(extra))}")
        try:
            edge = Edge(str(raw["id"]), str(raw["from"]), str(raw["to"]))
        except KeyError as exc:
            raise GraphError(f"edge record missing {exc.args[0]!r}") from None
        edges.append(edge)
        edge_weights = raw.get("weights", {})
        if not isinstance(edge_weights, dict):
            raise GraphError(f"edge {edge.id!r}: 'weights' must be a mapping")
        for name, value in edge_weights.items():
            weights.setdefault(name, {})[edge.id] = value

    properties = {}
    for name, values in weights.items():
        info = meta.get(name, {})
        if not isinstance(info, dict) or set(info) - _PROPERTY_KEYS:
            raise GraphError(f"property {name!r}: metadata must be an object with 'unit'/'domain'")
        properties[name] = EdgePropertyVector(
            name, values, unit=str(info.get("unit", "")), domain=info.get("domain", NONNEGATIVE)
        )
    return DirectedGraph(tuple(vertices), tuple(edges), properties)


def validate_path(graph: DirectedGraph, ids: Sequence[str]) -> DirectedPath:
    if not ids:
        raise PathError("a path needs at least one edge")
    edges = [graph.edge(i) for i in ids]
    walk = [edges[0].source]
    for prev, nxt in zip(edges, edges[1:]):
        if prev.target != nxt.source:
            raise PathError(f"broken chain: {prev.id!r} ends at {prev.target!r}, {nxt.id!r} starts at {nxt.source!r}")
    for edge in edges:
        walk.append(edge.target)
    seen: set[str] = set()
    for v in walk:
        if v in seen:
            raise PathError(f"path revisits vertex {v!r}")
        seen.add(v)
    return DirectedPath(tuple(ids), walk[0], walk[-1], tuple(walk))


def validate_path_set(graph: DirectedGraph, paths: Iterable[DirectedPath | Sequence[str]]) -> PathSet:
    """Validate paths (or raw edge-id sequences) as one path set over ``graph``."""
    members = []
    seen: set[frozenset[str]] = set()
    for p in paths:
        if not isinstance(p, DirectedPath):
            p = validate_path(graph, p)
        if members and (p.source, p.destination) != (members[0].source, members[0].destination):
            raise PathError(
                f"endpoint mismatch: {p.source}⇒{p.destination} vs {members[0].source}⇒{members[0].destination}"
            )
        if p.edge_set in seen:
            raise PathError(f"duplicate path {list(p.edges)}")
        seen.add(p.edge_set)
        members.append(p)
    if not members:
        return PathSet(graph, (), None, None)
    return PathSet(graph, tuple(members), members[0].source, members[0].destination)
