"""Hypergraphs over a graph's edge set and their (r-)incidence matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import GraphError, UnknownNameError
from .graph import EdgePropertyVector


@dataclass(frozen=True)
class Hyperedge:
    label: str
    members: frozenset[str]


@dataclass(frozen=True)
class Hypergraph:
    """Hyperedges over an ordered vertex set.

    Vertices are the edge ids of the owning graph, in canonical order; the
    full edge set is always used so row indexing is stable across
    transformations.
    """

    vertices: tuple[str, ...]
    hyperedges: tuple[Hyperedge, ...]

    def __post_init__(self) -> None:
        known = set(self.vertices)
        labels = set()
        for h in self.hyperedges:
            if h.label in labels:
                raise GraphError(f"duplicate hyperedge label {h.label!r}")
            labels.add(h.label)
            stray = h.members - known
            if stray:
                raise GraphError(f"hyperedge {h.label!r} has unknown vertices {sorted(stray)}")

    @classmethod
    def from_sets(cls, vertices: Iterable[str], members: Iterable[Iterable[str]], prefix: str) -> Hypergraph:
        edges = tuple(Hyperedge(f"{prefix}{i}", frozenset(m)) for i, m in enumerate(members, 1))
        return cls(tuple(vertices), edges)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(h.label for h in self.hyperedges)

    def __len__(self) -> int:
        return len(self.hyperedges)


@dataclass(frozen=True)
class VertexWeightedHypergraph:
    base: Hypergraph
    weight: EdgePropertyVector

    def __post_init__(self) -> None:
        missing = [v for v in self.base.vertices if v not in self.weight]
        if missing:
            raise UnknownNameError(f"weight {self.weight.name!r} missing for {', '.join(missing)}")

    def r_incidence(self, r: float) -> Matrix:
        return r_incidence_matrix(r, self.weight, self.base)


@dataclass(frozen=True)
class Matrix:
    """Dense real matrix with edge-id row labels and hyperedge column labels."""

    row_labels: tuple[str, ...]
    column_labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float).reshape(len(self.row_labels), len(self.column_labels))
        if not np.all(np.isfinite(values)):
            raise ValueError("matrix entries must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "column_labels", tuple(self.column_labels))
        object.__setattr__(self, "values", values)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def column(self, label: str) -> np.ndarray:
        return self.values[:, self.column_labels.index(label)]

    def __getitem__(self, key: tuple[str, str]) -> float:
        row, col = key
        return float(self.values[self.row_labels.index(row), self.column_labels.index(col)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.column_labels == other.column_labels
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None  # type: ignore[assignment]


def incidence_matrix(h: Hypergraph) -> Matrix:
    values = np.zeros((len(h.vertices), len(h.hyperedges)))
    for j, edge in enumerate(h.hyperedges):
        for i, v in enumerate(h.vertices):
            if v in edge.members:
                values[i, j] = 1.0
    return Matrix(h.vertices, h.labels, values)


def r_incidence_matrix(r: float, w: EdgePropertyVector, h: Hypergraph) -> Matrix:
    """Entry (i, j) is ``w[v_i]`` when vertex i belongs to hyperedge j, else ``r``."""
    r = float(r)
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r}")
    missing = [v for v in h.vertices if v not in w]
    if missing:
        raise UnknownNameError(f"weight {w.name!r} missing for {', '.join(missing)}")
    weights = np.array([w[v] for v in h.vertices], dtype=float)
    mask = incidence_matrix(h).values.astype(bool)
    values = np.where(mask, weights[:, None], r)
    return Matrix(h.vertices, h.labels, values)
