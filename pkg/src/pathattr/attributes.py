"""Attribute evaluation as a two-level fold over an r-incidence matrix.

Every attribute is described by a transformation of the path set and two
folds. The inner fold runs down each matrix column starting from its
identity, and the non-member entries of the matrix are filled with that same
identity so they never affect the column result. The outer fold then
combines the column results.

With the identity transform the inner fold composes edges in series and the
outer fold composes paths in parallel. With the cuts transform the roles are
swapped: the edges of a cut are alternatives (parallel), and every cut must
hold for the connection to hold (serial).
"""

from __future__ import annotations

import math
import random
import threading
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Iterator

from .errors import AttributeSpecError, DomainError, UnknownNameError
from .graph import NONNEGATIVE, PROBABILITY, DirectedGraph, PathSet
from .hypergraph import Matrix, r_incidence_matrix
from .transforms import DEFAULT_CUT_LIMIT, TransformKind, transform


def _complement_product(x: float, y: float) -> float:
    return 1.0 - (1.0 - x) * (1.0 - y)


@dataclass(frozen=True)
class FoldOp:
    """A commutative, associative binary operation with an identity element.

    ``domain`` is where the laws are expected to hold and where they are
    sampled during verification.
    """

    name: str
    apply: Callable[[float, float], float] = field(compare=False)
    identity: float
    domain: str = NONNEGATIVE

    def fold(self, values) -> float:
        return reduce(self.apply, values, self.identity)

    def verify(self, samples: int = 64, seed: int = 0) -> None:
        """Sample the identity, commutativity and associativity laws.

        Raises AttributeSpecError on the first violation found.
        """
        rng = random.Random(seed)
        hi = 1.0 if self.domain == PROBABILITY else 1000.0
        draw = lambda: rng.uniform(0.0, hi)  # noqa: E731
        points = [0.0, hi] + [draw() for _ in range(samples)]
        e = self.identity
        for x in points:
            if not (_close(self.apply(e, x), x) and _close(self.apply(x, e), x)):
                raise AttributeSpecError(
                    f"operation {self.name!r}: {e!r} is not an identity (fails at x={x!r})"
                )
        for _ in range(samples):
            x, y, z = draw(), draw(), draw()
            if not _close(self.apply(x, y), self.apply(y, x)):
                raise AttributeSpecError(f"operation {self.name!r} is not commutative at ({x!r}, {y!r})")
            if not _close(self.apply(self.apply(x, y), z), self.apply(x, self.apply(y, z))):
                raise AttributeSpecError(f"operation {self.name!r} is not associative at ({x!r}, {y!r}, {z!r})")


def _close(a: float, b: float) -> bool:
    if math.isinf(a) or math.isinf(b):
        return a == b
    return math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-12)


SUM = FoldOp("sum", lambda x, y: x + y, 0.0)
PRODUCT = FoldOp("product", lambda x, y: x * y, 1.0)
MAX = FoldOp("max", max, 0.0)
MIN = FoldOp("min", min, math.inf)
COMPLEMENT_PRODUCT = FoldOp("complement-product", _complement_product, 0.0, PROBABILITY)

OPERATIONS: dict[str, FoldOp] = {op.name: op for op in (SUM, MAX, MIN, PRODUCT, COMPLEMENT_PRODUCT)}


def fold_op(name: str, identity: float | None = None) -> FoldOp:
    """Look up a named operation, optionally overriding its declared identity.

    The override is not checked here; ``register_attribute`` verifies it.
    """
    try:
        base = OPERATIONS[name]
    except KeyError:
        raise AttributeSpecError(
            f"unknown operation {name!r}; expected one of {', '.join(OPERATIONS)}"
        ) from None
    if identity is None or float(identity) == base.identity:
        return base
    return FoldOp(base.name, base.apply, float(identity), base.domain)


@dataclass(frozen=True)
class AttributeSpec:
    name: str
    property: str
    transform: TransformKind
    inner: FoldOp
    outer: FoldOp
    unit: str = ""
    probability: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "transform", TransformKind(self.transform))
        if not math.isfinite(self.inner.identity):
            raise AttributeSpecError(
                f"attribute {self.name!r}: inner identity {self.inner.identity} cannot fill a matrix"
            )
        if self.inner.domain == PROBABILITY or self.outer.domain == PROBABILITY:
            object.__setattr__(self, "probability", True)

    @property
    def r(self) -> float:
        return self.inner.identity

    @property
    def roles(self) -> dict[str, str]:
        """Which fold plays the serial and which the parallel composition."""
        if self.transform is TransformKind.CUTS:
            return {"serial": self.outer.name, "parallel": self.inner.name}
        # union yields a single column, so the outer fold is trivial there
        return {"serial": self.inner.name, "parallel": self.outer.name}


@dataclass(frozen=True)
class AttributeResult:
    name: str
    value: float
    unit: str
    transform: TransformKind
    column_labels: tuple[str, ...]
    columns: tuple[float, ...]
    matrix: Matrix = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "unit": self.unit,
            "transform": str(self.transform),
            "columns": dict(zip(self.column_labels, self.columns)),
        }


DELAY = AttributeSpec("delay", "delay", TransformKind.IDENTITY, SUM, MAX)
COST = AttributeSpec("cost", "cost", TransformKind.UNION, SUM, SUM)
CAPACITY = AttributeSpec("capacity", "capacity", TransformKind.CUTS, SUM, MIN)
UNAVAILABILITY = AttributeSpec(
    "unavailability", "fault_probability", TransformKind.CUTS, PRODUCT, COMPLEMENT_PRODUCT, probability=True
)
FAULT_PROBABILITY = AttributeSpec(
    "fault_probability", "fault_probability", TransformKind.CUTS, PRODUCT, SUM, probability=True
)

BUILTINS: dict[str, AttributeSpec] = {
    a.name: a for a in (DELAY, COST, CAPACITY, UNAVAILABILITY, FAULT_PROBABILITY)
}


class AttributeRegistry:
    """Name → AttributeSpec lookup with the built-in attributes preloaded.

    Writes take a lock; reads go straight to the dict.
    """

    def __init__(self) -> None:
        self._specs: dict[str, AttributeSpec] = dict(BUILTINS)
        self._lock = threading.Lock()

    def register(self, spec: AttributeSpec) -> AttributeSpec:
        if spec.name in BUILTINS:
            raise AttributeSpecError(f"attribute name {spec.name!r} is reserved")
        spec.inner.verify()
        spec.outer.verify()
        with self._lock:
            if spec.name in self._specs:
                raise AttributeSpecError(f"attribute {spec.name!r} is already registered")
            self._specs[spec.name] = spec
        return spec

    def get(self, name: str) -> AttributeSpec:
        try:
            return self._specs[name]
        except KeyError:
            raise UnknownNameError(f"unknown attribute {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._specs

    def __iter__(self) -> Iterator[str]:
        return iter(list(self._specs))

    def copy(self) -> AttributeRegistry:
        other = AttributeRegistry()
        other._specs = dict(self._specs)
        return other


default_registry = AttributeRegistry()


def register_attribute(spec: AttributeSpec, registry: AttributeRegistry | None = None) -> AttributeSpec:
    return (registry or default_registry).register(spec)


def fold_matrix(spec: AttributeSpec, m: Matrix) -> tuple[tuple[float, ...], float]:
    """Inner fold down each column, then outer fold across the column results."""
    columns = tuple(spec.inner.fold(float(x) for x in m.values[:, j]) for j in range(m.shape[1]))
    return columns, spec.outer.fold(columns)


def evaluate(
    spec: AttributeSpec, p: PathSet, g: DirectedGraph | None = None, *, cut_limit: int = DEFAULT_CUT_LIMIT
) -> AttributeResult:
    g = p.graph if g is None else g
    if g is not p.graph and g.edge_ids != p.graph.edge_ids:
        raise ValueError("path set belongs to a different graph")
    weights = g.property(spec.property)
    if spec.probability and weights.domain != PROBABILITY:
        raise DomainError(
            f"attribute {spec.name!r} needs a probability property, {spec.property!r} is {weights.domain}"
        )
    h = transform(spec.transform, p, cut_limit=cut_limit)
    m = r_incidence_matrix(spec.r, weights, h)
    columns, value = fold_matrix(spec, m)
    return AttributeResult(spec.name, value, spec.unit or weights.unit, spec.transform, m.column_labels, columns, m)


def availability(p: PathSet, g: DirectedGraph | None = None, **kw) -> float:
    return 1.0 - evaluate(UNAVAILABILITY, p, g, **kw).value


def serviceability(p: PathSet, g: DirectedGraph | None = None, **kw) -> float:
    return 1.0 - evaluate(FAULT_PROBABILITY, p, g, **kw).value
