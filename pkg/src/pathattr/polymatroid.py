"""Set functions induced by attributes, and exhaustive axiom checks.

A table holds one value per subset of a ground set of paths, indexed by
bitmask (bit i set ⇔ the i-th ground element is in the subset). Checks are
exhaustive over all subset pairs, vectorised per row with numpy, which keeps
ground sets of up to 12 elements interactive and 16 feasible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .attributes import AttributeSpec, evaluate
from .errors import LimitExceededError
from .graph import DirectedGraph, PathSet
from .transforms import DEFAULT_CUT_LIMIT

DEFAULT_SUBSET_LIMIT = 12
HARD_SUBSET_LIMIT = 16
TOLERANCE = 1e-9


@dataclass(frozen=True)
class SetFunctionTable:
    ground_set: tuple[str, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.shape != (1 << len(self.ground_set),):
            raise ValueError(
                f"expected {1 << len(self.ground_set)} values for {len(self.ground_set)} elements, got {values.shape}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "ground_set", tuple(self.ground_set))
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, ground_set: Sequence[str], fn: Callable[[frozenset[str]], float]) -> SetFunctionTable:
        ground_set = tuple(ground_set)
        n = len(ground_set)
        return cls(ground_set, [fn(frozenset(ground_set[i] for i in range(n) if m >> i & 1)) for m in range(1 << n)])

    @property
    def full(self) -> int:
        return (1 << len(self.ground_set)) - 1

    def mask(self, subset: Iterable[str]) -> int:
        return sum(1 << self.ground_set.index(x) for x in subset)

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(x for i, x in enumerate(self.ground_set) if mask >> i & 1)

    def __call__(self, subset: Iterable[str] | int) -> float:
        m = subset if isinstance(subset, (int, np.integer)) else self.mask(subset)
        return float(self.values[m])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFunctionTable):
            return NotImplemented
        return self.ground_set == other.ground_set and np.array_equal(self.values, other.values)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class Verdict:
    axiom: str
    holds: bool
    witness: tuple[tuple[str, ...], ...] = ()
    values: dict[str, float] = field(default_factory=dict)
    violations: int = 0

    def to_dict(self) -> dict:
        out: dict = {"holds": self.holds}
        if not self.holds:
            out["witness"] = [list(w) for w in self.witness]
            out["values"] = dict(self.values)
            out["violations"] = self.violations
        return out


@dataclass(frozen=True)
class SetFunctionReport:
    ground_set: tuple[str, ...]
    verdicts: dict[str, Verdict]
    classification: tuple[str, ...]

    @property
    def is_polymatroid(self) -> bool:
        return all(self.verdicts[a].holds for a in ("R1", "R2", "R3"))

    @property
    def is_matroid(self) -> bool:
        return self.is_polymatroid and self.verdicts["R4"].holds and self.verdicts["R5"].holds

    @property
    def is_modular(self) -> bool:
        return self.verdicts["submodular"].holds and self.verdicts["supermodular"].holds

    def to_dict(self) -> dict:
        return {
            "ground_set": list(self.ground_set),
            "classification": list(self.classification),
            "verdicts": {k: v.to_dict() for k, v in self.verdicts.items()},
        }


def tabulate(
    attr: AttributeSpec,
    p: PathSet,
    g: DirectedGraph | None = None,
    *,
    limit: int = DEFAULT_SUBSET_LIMIT,
    cut_limit: int = DEFAULT_CUT_LIMIT,
) -> SetFunctionTable:
    """Evaluate ``attr`` on every sub-path-set of ``p``."""
    if limit > HARD_SUBSET_LIMIT:
        raise LimitExceededError(f"subset limit {limit} exceeds the hard ceiling {HARD_SUBSET_LIMIT}")
    if len(p) > limit:
        raise LimitExceededError(f"path set has {len(p)} paths, subset limit is {limit}")
    n = len(p)
    values = [
        evaluate(attr, p.subset(i for i in range(n) if m >> i & 1), g, cut_limit=cut_limit).value
        for m in range(1 << n)
    ]
    return SetFunctionTable(p.labels, values)


def _pair_scan(t: SetFunctionTable, keep: Callable[[int, np.ndarray], np.ndarray],
               bad: Callable[[int, np.ndarray], np.ndarray]):
    """First (X, Y) in mask order with ``keep`` and ``bad`` true, plus the total count."""
    masks = np.arange(len(t.values))
    first = None
    count = 0
    for x in range(len(t.values)):
        hit = keep(x, masks) & bad(x, masks)
        k = int(np.count_nonzero(hit))
        if k:
            count += k
            if first is None:
                first = (x, int(masks[hit][0]))
    return first, count


def check_axioms(t: SetFunctionTable, tol: float = TOLERANCE) -> SetFunctionReport:
    rho = t.values
    names = t.members
    verdicts: dict[str, Verdict] = {}

    empty = float(rho[0])
    verdicts["R1"] = (
        Verdict("R1", True) if abs(empty) <= tol
        else Verdict("R1", False, ((),), {"rho(X)": empty}, 1)
    )

    # X ⊆ Y ⇒ ρ(X) ≤ ρ(Y)
    first, count = _pair_scan(t, lambda x, ys: (ys & x) == x, lambda x, ys: rho[x] > rho[ys] + tol)
    if first is None:
        verdicts["R2"] = Verdict("R2", True)
    else:
        x, y = first
        verdicts["R2"] = Verdict("R2", False, (names(x), names(y)),
                                 {"rho(X)": float(rho[x]), "rho(Y)": float(rho[y])}, count)

    def lattice(kind: str, bad) -> Verdict:
        # unordered pairs X < Y; comparable pairs satisfy both inequalities with equality
        first, count = _pair_scan(t, lambda x, ys: ys > x, bad)
        if first is None:
            return Verdict(kind, True)
        x, y = first
        return Verdict(kind, False, (names(x), names(y)), {
            "rho(X)": float(rho[x]),
            "rho(Y)": float(rho[y]),
            "rho(X&Y)": float(rho[x & y]),
            "rho(X|Y)": float(rho[x | y]),
        }, count)

    sub = lattice("submodular", lambda x, ys: rho[x] + rho[ys] < rho[x & ys] + rho[x | ys] - tol)
    sup = lattice("supermodular", lambda x, ys: rho[x] + rho[ys] > rho[x & ys] + rho[x | ys] + tol)
    verdicts["R3"] = Verdict("R3", sub.holds, sub.witness, sub.values, sub.violations)

    off = np.abs(rho - np.round(rho)) > tol
    if off.any():
        x = int(np.flatnonzero(off)[0])
        verdicts["R4"] = Verdict("R4", False, (names(x),), {"rho(X)": float(rho[x])}, int(off.sum()))
    else:
        verdicts["R4"] = Verdict("R4", True)

    sizes = np.array([bin(m).count("1") for m in range(len(rho))])
    over = rho > sizes + tol
    if over.any():
        x = int(np.flatnonzero(over)[0])
        verdicts["R5"] = Verdict("R5", False, (names(x),), {"rho(X)": float(rho[x]), "|X|": int(sizes[x])},
                                 int(over.sum()))
    else:
        verdicts["R5"] = Verdict("R5", True)

    verdicts["submodular"] = sub
    verdicts["supermodular"] = sup
    return SetFunctionReport(t.ground_set, verdicts, _classify(verdicts))


def _classify(v: dict[str, Verdict]) -> tuple[str, ...]:
    labels = []
    poly = v["R1"].holds and v["R2"].holds and v["R3"].holds
    if poly and v["R4"].holds and v["R5"].holds:
        labels += ["matroid", "polymatroid"]
    elif poly:
        labels.append("polymatroid")
    sub, sup = v["submodular"].holds, v["supermodular"].holds
    if sub and sup:
        labels.append("modular")
    elif sub and not poly:
        labels.append("submodular-only")
    elif sup:
        labels.append("supermodular-only")
    return tuple(labels) or ("none",)


def dualize(t: SetFunctionTable) -> SetFunctionTable:
    """ρ'(X) = ρ(E) − ρ(E ∖ X)."""
    full = t.full
    masks = np.arange(len(t.values))
    return SetFunctionTable(t.ground_set, t.values[full] - t.values[full ^ masks])
