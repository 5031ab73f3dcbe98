"""Path set transformations: identity, union and cuts.

Cuts here are minimal hitting sets of the paths viewed as edge sets, not
graph cuts: removing a cut separates source and destination *within the
path set*, even if other routes exist in the graph.
"""

from __future__ import annotations

import enum
from typing import Callable, Iterable

from .errors import LimitExceededError
from .graph import PathSet
from .hypergraph import Hypergraph

DEFAULT_CUT_LIMIT = 24


class TransformKind(str, enum.Enum):
    IDENTITY = "identity"
    UNION = "union"
    CUTS = "cuts"

    def __str__(self) -> str:
        return self.value


class CutVerdict(str, enum.Enum):
    NOT_A_CUT = "not-a-cut"
    NOT_MINIMAL = "cut-not-minimal"
    MINIMAL = "minimal-cut"

    def __str__(self) -> str:
        return self.value


def identity_transform(p: PathSet) -> Hypergraph:
    return Hypergraph.from_sets(p.graph.edge_ids, (path.edge_set for path in p), "P")


def union_transform(p: PathSet) -> Hypergraph:
    return Hypergraph.from_sets(p.graph.edge_ids, [p.union_edges()], "U")


def _masks(p: PathSet) -> list[int]:
    index = p.graph.edge_index
    return [sum(1 << index(e) for e in path.edge_set) for path in p]


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def minimal_transversals(families: Iterable[int]) -> list[int]:
    """All minimal hitting sets of a family of bitmask sets.

    Sets are processed one at a time: a partial transversal that already
    hits the next set is kept, otherwise it is extended by each element of
    that set; candidates containing another candidate are dropped. The
    result is sorted lexicographically by ascending bit positions.
    """
    transversals = [0]
    for s in families:
        if s == 0:
            # an empty set can never be hit
            return []
        candidates = set()
        for t in transversals:
            if t & s:
                candidates.add(t)
            else:
                m = s
                while m:
                    low = m & -m
                    candidates.add(t | low)
                    m ^= low
        # drop candidates that strictly contain another
        kept: list[int] = []
        for c in sorted(candidates, key=int.bit_count):
            if not any((k & c) == k for k in kept):
                kept.append(c)
        transversals = kept
    return sorted(transversals, key=_bits)


def cuts_transform(p: PathSet, limit: int = DEFAULT_CUT_LIMIT) -> Hypergraph:
    union = p.union_edges()
    if len(union) > limit:
        raise LimitExceededError(
            f"path set union has {len(union)} edges, cut enumeration limit is {limit}"
        )
    ids = p.graph.edge_ids
    cuts = minimal_transversals(_masks(p))
    return Hypergraph.from_sets(ids, ([ids[i] for i in _bits(c)] for c in cuts), "C")


def is_minimal_cut(p: PathSet, s: Iterable[str]) -> CutVerdict:
    index = p.graph.edge_index
    members = {index(e) for e in s}
    mask = sum(1 << i for i in members)
    paths = _masks(p)
    if not all(path & mask for path in paths):
        return CutVerdict.NOT_A_CUT
    for i in members:
        reduced = mask & ~(1 << i)
        if all(path & reduced for path in paths):
            return CutVerdict.NOT_MINIMAL
    return CutVerdict.MINIMAL


TRANSFORMS: dict[TransformKind, Callable[..., Hypergraph]] = {
    TransformKind.IDENTITY: identity_transform,
    TransformKind.UNION: union_transform,
    TransformKind.CUTS: cuts_transform,
}


def transform(kind: TransformKind | str, p: PathSet, cut_limit: int = DEFAULT_CUT_LIMIT) -> Hypergraph:
    kind = TransformKind(kind)
    if kind is TransformKind.CUTS:
        return cuts_transform(p, limit=cut_limit)
    return TRANSFORMS[kind](p)
