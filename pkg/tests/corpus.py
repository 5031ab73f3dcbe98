"""Seeded random networks with path sets, for property and acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass

from pathattr import DirectedGraph, PathSet, SetFunctionTable, build_graph, validate_path_set


@dataclass
class Instance:
    seed: int
    graph: DirectedGraph
    paths: PathSet

    @property
    def edge_sets(self) -> list[frozenset[str]]:
        return [p.edge_set for p in self.paths]


def _weights(rng: random.Random) -> dict:
    return {
        "delay": rng.randint(1, 120),
        "cost": rng.randint(1, 500),
        "capacity": rng.randint(1, 100),
        "fault_probability": round(rng.uniform(0.0, 0.05), 4),
    }


PROPERTIES = {
    "delay": {"unit": "µs"},
    "cost": {},
    "capacity": {"unit": "Gbps"},
    "fault_probability": {"domain": "probability"},
}


def _all_paths(succ: dict[int, list[tuple[str, int]]], s: int, d: int) -> list[list[str]]:
    out = []

    def walk(v: int, acc: list[str]) -> None:
        if v == d:
            out.append(list(acc))
            return
        for eid, nxt in succ[v]:
            acc.append(eid)
            walk(nxt, acc)
            acc.pop()

    walk(s, [])
    return out


def random_instance(seed: int, max_union: int = 10, max_paths: int = 4, disjoint: bool = False) -> Instance:
    """A random layered network and a path set from its first to last vertex.

    Edges only go forward in vertex order (so every walk is simple), with
    occasional parallel edges and a few unused backward edges as noise.
    """
    rng = random.Random(seed)
    while True:
        n = rng.randint(3, 8)
        names = [f"v{i}" for i in range(n)]
        edges = []
        succ: dict[int, list[tuple[str, int]]] = {i: [] for i in range(n)}
        for i in range(n):
            for j in range(i + 1, n):
                copies = 1 if rng.random() < (0.3 if (i, j) == (0, n - 1) else 0.6) else 0
                if copies and rng.random() < 0.1:
                    copies = 2
                for k in range(copies):
                    eid = f"e{i}{j}" + ("" if k == 0 else chr(ord("a") + k))
                    edges.append({"id": eid, "from": names[i], "to": names[j], "weights": _weights(rng)})
                    succ[i].append((eid, j))
        for _ in range(rng.randint(0, 2)):
            i, j = sorted(rng.sample(range(n), 2))
            eid = f"back{j}{i}_{len(edges)}"
            edges.append({"id": eid, "from": names[j], "to": names[i], "weights": _weights(rng)})
        candidates = _all_paths(succ, 0, n - 1)
        if not candidates:
            continue
        rng.shuffle(candidates)
        chosen: list[list[str]] = []
        used: set[str] = set()
        want = 1 if rng.random() < 0.15 else rng.randint(2, max_paths)
        for path in candidates:
            if len(chosen) == want:
                break
            if disjoint and used & set(path):
                continue
            if len(used | set(path)) > max_union:
                continue
            chosen.append(path)
            used |= set(path)
        if not chosen or (len(chosen) < min(want, 2) and rng.random() < 0.8):
            continue
        g = build_graph({"vertices": names, "edges": edges, "properties": PROPERTIES})
        return Instance(seed, g, validate_path_set(g, chosen))


def corpus(size: int = 200, **kw) -> list[Instance]:
    return [random_instance(seed, **kw) for seed in range(size)]


def supermodular_table(rng: random.Random, n: int) -> SetFunctionTable:
    """Random monotone supermodular set function with value 0 at the empty set.

    A nonnegative combination of indicator products ``[S ⊆ X]``: each term is
    supermodular and nondecreasing, and so is their sum.
    """
    terms = []
    for _ in range(rng.randint(1, 2 * n)):
        k = rng.choice([1, 2, 2, 3]) if n >= 3 else rng.choice([1, 2])
        terms.append((frozenset(rng.sample(range(n), min(k, n))), rng.uniform(0, 10)))
    ground = tuple(f"p{i}" for i in range(n))

    def rho(subset):
        idx = {ground.index(x) for x in subset}
        return sum(c for members, c in terms if members <= idx)

    return SetFunctionTable.from_function(ground, rho)
