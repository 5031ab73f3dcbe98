import math
import random

import numpy as np
import pytest

from pathattr import (
    BUILTINS,
    CAPACITY,
    COST,
    DELAY,
    FAULT_PROBABILITY,
    UNAVAILABILITY,
    AttributeRegistry,
    AttributeSpec,
    AttributeSpecError,
    DomainError,
    LimitExceededError,
    UnknownNameError,
    availability,
    build_graph,
    evaluate,
    fold_op,
    serviceability,
    validate_path_set,
)
from pathattr.attributes import MAX, MIN, SUM, fold_matrix
from pathattr.hypergraph import Matrix
from oracles import CLOSED_FORMS, brute_force_cuts

# fault-probability cut products, C1..C12
CUT_PRODUCTS = [
    0.00003750, 0.00002000, 0.00002250, 0.00003250, 0.00005250, 0.00002800,
    0.00003150, 0.00004550, 0.00005175, 0.00007475, 0.00004725, 0.00006825,
]


def test_delay_fig2(fig2_paths):
    r = evaluate(DELAY, fig2_paths)
    assert r.columns == (340, 230, 225)
    assert r.value == 340 and r.unit == "µs"


def test_cost_fig2(fig2_paths):
    assert evaluate(COST, fig2_paths).value == 1900


def test_capacity_fig2(fig2_paths):
    r = evaluate(CAPACITY, fig2_paths)
    assert list(r.columns) == [35, 50, 50, 125, 35, 50, 50, 125, 35, 110, 35, 110]
    assert r.value == 35 and r.unit == "Gbps"


def test_probabilities_fig2(fig2_paths):
    f = evaluate(FAULT_PROBABILITY, fig2_paths)
    assert f.columns == pytest.approx(CUT_PRODUCTS, abs=1e-12)
    assert f.value == pytest.approx(0.000512, abs=1e-12)
    assert evaluate(UNAVAILABILITY, fig2_paths).value == pytest.approx(0.0005118815, abs=1e-9)


def test_availability_fig2(fig2_paths):
    assert availability(fig2_paths) == pytest.approx(0.9994881185, abs=1e-9)
    assert serviceability(fig2_paths) == pytest.approx(1 - 0.000512, abs=1e-12)


def test_serviceability_single_path(fig2):
    assert serviceability(fig2.path_set("p1")) == pytest.approx(1 - (0.0050 + 0.0070 + 0.0115 + 0.0105), abs=1e-12)


@pytest.mark.parametrize(
    "spec, expected",
    [(DELAY, 0), (COST, 0), (CAPACITY, 0), (UNAVAILABILITY, 1), (FAULT_PROBABILITY, 1)],
)
def test_empty_path_set_conventions(fig2_graph, spec, expected):
    empty = validate_path_set(fig2_graph, [])
    assert evaluate(spec, empty).value == expected


def test_empty_availability(fig2_graph):
    empty = validate_path_set(fig2_graph, [])
    assert availability(empty) == 0 and serviceability(empty) == 0


def test_roles_follow_transform():
    assert DELAY.roles == {"serial": "sum", "parallel": "max"}
    assert CAPACITY.roles == {"serial": "min", "parallel": "sum"}
    assert FAULT_PROBABILITY.roles == {"serial": "sum", "parallel": "product"}
    assert UNAVAILABILITY.roles == {"serial": "complement-product", "parallel": "product"}
    for spec in BUILTINS.values():
        assert spec.r == spec.inner.identity
    assert [s.r for s in BUILTINS.values()] == [0, 0, 0, 1, 1]


def test_unknown_property(fig2_paths):
    spec = AttributeSpec("jitter", "jitter", "identity", SUM, MAX)
    with pytest.raises(UnknownNameError):
        evaluate(spec, fig2_paths)


def test_probability_attribute_needs_probability_property(fig2_paths):
    spec = AttributeSpec("bad", "capacity", "cuts", fold_op("product"), fold_op("complement-product"))
    with pytest.raises(DomainError):
        evaluate(spec, fig2_paths)
    with pytest.raises(DomainError):
        evaluate(AttributeSpec("bad2", "delay", "cuts", fold_op("product"), SUM, probability=True), fig2_paths)


def test_cut_limit_propagates(fig2_paths):
    with pytest.raises(LimitExceededError):
        evaluate(CAPACITY, fig2_paths, cut_limit=4)


def test_register_custom():
    reg = AttributeRegistry()
    spec = AttributeSpec("bottleneck-delay", "delay", "identity", MAX, MIN)
    reg.register(spec)
    assert reg.get("bottleneck-delay") is spec
    assert "bottleneck-delay" in reg and "bottleneck-delay" not in AttributeRegistry()


def test_custom_attribute_evaluates(fig2_paths):
    # largest single-edge delay on the best path: min over paths of max edge delay
    spec = AttributeSpec("bottleneck-delay", "delay", "identity", MAX, MIN)
    assert evaluate(spec, fig2_paths).columns == (115, 70, 75)
    assert evaluate(spec, fig2_paths).value == 70


def test_register_reserved():
    with pytest.raises(AttributeSpecError, match="reserved"):
        AttributeRegistry().register(AttributeSpec("delay", "delay", "identity", SUM, MAX))


def test_register_bad_identity():
    spec = AttributeSpec("odd", "delay", "identity", fold_op("sum", 5), MAX)
    with pytest.raises(AttributeSpecError, match="not an identity"):
        AttributeRegistry().register(spec)


def test_register_duplicate():
    reg = AttributeRegistry()
    reg.register(AttributeSpec("x", "delay", "identity", SUM, MAX))
    with pytest.raises(AttributeSpecError, match="already"):
        reg.register(AttributeSpec("x", "delay", "identity", SUM, SUM))


def test_register_non_commutative():
    from pathattr import FoldOp

    sub = FoldOp("minus", lambda x, y: x - y, 0.0)
    with pytest.raises(AttributeSpecError):
        AttributeRegistry().register(AttributeSpec("y", "delay", "identity", sub, MAX))


def test_builtin_ops_pass_verification():
    for spec in BUILTINS.values():
        spec.inner.verify()
        spec.outer.verify()


def test_infinite_inner_identity_rejected():
    with pytest.raises(AttributeSpecError):
        AttributeSpec("z", "delay", "identity", MIN, MAX)


@pytest.mark.parametrize("name", list(CLOSED_FORMS))
def test_engine_matches_closed_forms(random_corpus, name):
    spec = BUILTINS[name]
    fn, prop = CLOSED_FORMS[name]
    for inst in random_corpus[:120]:
        w = inst.graph.property(prop)
        got = evaluate(spec, inst.paths).value
        want = fn(inst.edge_sets, w)
        if spec.probability:
            assert got == pytest.approx(want, abs=1e-12), inst.seed
        else:
            assert got == want, inst.seed


def _with_extra_edge(g):
    description = {
        "vertices": list(g.vertices) + ["zz"],
        "edges": [
            {"id": e.id, "from": e.source, "to": e.target,
             "weights": {n: p[e.id] for n, p in g.properties.items()}}
            for e in g.edges
        ] + [{"id": "extra", "from": g.vertices[0], "to": "zz",
              "weights": {"delay": 9, "cost": 9, "capacity": 9, "fault_probability": 0.5}}],
        "properties": {n: {"unit": p.unit, "domain": p.domain} for n, p in g.properties.items()},
    }
    return build_graph(description)


def test_unused_edge_changes_nothing(random_corpus):
    for inst in random_corpus[:60]:
        g2 = _with_extra_edge(inst.graph)
        ps2 = validate_path_set(g2, [p.edges for p in inst.paths])
        for spec in BUILTINS.values():
            assert evaluate(spec, ps2).value == evaluate(spec, inst.paths).value


def test_rows_at_r_are_neutral(random_corpus):
    for inst in random_corpus[:60]:
        for spec in BUILTINS.values():
            m = evaluate(spec, inst.paths).matrix
            padded = Matrix(m.row_labels + ("pad1", "pad2"), m.column_labels,
                            np.vstack([m.values, np.full((2, m.shape[1]), spec.r)]))
            assert fold_matrix(spec, padded) == fold_matrix(spec, m)


def test_column_permutation_invariance(random_corpus):
    rng = random.Random(7)
    for inst in random_corpus[:60]:
        for spec in BUILTINS.values():
            m = evaluate(spec, inst.paths).matrix
            order = list(range(m.shape[1]))
            rng.shuffle(order)
            perm = Matrix(m.row_labels, tuple(m.column_labels[j] for j in order), m.values[:, order])
            base = fold_matrix(spec, m)[1]
            assert fold_matrix(spec, perm)[1] == pytest.approx(base, rel=1e-12, abs=1e-15)


def test_disjoint_closed_forms(disjoint_corpus):
    for inst in disjoint_corpus:
        cap = inst.graph.property("capacity")
        prob = inst.graph.property("fault_probability")
        assert evaluate(CAPACITY, inst.paths).value == sum(min(cap[e] for e in p.edges) for p in inst.paths)
        want = math.prod(sum(prob[e] for e in p.edges) for p in inst.paths)
        assert evaluate(FAULT_PROBABILITY, inst.paths).value == pytest.approx(want, abs=1e-12)
        # the same value from the one-edge-per-path cut structure directly
        cuts = brute_force_cuts(inst.edge_sets)
        assert sum(math.prod(prob[e] for e in c) for c in cuts) == pytest.approx(want, abs=1e-12)


def test_monotone_in_added_paths(random_corpus):
    for inst in random_corpus:
        ps = inst.paths
        for k in range(1, len(ps)):
            smaller, larger = ps.subset(range(k)), ps.subset(range(k + 1))
            assert evaluate(CAPACITY, larger).value >= evaluate(CAPACITY, smaller).value
            assert evaluate(UNAVAILABILITY, larger).value <= evaluate(UNAVAILABILITY, smaller).value + 1e-15
            assert evaluate(FAULT_PROBABILITY, larger).value <= evaluate(FAULT_PROBABILITY, smaller).value + 1e-15


def test_fault_probability_first_order_bound(random_corpus):
    for inst in random_corpus:
        q = evaluate(FAULT_PROBABILITY, inst.paths).columns
        second = sum(q[j] * q[k] for j in range(len(q)) for k in range(j + 1, len(q)))
        f = evaluate(FAULT_PROBABILITY, inst.paths).value
        u = evaluate(UNAVAILABILITY, inst.paths).value
        assert u <= f + 1e-15
        assert f - u <= second + 1e-15
