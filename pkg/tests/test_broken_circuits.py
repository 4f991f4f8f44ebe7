import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs

from chromnbc.broken_circuits import (
    BrokenCircuitSet,
    Labeling,
    WeightAssignment,
    alternating_weighted_sum,
    broken_circuit_masks,
    broken_circuits,
    cancellation_sum,
    eqs_edge_set,
    is_kfree,
    kfree_weight_product,
    kset_from_edge_sets,
)
from chromnbc.errors import PreconditionError
from chromnbc.graph import circuit_masks, complete_graph


def triangle_labels(a, b, c):
    g = complete_graph(3)  # edges 1-2, 1-3, 2-3
    return g, Labeling(g, (a, b, c))


def test_triangle_broken_circuit_drops_max_label():
    g, lab = triangle_labels(1, 3, 2)
    assert broken_circuits(g, lab).members() == [frozenset({("1", "2"), ("2", "3")})]


def test_tied_maximum_gives_no_broken_circuit():
    g, lab = triangle_labels(1, 5, 5)
    assert len(broken_circuits(g, lab)) == 0


def test_tie_below_the_maximum_is_fine():
    g, lab = triangle_labels(1, 1, 5)
    assert len(broken_circuits(g, lab)) == 1


def test_broken_circuits_of_k4_position_labels():
    g = complete_graph(4)
    bcs = broken_circuits(g, Labeling.by_position(g))
    assert len(bcs) == 7
    assert all(m.bit_count() in (2, 3) for m in bcs)


def test_broken_circuit_masks_handles_negative_labels():
    assert broken_circuit_masks([0b111], [-3, -1, -2]) == {0b101}


def test_labeling_from_mapping_and_lookup():
    g = complete_graph(3)
    lab = Labeling.from_mapping(g, {("2", "1"): 7, ("1", "3"): 8, ("3", "2"): 9})
    assert lab[("1", "2")] == 7 and lab.labels == (7, 8, 9)
    with pytest.raises(ValueError):
        Labeling.from_mapping(g, {("1", "2"): 1})
    with pytest.raises(ValueError):
        Labeling(g, (1, 2))


def test_kset_subset_validation():
    g, lab = triangle_labels(1, 2, 3)
    ok = kset_from_edge_sets(g, lab, [[("1", "2"), ("1", "3")]])
    assert len(ok) == 1
    with pytest.raises(PreconditionError):
        kset_from_edge_sets(g, lab, [[("1", "2"), ("2", "3")]])


def test_weights_domain():
    g, lab = triangle_labels(1, 2, 3)
    ks = broken_circuits(g, lab)
    w = WeightAssignment.from_mapping(ks, {ks.masks[0]: 4})
    assert w[ks.masks[0]] == 4
    with pytest.raises(ValueError):
        WeightAssignment(ks, (1, 2))
    with pytest.raises(ValueError):
        WeightAssignment.from_mapping(ks, {})


def test_kfree_and_weight_product():
    ks = BrokenCircuitSet.of("abc", [0b011, 0b100])
    w = WeightAssignment(ks, (5, 7))
    assert is_kfree(0b001, ks) and not is_kfree(0b011, ks)
    assert kfree_weight_product(0b111, ks, w) == 35
    assert kfree_weight_product(0b001, ks, w) == 1


def test_eqs_edge_set():
    g = complete_graph(3)
    assert eqs_edge_set(g, {"1": 0, "2": 0, "3": 1}).members == frozenset({("1", "2")})
    assert eqs_edge_set(g, {"1": 0, "2": 1, "3": 2}).mask == 0


def test_alternating_sum_of_empty_support():
    assert alternating_weighted_sum(0, [(0b1, 9)]) == 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=5, max_edges=8), st.randoms(use_true_random=False))
def test_cancellation_for_every_coloring(g, rng):
    lab = Labeling(g, tuple(rng.randint(1, 3) for _ in g.edges))
    ks = broken_circuits(g, lab)
    w = WeightAssignment.random(ks, rng)
    for _ in range(10):
        col = {v: rng.randrange(3) for v in g.vertices}
        want = 1 if eqs_edge_set(g, col).mask == 0 else 0
        assert cancellation_sum(g, ks, w, col) == want


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=5, max_edges=8), st.randoms(use_true_random=False))
def test_broken_circuits_nonempty_for_simple_graphs(g, rng):
    lab = Labeling(g, tuple(rng.randint(-2, 2) for _ in g.edges))
    circuits = circuit_masks(g)
    for k in broken_circuits(g, lab):
        assert k != 0
        assert any(c & k == k and (c & ~k).bit_count() == 1 for c in circuits)


def test_random_weights_are_seeded():
    ks = BrokenCircuitSet.of("ab", [0b01, 0b10])
    a = WeightAssignment.random(ks, random.Random(1))
    b = WeightAssignment.random(ks, random.Random(1))
    assert a == b
