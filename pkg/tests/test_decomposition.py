import itertools
import random

import pytest

from nearbip import corpus
from nearbip.decomposition import (
    CycleInB,
    IndependenceViolation,
    InvalidDecompositionError,
    TwoColouring,
    Valid,
    colouring_to_decomposition,
    decomposition_to_three_colouring,
    is_good_colouring,
    is_valid_decomposition,
    validate_decomposition,
)
from nearbip.oracle import all_nb_decompositions
from nearbip.reduction import build_constraint_graph, X2, X3, Y4


def test_constraint_graph_named_decomposition_is_valid():
    j = build_constraint_graph()
    assert isinstance(validate_decomposition(j, {X2, X3, Y4}), Valid)


def test_k4_has_no_valid_decomposition():
    k4 = corpus.complete_graph(4)
    for r in range(5):
        for a in itertools.combinations(range(4), r):
            assert not isinstance(validate_decomposition(k4, a), Valid)


def test_c5_single_vertex_is_valid():
    c5 = corpus.cycle_graph(5)
    assert isinstance(validate_decomposition(c5, {1}), Valid)


def test_independence_violation_witness():
    c5 = corpus.cycle_graph(5)
    verdict = validate_decomposition(c5, {0, 1})
    assert isinstance(verdict, IndependenceViolation)
    u, v = verdict.edge
    assert {u, v} <= {0, 1} and c5.has_edge(u, v)


def test_cycle_witness():
    c5 = corpus.cycle_graph(5)
    verdict = validate_decomposition(c5, frozenset())
    assert isinstance(verdict, CycleInB)
    cyc = verdict.cycle
    assert len(cyc) == 5 and len(set(cyc)) == 5
    for i, v in enumerate(cyc):
        assert c5.has_edge(v, cyc[(i + 1) % len(cyc)])


def test_witnesses_verify_on_random_graphs():
    rng = random.Random(99)
    for _ in range(400):
        n = rng.randrange(2, 12)
        g = corpus.random_graph(n, rng.uniform(0.1, 0.7), rng)
        a = frozenset(v for v in range(n) if rng.random() < 0.35)
        verdict = validate_decomposition(g, a)
        if isinstance(verdict, IndependenceViolation):
            u, v = verdict.edge
            assert g.has_edge(u, v) and u in a and v in a
        elif isinstance(verdict, CycleInB):
            cyc = verdict.cycle
            assert len(cyc) >= 3 and len(set(cyc)) == len(cyc)
            assert not set(cyc) & a
            for i, v in enumerate(cyc):
                assert g.has_edge(v, cyc[(i + 1) % len(cyc)])
        else:
            assert is_valid_decomposition(g, a)


def test_colouring_to_decomposition_examples():
    c5 = corpus.cycle_graph(5)
    dec = colouring_to_decomposition(TwoColouring((1, 2, 2, 2, 2)))
    assert dec.a == {0} and is_valid_decomposition(c5, dec.a)

    forest = corpus.path_graph(4)
    dec = colouring_to_decomposition(TwoColouring((2, 2, 2, 2)))
    assert dec.a == frozenset() and is_valid_decomposition(forest, dec.a)

    dec = colouring_to_decomposition(TwoColouring((1, 1, 1, 1)))
    verdict = validate_decomposition(forest, dec.a)
    assert isinstance(verdict, IndependenceViolation)


def test_colouring_requires_total():
    with pytest.raises(ValueError):
        colouring_to_decomposition(TwoColouring((1, 0, 2)))


def test_good_colouring_round_trip():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randrange(2, 10)
        g = corpus.random_graph(n, 0.35, rng)
        for a in all_nb_decompositions(g)[:8]:
            colours = tuple(1 if v in a else 2 for v in range(n))
            c = TwoColouring(colours)
            assert is_good_colouring(g, c)
            dec = colouring_to_decomposition(c)
            assert isinstance(validate_decomposition(g, dec.a), Valid)


def _assert_proper(g, colours):
    for u, v in g.edges:
        assert colours[u] != colours[v]


def test_three_colouring_examples():
    c5 = corpus.cycle_graph(5)
    colours = decomposition_to_three_colouring(c5, {0})
    _assert_proper(c5, colours)
    assert set(colours) == {1, 2, 3}

    tree = corpus.path_graph(4)
    colours = decomposition_to_three_colouring(tree, frozenset())
    _assert_proper(tree, colours)
    assert set(colours) <= {1, 2}

    j = build_constraint_graph()
    colours = decomposition_to_three_colouring(j, {X2, X3, Y4})
    _assert_proper(j, colours)
    assert all(colours[v] == 3 for v in (X2, X3, Y4))


def test_three_colouring_rejects_invalid():
    with pytest.raises(InvalidDecompositionError):
        decomposition_to_three_colouring(corpus.cycle_graph(5), frozenset())


def test_three_colouring_forest_component_determinism():
    # colour 1 goes to the smallest vertex of every tree component
    g = corpus.path_graph(6)
    colours = decomposition_to_three_colouring(g, frozenset())
    assert colours[0] == 1 and colours == (1, 2, 1, 2, 1, 2)


def test_three_colouring_proper_on_random_witnesses():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randrange(2, 11)
        g = corpus.random_graph(n, 0.4, rng)
        for a in all_nb_decompositions(g)[:5]:
            _assert_proper(g, decomposition_to_three_colouring(g, a))
