import itertools
import random

import pytest

from conftest import all_labelled_graphs
from nearbip import corpus
from nearbip.decomposition import decomposition_to_three_colouring, is_valid_decomposition
from nearbip.graph import from_edge_list, is_forest
from nearbip.oracle import (
    SearchSpaceTooLargeError,
    all_nb_decompositions,
    exact_min_ifvs,
    is_near_bipartite_exact,
)
from nearbip.reduction import build_constraint_graph


def naive_min_ifvs(g):
    """No-pruning reference: try every subset by increasing size."""
    for size in range(g.n + 1):
        for a in itertools.combinations(range(g.n), size):
            aset = frozenset(a)
            if is_valid_decomposition(g, aset):
                return size, aset
    return None


def test_k4_has_no_solution():
    res = exact_min_ifvs(corpus.complete_graph(4))
    assert res.minimum_size is None and res.witness is None and res.exhausted
    assert not is_near_bipartite_exact(corpus.complete_graph(4))


def test_c5_minimum_one():
    res = exact_min_ifvs(corpus.cycle_graph(5))
    assert res.minimum_size == 1
    assert res.witness == {0}  # lexicographically smallest witness
    assert is_near_bipartite_exact(corpus.cycle_graph(5))


def test_k33_minimum_two():
    res = exact_min_ifvs(corpus.complete_bipartite_graph(3, 3))
    assert res.minimum_size == 2
    assert is_valid_decomposition(corpus.complete_bipartite_graph(3, 3), res.witness)


def test_petersen_minimum_three():
    # frozen from the exhaustive enumeration over the 10-vertex graph
    res = exact_min_ifvs(corpus.petersen_graph())
    assert res.minimum_size == 3
    assert res.witness == {0, 2, 8}


def test_forests_need_nothing():
    for g in (corpus.path_graph(6), corpus.star_graph(5), corpus.empty_graph(4),
              corpus.random_tree(12, seed=5)):
        res = exact_min_ifvs(g)
        assert res.minimum_size == 0 and res.witness == frozenset()


def test_budget_semantics():
    c5 = corpus.cycle_graph(5)
    res = exact_min_ifvs(c5, budget=0)
    assert res.minimum_size is None and not res.exhausted
    res = exact_min_ifvs(c5, budget=1)
    assert res.minimum_size == 1 and res.exhausted


def test_hard_limit_guard():
    g = corpus.empty_graph(27)
    with pytest.raises(SearchSpaceTooLargeError):
        exact_min_ifvs(g)
    g = corpus.empty_graph(21)
    with pytest.raises(SearchSpaceTooLargeError):
        all_nb_decompositions(g)
    # limits are configurable
    assert exact_min_ifvs(g, hard_limit=21).minimum_size == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_matches_naive_enumeration_exhaustive(n):
    for g in all_labelled_graphs(n):
        res = exact_min_ifvs(g)
        naive = naive_min_ifvs(g)
        if naive is None:
            assert res.minimum_size is None
        else:
            assert (res.minimum_size, res.witness) == naive


@pytest.mark.parametrize("n", [6, 7])
def test_matches_naive_enumeration_sampled(n):
    rng = random.Random(n * 17)
    for _ in range(250):
        g = corpus.random_graph(n, rng.uniform(0.2, 0.8), rng)
        res = exact_min_ifvs(g)
        naive = naive_min_ifvs(g)
        if naive is None:
            assert res.minimum_size is None
        else:
            assert (res.minimum_size, res.witness) == naive


def test_witnesses_revalidate_and_three_colour():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randrange(2, 12)
        g = corpus.random_graph(n, rng.uniform(0.2, 0.7), rng)
        res = exact_min_ifvs(g)
        if res.minimum_size is None:
            continue
        assert len(res.witness) == res.minimum_size
        assert is_valid_decomposition(g, res.witness)
        # near-bipartite graphs are 3-colourable
        colours = decomposition_to_three_colouring(g, res.witness)
        for u, v in g.edges:
            assert colours[u] != colours[v]


def test_single_edge_enumeration():
    g = from_edge_list(2, [(0, 1)])
    assert all_nb_decompositions(g) == [frozenset(), {0}, {1}]


def test_enumeration_order_and_completeness():
    rng = random.Random(31)
    for _ in range(80):
        n = rng.randrange(1, 9)
        g = corpus.random_graph(n, 0.4, rng)
        decs = all_nb_decompositions(g)
        # ordering: by size then lexicographically on sorted tuples
        keys = [(len(a), tuple(sorted(a))) for a in decs]
        assert keys == sorted(keys)
        # completeness and soundness against raw subset enumeration
        want = [
            frozenset(a)
            for size in range(n + 1)
            for a in itertools.combinations(range(n), size)
            if is_valid_decomposition(g, frozenset(a))
        ]
        assert decs == want
        assert (frozenset() in decs) == is_forest(g)


def test_constraint_graph_enumeration_facts():
    j = build_constraint_graph()
    decs = all_nb_decompositions(j)
    assert frozenset({1, 2, 3}) in decs  # the named {X2, X3, Y4} witness
    xset = frozenset({0, 1, 2})
    assert not any(xset <= a for a in decs)
    for r in range(3):
        for x in itertools.combinations(range(3), r):
            want = frozenset(x)
            assert any(a & xset == want for a in decs)
