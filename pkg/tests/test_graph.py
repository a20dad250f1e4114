import itertools
import random

import pytest

from conftest import all_labelled_graphs
from nearbip import corpus
from nearbip.graph import (
    Infinite,
    OutOfRangeError,
    SelfLoopError,
    diameter,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    is_forest,
    two_neighbour_set,
)


def test_from_edge_list_complete():
    g = from_edge_list(4, itertools.combinations(range(4), 2))
    assert g.num_edges == 6
    assert all(g.degree(v) == 3 for v in range(4))


def test_from_edge_list_deduplicates_orientations():
    g = from_edge_list(3, [(0, 1), (1, 0)])
    assert g.num_edges == 1
    assert g.edges == {(0, 1)}


def test_from_edge_list_rejects_self_loop():
    with pytest.raises(SelfLoopError) as exc:
        from_edge_list(2, [(0, 0)])
    assert exc.value.vertex == 0


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(OutOfRangeError) as exc:
        from_edge_list(3, [(0, 3)])
    assert exc.value.vertex == 3


def test_diameter_examples():
    assert diameter(corpus.complete_graph(4)) == 1
    assert diameter(corpus.path_graph(4)) == 3
    assert diameter(from_edge_list(4, [(0, 1), (2, 3)])) == Infinite
    assert diameter(corpus.empty_graph(0)) == 0
    assert diameter(corpus.empty_graph(1)) == 0
    assert diameter(corpus.empty_graph(2)) == Infinite
    assert diameter(corpus.cycle_graph(5)) == 2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_diameter_one_iff_complete(n):
    for g in all_labelled_graphs(n):
        complete = g.num_edges == n * (n - 1) // 2
        assert (diameter(g) == 1) == complete


def _check_bipartition(g, witness):
    c1, c2 = witness
    assert c1 | c2 == set(range(g.n))
    assert not c1 & c2
    for u, v in g.edges:
        assert (u in c1) != (v in c1)


def _odd_closed_walk_exists(g):
    # brute force: some odd cycle as a vertex sequence
    for k in range(3, g.n + 1, 2):
        for verts in itertools.permutations(range(g.n), k):
            if verts[0] != min(verts):
                continue
            if all(
                g.has_edge(verts[i], verts[(i + 1) % k]) for i in range(k)
            ):
                return True
    return False


def test_is_bipartite_examples():
    w = is_bipartite(corpus.cycle_graph(4))
    assert w is not None and sorted(map(len, w)) == [2, 2]
    assert is_bipartite(corpus.cycle_graph(5)) is None
    w = is_bipartite(corpus.empty_graph(3))
    assert w == (frozenset({0, 1, 2}), frozenset())


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_is_bipartite_exhaustive_small(n):
    for g in all_labelled_graphs(n):
        w = is_bipartite(g)
        if w is None:
            assert _odd_closed_walk_exists(g)
        else:
            _check_bipartition(g, w)


def _has_cycle_brute(g):
    for k in range(3, g.n + 1):
        for verts in itertools.permutations(range(g.n), k):
            if verts[0] != min(verts) or verts[1] > verts[-1]:
                continue  # canonical rotation and direction only
            if all(g.has_edge(verts[i], verts[(i + 1) % k]) for i in range(k)):
                return True
    return False


def test_is_forest_examples():
    assert is_forest(corpus.path_graph(4))
    assert not is_forest(corpus.cycle_graph(3))
    assert is_forest(corpus.empty_graph(0))
    assert is_forest(corpus.empty_graph(5))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_is_forest_matches_cycle_search_exhaustive(n):
    for g in all_labelled_graphs(n):
        assert is_forest(g) == (not _has_cycle_brute(g))


@pytest.mark.parametrize("n", [6, 7])
def test_is_forest_matches_cycle_search_sampled(n):
    rng = random.Random(n)
    for _ in range(1500):
        g = corpus.random_graph(n, rng.uniform(0.1, 0.5), rng)
        assert is_forest(g) == (not _has_cycle_brute(g))


def test_two_neighbour_set_examples():
    star = corpus.star_graph(3)
    assert two_neighbour_set(star, {1, 2, 3}) == {0}
    assert two_neighbour_set(star, range(4)) == frozenset()
    c4 = corpus.cycle_graph(4)
    assert two_neighbour_set(c4, {0, 2}) == {1, 3}


def test_two_neighbour_set_properties():
    rng = random.Random(13)
    for _ in range(300):
        n = rng.randrange(2, 12)
        g = corpus.random_graph(n, rng.uniform(0.1, 0.8), rng)
        x = frozenset(v for v in range(n) if rng.random() < 0.4)
        ax = two_neighbour_set(g, x)
        assert not ax & x
        for v in ax:
            assert len(g.neighbours(v) & x) >= 2
        for v in set(range(n)) - ax - x:
            assert len(g.neighbours(v) & x) < 2
        # monotonicity: a 2-neighbour of X outside X' keeps the property
        xp = x | frozenset(v for v in range(n) if rng.random() < 0.2)
        axp = two_neighbour_set(g, xp)
        for v in ax - xp:
            assert v in axp


def test_induced_subgraph_examples():
    k4 = corpus.complete_graph(4)
    sub, relabel = induced_subgraph(k4, {0, 1, 3})
    assert sub.n == 3 and sub.num_edges == 3
    assert relabel == {0: 0, 1: 1, 3: 2}

    sub, relabel = induced_subgraph(k4, set())
    assert sub.n == 0 and sub.num_edges == 0

    c5 = corpus.cycle_graph(5)
    sub, _ = induced_subgraph(c5, {1, 2, 3})
    assert sub.num_edges == 2 and is_forest(sub)


def test_induced_subgraph_preserves_edges():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randrange(1, 12)
        g = corpus.random_graph(n, 0.4, rng)
        s = frozenset(v for v in range(n) if rng.random() < 0.6)
        sub, relabel = induced_subgraph(g, s)
        assert set(relabel) == s
        assert sorted(relabel.values()) == list(range(len(s)))
        back = {i: v for v, i in relabel.items()}
        for u, v in sub.edges:
            assert g.has_edge(back[u], back[v])
        inside = sum(1 for u, v in g.edges if u in s and v in s)
        assert sub.num_edges == inside


def test_graph_equality_and_repr():
    g1 = corpus.cycle_graph(4)
    g2 = from_edge_list(4, [(1, 0), (1, 2), (2, 3), (3, 0)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert "n=4" in repr(g1)
