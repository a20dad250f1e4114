"""Test-corpus generation: named small graphs, exhaustive labelled
diameter-2 enumeration, and seeded random diameter-2 graphs."""

import random
from itertools import combinations

from . import _backend, _purecore
from .graph import Graph, from_edge_list


def complete_graph(n):
    return from_edge_list(n, combinations(range(n), 2))


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    """Centre 0 joined to ``leaves`` further vertices."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a, b):
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n):
    return from_edge_list(n, [])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def wheel_graph(rim):
    """Hub 0 joined to a rim cycle 1..rim."""
    spokes = [(0, i) for i in range(1, rim + 1)]
    cyc = [(i, i % rim + 1) for i in range(1, rim + 1)]
    return from_edge_list(rim + 1, spokes + cyc)


def book_graph(pages):
    """``pages`` triangles sharing the edge (0, 1)."""
    edges = [(0, 1)]
    for p in range(pages):
        edges += [(0, 2 + p), (1, 2 + p)]
    return from_edge_list(2 + pages, edges)


def graph_from_code(n, code):
    """Graph whose edge set is the bit pattern ``code`` over the fixed
    unordered-pair ordering."""
    pairs = _purecore.edge_pair_table(n)
    masks = [0] * n
    i = 0
    while code:
        if code & 1:
            u, v = pairs[i]
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        code >>= 1
        i += 1
    return Graph(n, masks)


def all_connected_diam2_graphs(n):
    """Every labelled connected graph on n vertices with diameter exactly 2,
    by raw enumeration of all edge subsets (practical for n <= 7)."""
    k = _backend.csr_kernels()
    if k is not None and hasattr(k, "diam2_codes"):
        codes = k.diam2_codes(n)
    else:
        codes = _purecore.iter_diam2_codes(n)
    for code in codes:
        yield graph_from_code(n, code)


def random_graph(n, p, rng):
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return Graph(n, masks)


def random_diameter2_graph(n, seed, start_p=0.5):
    """Seeded random graph with diameter exactly 2.

    Rejection-samples edge-probability-p graphs; p anneals upward on
    rejection because small diameter-2 graphs are dense.  Deterministic per
    (n, seed).
    """
    if n < 3:
        raise ValueError("no graph on fewer than 3 vertices has diameter 2")
    rng = random.Random(seed)
    p = start_p
    while True:
        g = random_graph(n, p, rng)
        if _purecore.is_connected_diam2(g.adj_masks, n):
            return g
        p = min(0.92, p + 0.01)


def random_tree(n, seed):
    """Seeded uniform-ish random tree (random parent among earlier vertices)."""
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return from_edge_list(n, edges)
