"""Benchmark comparing the compiled kernels against the pure-Python twins.

Run as ``python -m nearbip.bench`` (add ``--quick`` for smaller sizes).
"""

import argparse
import time

from . import _backend, corpus, reduction
from .graph import diameter
from .oracle import exact_min_ifvs
from .solver import solve_min_ifvs_diam2, lemma2_min_ifvs


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _row(name, fn):
    if not _backend.compiled_available():
        _, pure = _timed(fn)
        print(f"{name:<42} {'-':>10} {pure:>9.3f}s {'-':>8}")
        return
    _backend.force_pure(False)
    res_fast, fast = _timed(fn)
    _backend.force_pure(True)
    res_pure, pure = _timed(fn)
    _backend.force_pure(False)
    agree = "" if res_fast == res_pure else "  (results differ!)"
    print(f"{name:<42} {fast:>9.3f}s {pure:>9.3f}s {pure / fast:>7.1f}x{agree}")


def main(argv=None):
    parser = argparse.ArgumentParser(prog="python -m nearbip.bench")
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args(argv)
    quick = args.quick

    print(f"compiled kernels available: {_backend.compiled_available()}")
    print(f"{'benchmark':<42} {'compiled':>10} {'pure':>10} {'speedup':>8}")

    n_corpus = 6 if quick else 7
    _row(
        f"corpus scan: count diameter-2 graphs, n={n_corpus}",
        lambda: sum(1 for _ in corpus.all_connected_diam2_graphs(n_corpus)),
    )

    graphs = [corpus.random_diameter2_graph(10, seed) for seed in range(30)]
    solver_rounds = 30 if quick else 300
    _row(
        f"solver: {solver_rounds} random graphs, n=10",
        lambda: [
            None if (dec := solve_min_ifvs_diam2(g)) is None else len(dec.a)
            for g in graphs * (solver_rounds // len(graphs))
        ],
    )

    oracle_graphs = [corpus.random_diameter2_graph(12, seed) for seed in range(10)]
    _row(
        "oracle: 10 random graphs, n=12",
        lambda: [exact_min_ifvs(g).minimum_size for g in oracle_graphs],
    )

    big = corpus.random_diameter2_graph(20 if quick else 30, 8)
    _row(
        f"bounded-set scan: one graph, n={big.n}",
        lambda: None if (dec := lemma2_min_ifvs(big)) is None else len(dec.a),
    )

    phi = reduction.parse_dimacs_cnf(
        "p cnf 4 2\n1 2 -3 0\n-1 3 4 0\n" if quick
        else "p cnf 6 4\n1 2 -3 0\n-1 3 4 0\n2 -5 6 0\n-2 4 5 0\n"
    )
    h = reduction.build_hphi(phi)
    _row(
        f"hardness-graph diameter, {h.graph.n} vertices",
        lambda: diameter(h.graph),
    )
    _row(
        f"hardness-graph certificate, {h.graph.n} vertices",
        lambda: reduction.certify_hphi(h).all_passed,
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
