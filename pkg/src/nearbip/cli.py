"""Command-line surface.

Exit codes are a stable contract: 0 solved / passed, 1 not near-bipartite
(or a failed check), 2 precondition rejection such as a wrong diameter,
64 usage errors, 66 unreadable or malformed input files.  Results go to
stdout, diagnostics to stderr.
"""

import argparse
import sys

from . import corpus, fileio, reduction
from .decomposition import (
    CycleInB,
    IndependenceViolation,
    Valid,
    validate_decomposition,
)
from .graph import GraphError
from .oracle import SearchSpaceTooLargeError, exact_min_ifvs
from .solver import (
    DiameterNotTwoError,
    solve_min_ifvs_diam2,
    yang_yuan_condition,
)

EX_OK = 0
EX_NEGATIVE = 1
EX_REJECTED = 2
EX_USAGE = 64
EX_FILE = 66

_FILE_ERRORS = (OSError, fileio.FileFormatError, reduction.CnfError, GraphError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path):
    return fileio.parse_edge_list(_read(path))


def _print_solution(size, a):
    print(f"size {size}")
    print("A" + "".join(f" {v}" for v in sorted(a)))


def _cmd_solve(args):
    g = _load_graph(args.graph)
    try:
        dec = solve_min_ifvs_diam2(g)
    except DiameterNotTwoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_REJECTED
    if dec is None:
        print("NOT NEAR-BIPARTITE")
        return EX_NEGATIVE
    _print_solution(len(dec.a), dec.a)
    return EX_OK


def _cmd_oracle(args):
    g = _load_graph(args.graph)
    try:
        res = exact_min_ifvs(g)
    except SearchSpaceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_REJECTED
    if res.minimum_size is None:
        print("NOT NEAR-BIPARTITE")
        return EX_NEGATIVE
    _print_solution(res.minimum_size, res.witness)
    return EX_OK


def _cmd_check(args):
    g = _load_graph(args.graph)
    a = fileio.parse_vertex_set(_read(args.set_file))
    bad = [v for v in a if not 0 <= v < g.n]
    if bad:
        print(f"error: vertex {bad[0]} outside [0, {g.n})", file=sys.stderr)
        return EX_FILE
    verdict = validate_decomposition(g, a)
    if isinstance(verdict, Valid):
        print("VALID")
        return EX_OK
    if isinstance(verdict, IndependenceViolation):
        u, v = verdict.edge
        print(f"INDEPENDENCE-VIOLATION {u} {v}")
    elif isinstance(verdict, CycleInB):
        print("CYCLE-IN-B" + "".join(f" {v}" for v in verdict.cycle))
    return EX_NEGATIVE


def _cmd_characterize(args):
    g = _load_graph(args.graph)
    try:
        cond = yang_yuan_condition(g)
    except DiameterNotTwoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_REJECTED
    if cond is None:
        print("NOT NEAR-BIPARTITE")
        return EX_NEGATIVE
    print(f"NEAR-BIPARTITE condition ({'i' if cond == 1 else 'ii'})")
    return EX_OK


def _cmd_reduce(args):
    phi = reduction.parse_dimacs_cnf(_read(args.cnf))
    h = reduction.build_hphi(phi)
    doc = fileio.serialize_edge_list(h.graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
        map_path = args.map or args.out + ".map"
    else:
        sys.stdout.write(doc)
        map_path = args.map
    if map_path:
        with open(map_path, "w", encoding="utf-8") as fh:
            fh.write(fileio.serialize_coordinate_map(h))
    if args.certify:
        report = reduction.certify_hphi(h)
        print(report.format(), file=sys.stderr)
        if not report.all_passed:
            return EX_NEGATIVE
    return EX_OK


def _cmd_embed(args):
    phi = reduction.parse_dimacs_cnf(_read(args.cnf))
    assignment = fileio.parse_assignment(_read(args.assignment), n_vars=phi.n)
    h = reduction.build_hphi(phi)
    try:
        dec = reduction.assignment_to_decomposition(h, assignment)
    except reduction.UnsatisfiedClauseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_REJECTED
    sys.stdout.write(fileio.serialize_vertex_set(dec.a))
    return EX_OK


def _cmd_gen(args):
    if args.n < 3:
        print("error: diameter-2 graphs need at least 3 vertices", file=sys.stderr)
        return EX_USAGE
    g = corpus.random_diameter2_graph(args.n, args.seed)
    doc = fileio.serialize_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return EX_OK


def _build_parser():
    parser = _Parser(
        prog="nearbip",
        description=(
            "Minimum independent feedback vertex sets of diameter-2 graphs, "
            "near-bipartiteness certificates, and the 3-SAT "
            "hardness-construction compiler."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum independent feedback vertex set")
    p.add_argument("graph", help="edge-list graph file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive-search minimum (small graphs)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("check", help="validate a decomposition candidate")
    p.add_argument("graph")
    p.add_argument("set_file", help="vertex ids of the candidate A")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("characterize", help="near-bipartiteness characterisation")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_characterize)

    p = sub.add_parser("reduce", help="compile a 3-CNF into the hardness graph")
    p.add_argument("cnf", help="DIMACS CNF file")
    p.add_argument("-o", "--out", help="write the graph here instead of stdout")
    p.add_argument("--map", help="write the coordinate sidecar here "
                                 "(default with -o: <out>.map)")
    p.add_argument("--certify", action="store_true",
                   help="run the structural certificate (report on stderr)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("embed", help="decomposition from a satisfying assignment")
    p.add_argument("cnf")
    p.add_argument("assignment", help="one 'v<i>=0|1' line per variable")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("gen", help="seeded random diameter-2 graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EX_USAGE
    try:
        return args.func(args)
    except _FILE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_FILE


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
