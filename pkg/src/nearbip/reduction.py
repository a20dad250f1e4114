"""3-SAT hardness construction for diameter-3 graphs.

Compiles a formula phi with m clauses and n variables into a graph H_phi
of diameter 3 that is near-bipartite iff phi is satisfiable.  H_phi is m
clause graphs side by side, each an array of n+5m+1 rows and 8 columns:

* every non-dominating (row, column) cell holds a true vertex and a false
  vertex (mates); across the whole row the true and false vertices induce
  a complete bipartite graph minus the perfect matching of mates,
* the last row of each clause graph holds one dominating vertex per
  column, joined to every other vertex of its column,
* a single extra vertex v0 is joined to every dominating vertex,
* per clause k an 8-vertex constraint gadget is wired in: X1..X3 sit in
  the variable rows named by the clause literals (true vertex for a
  positive literal, false vertex for a negated one) and Y4..Y8 are true
  vertices of the k-th clause block, joined by ten fixed edges.

The gadget admits a decomposition putting any subset of {X1, X2, X3} of
size at most two on the independent side, and none putting all three, so
gadget membership of the independent side encodes "literal is false".
"""

from dataclasses import dataclass

from .decomposition import NbDecomposition
from .graph import Graph, from_edge_list, induced_subgraph
from . import _backend, _purecore

X1, X2, X3, Y4, Y5, Y6, Y7, Y8 = range(8)

GADGET_VERTEX_NAMES = ("X1", "X2", "X3", "Y4", "Y5", "Y6", "Y7", "Y8")

GADGET_EDGES = (
    (X1, Y4),
    (X2, Y5),
    (X2, Y8),
    (X3, Y6),
    (X3, Y7),
    (Y4, Y5),
    (Y4, Y6),
    (Y5, Y7),
    (Y6, Y8),
    (Y7, Y8),
)

# swapping X2 with X3, Y5 with Y6 and Y7 with Y8 preserves the edge set
GADGET_AUTOMORPHISM = (X1, X3, X2, Y4, Y6, Y5, Y8, Y7)

# independent sides achieving each subset of {X1, X2, X3} of size <= 2;
# the two base cases plus their images under the automorphism
_CONSTRAINT_CHOICE = {
    frozenset(): frozenset({Y6, Y7}),
    frozenset({X1}): frozenset({X1, Y6, Y7}),
    frozenset({X2}): frozenset({X2, Y6, Y7}),
    frozenset({X3}): frozenset({X3, Y5, Y8}),
    frozenset({X1, X2}): frozenset({X1, X2, Y6, Y7}),
    frozenset({X1, X3}): frozenset({X1, X3, Y5, Y8}),
    frozenset({X2, X3}): frozenset({X2, X3, Y4}),
}


class CnfError(ValueError):
    """Base class for formula validation and parsing errors."""


class DimacsSyntaxError(CnfError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ClauseArityError(CnfError):
    def __init__(self, clause_index, arity):
        self.clause_index = clause_index
        self.arity = arity
        super().__init__(f"clause {clause_index} has {arity} literals, need 3")


class RepeatedVariableError(CnfError):
    def __init__(self, clause_index, variable):
        self.clause_index = clause_index
        self.variable = variable
        super().__init__(f"clause {clause_index} repeats variable {variable}")


class EmptyFormulaError(CnfError):
    def __init__(self):
        super().__init__("formula has no clauses; the construction needs m >= 1")


class TooManyLiteralsError(CnfError):
    def __init__(self, literals):
        self.literals = literals
        super().__init__(f"at most two gadget inputs may be chosen, got {literals}")


class UnsatisfiedClauseError(CnfError):
    def __init__(self, clause_index):
        self.clause_index = clause_index
        super().__init__(f"assignment falsifies clause {clause_index}")


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF formula: clauses are triples of (variable, polarity) literals
    over three distinct variables, variables numbered 1..n."""

    n: int
    clauses: tuple

    def __post_init__(self):
        if self.n < 0:
            raise CnfError("negative variable count")
        if not self.clauses:
            raise EmptyFormulaError()
        for idx, clause in enumerate(self.clauses, start=1):
            if len(clause) != 3:
                raise ClauseArityError(idx, len(clause))
            variables = set()
            for var, positive in clause:
                if not 1 <= var <= self.n:
                    raise CnfError(
                        f"clause {idx}: variable {var} outside [1, {self.n}]"
                    )
                if var in variables:
                    raise RepeatedVariableError(idx, var)
                variables.add(var)
                if not isinstance(positive, bool):
                    raise CnfError(f"clause {idx}: polarity must be a bool")

    @property
    def m(self):
        return len(self.clauses)

    def is_satisfied_by(self, assignment):
        """True iff every clause holds under assignment[variable] -> bool."""
        return all(
            any(assignment[var] == positive for var, positive in clause)
            for clause in self.clauses
        )


def formula_from_signed(n, signed_clauses):
    """CnfFormula from DIMACS-style signed literal triples."""
    clauses = tuple(
        tuple((abs(lit), lit > 0) for lit in clause) for clause in signed_clauses
    )
    return CnfFormula(n=n, clauses=clauses)


def parse_dimacs_cnf(text):
    """Parse DIMACS CNF ("p cnf n m" header, zero-terminated clauses).

    Clause order is preserved.  Raises :class:`DimacsSyntaxError` with the
    offending line, plus the formula validation errors.
    """
    n_vars = None
    declared_m = None
    clauses = []
    current = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        last_line = lineno
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if n_vars is not None:
                raise DimacsSyntaxError(lineno, "duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsSyntaxError(lineno, f"malformed header {line!r}")
            try:
                n_vars, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsSyntaxError(lineno, f"malformed header {line!r}")
            continue
        if n_vars is None:
            raise DimacsSyntaxError(lineno, "clause before the 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsSyntaxError(lineno, f"not a literal: {token!r}")
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                if not 1 <= abs(lit) <= n_vars:
                    raise DimacsSyntaxError(
                        lineno, f"variable {abs(lit)} outside [1, {n_vars}]"
                    )
                current.append(lit)
    if n_vars is None:
        raise DimacsSyntaxError(last_line, "missing 'p cnf' header")
    if current:
        raise DimacsSyntaxError(last_line, "unterminated clause at end of input")
    if len(clauses) != declared_m:
        raise DimacsSyntaxError(
            last_line, f"header declares {declared_m} clauses, found {len(clauses)}"
        )
    return formula_from_signed(n_vars, clauses)


def build_constraint_graph():
    """The fixed 8-vertex, 10-edge constraint gadget."""
    return from_edge_list(8, GADGET_EDGES)


def constraint_decomposition(x):
    """Independent side of a gadget decomposition meeting exactly ``x``
    within {X1, X2, X3}; ``x`` must have at most two members."""
    key = frozenset(x)
    if not key <= {X1, X2, X3}:
        raise ValueError(f"{sorted(key)} is not a subset of {{X1, X2, X3}}")
    if len(key) > 2:
        raise TooManyLiteralsError(sorted(key))
    return _CONSTRAINT_CHOICE[key]


@dataclass(frozen=True)
class HphiInstance:
    """The constructed graph plus its coordinate system.

    ``coords[v]`` is ("cell", k, row, col, polarity) for block vertices,
    ("dom", k, col) for dominating vertices, and ("v0",) for the apex;
    clauses, rows and columns are 1-based.  ``gadgets[k-1]`` lists the
    clause-k gadget vertex ids in X1..Y8 order.
    """

    formula: CnfFormula
    graph: Graph
    coords: tuple
    gadgets: tuple

    @property
    def rows(self):
        """Non-dominating rows per clause graph."""
        return self.formula.n + 5 * self.formula.m

    @property
    def v0(self):
        return self.graph.n - 1

    def cell_vertex(self, k, row, col, true_vertex):
        """Vertex id at 1-based (clause graph k, row, col), by polarity."""
        base = (k - 1) * (16 * self.rows + 8)
        return base + ((row - 1) * 8 + (col - 1)) * 2 + (0 if true_vertex else 1)

    def dominating_vertex(self, k, col):
        return (k - 1) * (16 * self.rows + 8) + 16 * self.rows + (col - 1)

    def mate(self, v):
        """The other vertex of a cell; only cell vertices have one."""
        kind = self.coords[v]
        if kind[0] != "cell":
            raise ValueError(f"vertex {v} is not a cell vertex")
        return v ^ 1


def expected_vertex_count(n, m):
    return 16 * m * (n + 5 * m) + 8 * m + 1


def expected_edge_count(n, m):
    # per row a complete bipartite graph on 8m+8m minus a matching, per
    # column its dominating vertex, v0's spokes, and ten gadget edges per
    # clause
    return (n + 5 * m) * (64 * m * m + 8 * m) + 18 * m


def build_hphi(phi):
    """Construct the hardness graph and its coordinate maps for ``phi``."""
    n, m = phi.n, phi.m
    rows = n + 5 * m
    per_clause_graph = 16 * rows + 8
    total = m * per_clause_graph + 1
    v0 = total - 1

    def cell(k, row, col, true_vertex):
        base = (k - 1) * per_clause_graph
        return base + ((row - 1) * 8 + (col - 1)) * 2 + (0 if true_vertex else 1)

    def dom(k, col):
        return (k - 1) * per_clause_graph + 16 * rows + (col - 1)

    coords = [None] * total
    for k in range(1, m + 1):
        for row in range(1, rows + 1):
            for col in range(1, 9):
                coords[cell(k, row, col, True)] = ("cell", k, row, col, True)
                coords[cell(k, row, col, False)] = ("cell", k, row, col, False)
        for col in range(1, 9):
            coords[dom(k, col)] = ("dom", k, col)
    coords[v0] = ("v0",)

    edges = []
    # rows: every true vertex meets every false vertex of the row except
    # its own mate, across all clause graphs
    for row in range(1, rows + 1):
        trues = [cell(k, row, col, True) for k in range(1, m + 1) for col in range(1, 9)]
        for t in trues:
            for k2 in range(1, m + 1):
                for col2 in range(1, 9):
                    f = cell(k2, row, col2, False)
                    if f != t + 1:  # skip the mate
                        edges.append((t, f))
    # columns: the dominating vertex meets every cell vertex of its column
    for k in range(1, m + 1):
        for col in range(1, 9):
            d = dom(k, col)
            for row in range(1, rows + 1):
                edges.append((d, cell(k, row, col, True)))
                edges.append((d, cell(k, row, col, False)))
            edges.append((v0, d))
    # gadgets
    gadgets = []
    for k, clause in enumerate(phi.clauses, start=1):
        xs = [
            cell(k, var, p, positive)
            for p, (var, positive) in enumerate(clause, start=1)
        ]
        ys = [cell(k, n + 5 * (k - 1) + (p - 3), p, True) for p in range(4, 9)]
        gadget = tuple(xs + ys)
        gadgets.append(gadget)
        for a, b in GADGET_EDGES:
            edges.append((gadget[a], gadget[b]))

    graph = from_edge_list(total, edges)
    return HphiInstance(
        formula=phi, graph=graph, coords=tuple(coords), gadgets=tuple(gadgets)
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class CertificateReport:
    checks: tuple

    @property
    def all_passed(self):
        return all(c.ok for c in self.checks)

    def format(self):
        lines = []
        for c in self.checks:
            lines.append(f"[{'PASS' if c.ok else 'FAIL'}] {c.name}: {c.detail}")
        verdict = "ALL CHECKS PASSED" if self.all_passed else "CHECKS FAILED"
        lines.append(verdict)
        return "\n".join(lines)


def _graph_diameter_large(g):
    k = _backend.csr_kernels()
    if k is not None:
        indptr, indices = g.csr()
        return k.diameter_csr(indptr, indices, g.n)
    return _purecore.diameter_masks(g.adj_masks, g.n)


def _first_triangle(g):
    k = _backend.csr_kernels()
    if k is not None:
        indptr, indices = g.csr()
        return k.first_triangle_csr(indptr, indices, g.n)
    return _purecore.first_triangle_masks(g.adj_masks, g.n)


def certify_hphi(h):
    """Structural certificate for a constructed instance.

    Checks vertex and edge counts, diameter exactly 3, triangle-freeness,
    one gadget vertex per column, and that each clause's gadget vertices
    induce exactly the ten fixed edges.  Failures are reported, not raised.
    """
    n, m = h.formula.n, h.formula.m
    checks = []

    want_v = expected_vertex_count(n, m)
    checks.append(
        CheckResult("vertex-count", h.graph.n == want_v,
                    f"expected {want_v}, got {h.graph.n}")
    )
    want_e = expected_edge_count(n, m)
    got_e = h.graph.num_edges
    checks.append(
        CheckResult("edge-count", got_e == want_e, f"expected {want_e}, got {got_e}")
    )

    diam = _graph_diameter_large(h.graph)
    checks.append(CheckResult("diameter", diam == 3, f"expected 3, got {diam}"))

    tri = _first_triangle(h.graph)
    checks.append(
        CheckResult("triangle-free", tri is None,
                    "no triangle" if tri is None else f"triangle {tri}")
    )

    seen_columns = {}
    column_ok = True
    detail = "one gadget vertex in every column"
    for k, gadget in enumerate(h.gadgets, start=1):
        for v in gadget:
            kind = h.coords[v] if v < len(h.coords) else None
            if kind is None or kind[0] != "cell" or kind[1] != k:
                column_ok = False
                detail = f"gadget vertex {v} of clause {k} misplaced"
                break
            key = (kind[1], kind[3])
            if key in seen_columns:
                column_ok = False
                detail = f"column {key} contains two gadget vertices"
                break
            seen_columns[key] = v
    if column_ok and len(seen_columns) != 8 * m:
        column_ok = False
        detail = f"expected {8 * m} gadget columns, got {len(seen_columns)}"
    checks.append(CheckResult("column-gadget-unique", column_ok, detail))

    gadget_ok = True
    detail = "every clause gadget induces exactly the ten fixed edges"
    for k, gadget in enumerate(h.gadgets, start=1):
        sub, relabel = induced_subgraph(h.graph, gadget)
        want = frozenset(
            (min(relabel[gadget[a]], relabel[gadget[b]]),
             max(relabel[gadget[a]], relabel[gadget[b]]))
            for a, b in GADGET_EDGES
        )
        if sub.edges != want:
            gadget_ok = False
            detail = f"clause {k}: induced gadget edges differ"
            break
    checks.append(CheckResult("induced-gadget", gadget_ok, detail))

    return CertificateReport(checks=tuple(checks))


def assignment_to_decomposition(h, assignment):
    """Decomposition of the constructed graph from a satisfying assignment.

    v0 joins A and all dominating vertices join B.  Variable rows put the
    polarity matching the assignment into B and the mates into A.  Per
    clause the gadget decomposition for its false literals fixes the Y
    vertices, and each Y vertex's side propagates along its whole row
    (mates opposite).  Raises :class:`UnsatisfiedClauseError` when the
    assignment falsifies a clause.
    """
    phi = h.formula
    for idx, clause in enumerate(phi.clauses, start=1):
        if not any(assignment[var] == positive for var, positive in clause):
            raise UnsatisfiedClauseError(idx)

    n, m = phi.n, phi.m
    a = set()
    # true rows to B when the variable is true: their mates (false side) to A
    for var in range(1, n + 1):
        a_side_true = not assignment[var]  # true vertices go to A iff var false
        for k in range(1, m + 1):
            for col in range(1, 9):
                a.add(h.cell_vertex(k, var, col, a_side_true))
    # clause rows: row n + 5(j-1) + t carries the gadget vertex Y_{t+3} of
    # clause j; its side propagates across the row
    for j, clause in enumerate(phi.clauses, start=1):
        false_literals = frozenset(
            p - 1 for p, (var, positive) in enumerate(clause, start=1)
            if assignment[var] != positive
        )
        gadget_a = constraint_decomposition(false_literals)
        for p in range(4, 9):
            row = n + 5 * (j - 1) + (p - 3)
            y_in_a = (p - 1) in gadget_a  # gadget ids are 0-based
            # true vertices take Y's side, their mates the other one
            for k in range(1, m + 1):
                for col in range(1, 9):
                    a.add(h.cell_vertex(k, row, col, y_in_a))
    a.add(h.v0)
    b = frozenset(range(h.graph.n)) - a
    return NbDecomposition(a=frozenset(a), b=b)
