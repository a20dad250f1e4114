"""Text formats: edge-list graphs, vertex-set files, assignment files, and
the coordinate sidecar for constructed hardness graphs.

All formats are line oriented, '#' starts a comment, and serialization is
deterministic so golden files stay byte-identical.
"""

from .graph import from_edge_list


class FileFormatError(ValueError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def serialize_edge_list(g):
    """Edge-list document: header "n <count>", one "u v" line per edge with
    u < v, sorted."""
    lines = [f"n {g.n}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    """Inverse of :func:`serialize_edge_list`; tolerant of unordered pairs
    and duplicates, strict about anything malformed."""
    n = None
    pairs = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise FileFormatError(lineno, "expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise FileFormatError(lineno, f"bad vertex count {parts[1]!r}")
            if n < 0:
                raise FileFormatError(lineno, "negative vertex count")
            continue
        if len(parts) != 2:
            raise FileFormatError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FileFormatError(lineno, f"non-integer endpoint in {line!r}")
        if u == v:
            raise FileFormatError(lineno, f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FileFormatError(lineno, f"endpoint outside [0, {n})")
        pairs.append((u, v))
    if n is None:
        raise FileFormatError(0, "empty document, missing 'n <count>' header")
    return from_edge_list(n, pairs)


def serialize_vertex_set(s):
    """One vertex id per line, ascending."""
    return "".join(f"{v}\n" for v in sorted(s))


def parse_vertex_set(text):
    """Whitespace- or line-separated vertex ids."""
    out = set()
    for lineno, line in _content_lines(text):
        for tok in line.split():
            try:
                out.add(int(tok))
            except ValueError:
                raise FileFormatError(lineno, f"not a vertex id: {tok!r}")
    return frozenset(out)


def serialize_assignment(assignment):
    """One "v<i>=0|1" line per variable, ascending."""
    return "".join(
        f"v{var}={1 if assignment[var] else 0}\n" for var in sorted(assignment)
    )


def parse_assignment(text, n_vars=None):
    """Assignment file with one "v<i>=0|1" line per variable.

    When ``n_vars`` is given, exactly the variables 1..n_vars must appear.
    """
    assignment = {}
    for lineno, line in _content_lines(text):
        body = line.replace(" ", "")
        if not body.startswith("v") or "=" not in body:
            raise FileFormatError(lineno, f"expected 'v<i>=0|1', got {line!r}")
        name, _, value = body.partition("=")
        try:
            var = int(name[1:])
        except ValueError:
            raise FileFormatError(lineno, f"bad variable name {name!r}")
        if value not in ("0", "1"):
            raise FileFormatError(lineno, f"bad truth value {value!r}")
        if var in assignment:
            raise FileFormatError(lineno, f"duplicate assignment for v{var}")
        assignment[var] = value == "1"
    if n_vars is not None:
        missing = set(range(1, n_vars + 1)) - set(assignment)
        extra = set(assignment) - set(range(1, n_vars + 1))
        if missing:
            raise FileFormatError(0, f"missing variables {sorted(missing)}")
        if extra:
            raise FileFormatError(0, f"unknown variables {sorted(extra)}")
    return assignment


def serialize_coordinate_map(h):
    """One line per vertex: "id k row col tag" with tag true, false,
    dominating, or v0; '-' fills fields that do not apply."""
    lines = []
    last_row = h.rows + 1
    for v, coord in enumerate(h.coords):
        if coord[0] == "cell":
            _, k, row, col, positive = coord
            tag = "true" if positive else "false"
            lines.append(f"{v} {k} {row} {col} {tag}")
        elif coord[0] == "dom":
            _, k, col = coord
            lines.append(f"{v} {k} {last_row} {col} dominating")
        else:
            lines.append(f"{v} - - - v0")
    return "\n".join(lines) + "\n"
