"""Near-bipartite decompositions, good 2-colourings, and 3-colourings.

A decomposition splits the vertices into an independent set A and a set B
that induces a forest; A is then an independent feedback vertex set.  A
2-colouring is good when the colour-1 class is independent and the
colour-2 class induces a forest, so its colour-1 class is such an A.
"""

from dataclasses import dataclass

from . import _purecore
from .graph import _as_mask, _check_subset

UNCOLOURED = 0


class InvalidDecompositionError(ValueError):
    """Raised when an operation requires a valid decomposition."""


@dataclass(frozen=True)
class NbDecomposition:
    """A candidate pair (a, b = complement of a)."""

    a: frozenset
    b: frozenset

    @property
    def size(self):
        return len(self.a)


def decomposition_from_a(g, a):
    a = frozenset(a)
    return NbDecomposition(a=a, b=frozenset(range(g.n)) - a)


@dataclass(frozen=True)
class TwoColouring:
    """Per-vertex colours from {1, 2}, with 0 marking unassigned."""

    colours: tuple

    def is_total(self):
        return all(c != UNCOLOURED for c in self.colours)

    def ones(self):
        return frozenset(v for v, c in enumerate(self.colours) if c == 1)

    def twos(self):
        return frozenset(v for v, c in enumerate(self.colours) if c == 2)


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class IndependenceViolation:
    """An edge with both endpoints inside the candidate set A."""

    edge: tuple


@dataclass(frozen=True)
class CycleInB:
    """A cycle (distinct vertices, in order) inside the complement of A."""

    cycle: tuple


def _find_cycle_mask(masks, n, sub):
    """Some cycle of the subgraph induced by ``sub``, as an ordered vertex
    tuple, or None.  DFS with an explicit stack; smallest roots and
    neighbours first, so the witness is deterministic."""
    visited = 0
    for root in _purecore.iter_bits(sub):
        if visited >> root & 1:
            continue
        parent = {root: -1}
        visited |= 1 << root
        on_path = 1 << root
        stack = [(root, iter(tuple(_purecore.iter_bits(masks[root] & sub))))]
        while stack:
            v, neigh = stack[-1]
            descended = False
            for w in neigh:
                if w == parent[v]:
                    continue
                if on_path >> w & 1:
                    # back edge to an ancestor closes the cycle w .. v
                    cyc = [v]
                    x = v
                    while x != w:
                        x = parent[x]
                        cyc.append(x)
                    return tuple(reversed(cyc))
                if visited >> w & 1:
                    continue
                visited |= 1 << w
                on_path |= 1 << w
                parent[w] = v
                stack.append((w, iter(tuple(_purecore.iter_bits(masks[w] & sub)))))
                descended = True
                break
            if not descended:
                stack.pop()
                on_path &= ~(1 << v)
    return None


def validate_decomposition(g, a):
    """Verdict on whether (a, complement) is a near-bipartite decomposition.

    Violations carry an auditable witness: an edge inside ``a`` or a cycle
    avoiding it.  Independence is reported first when both fail.
    """
    _check_subset(g, a)
    amask = _as_mask(a)
    masks = g.adj_masks
    for u in _purecore.iter_bits(amask):
        hit = masks[u] & amask
        if hit:
            return IndependenceViolation(edge=(u, (hit & -hit).bit_length() - 1))
    bmask = ((1 << g.n) - 1) & ~amask
    if not _purecore.is_forest_masks(masks, g.n, bmask):
        cycle = _find_cycle_mask(masks, g.n, bmask)
        return CycleInB(cycle=cycle)
    return Valid()


def is_valid_decomposition(g, a):
    return isinstance(validate_decomposition(g, a), Valid)


def colouring_to_decomposition(c):
    """Decomposition whose A is the colour-1 class of a total colouring."""
    if not c.is_total():
        raise ValueError("colouring must assign every vertex")
    return NbDecomposition(a=c.ones(), b=c.twos())


def is_good_colouring(g, c):
    """True iff the colouring is total, its 1-class is independent and its
    2-class induces a forest."""
    if not c.is_total() or len(c.colours) != g.n:
        return False
    return is_valid_decomposition(g, c.ones())


def decomposition_to_three_colouring(g, a):
    """Proper 3-colouring implied by a valid decomposition.

    A takes colour 3 and the forest on the complement is 2-coloured with
    colours 1 and 2, colour 1 going to the smallest vertex of every tree.
    """
    verdict = validate_decomposition(g, a)
    if not isinstance(verdict, Valid):
        raise InvalidDecompositionError(f"not a valid decomposition: {verdict}")
    amask = _as_mask(a)
    bmask = ((1 << g.n) - 1) & ~amask
    colours = [0] * g.n
    for v in _purecore.iter_bits(amask):
        colours[v] = 3
    seen = 0
    for root in _purecore.iter_bits(bmask):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        colours[root] = 1
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in _purecore.iter_bits(g.adj_masks[v] & bmask):
                    if not seen >> w & 1:
                        seen |= 1 << w
                        colours[w] = 3 - colours[v]
                        nxt.append(w)
            frontier = nxt
    return tuple(colours)
