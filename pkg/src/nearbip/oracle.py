"""Exhaustive-search ground truth for minimum independent feedback vertex
sets and full decomposition enumeration.

Exponential in the vertex count, so intended for gadget-scale graphs; hard
size limits guard against accidental blowups.  Candidate sets are explored
by increasing size and lexicographically within one size, with supersets of
non-independent sets pruned, so the first hit is both minimum and the
canonical (size, lexicographic) witness.
"""

from dataclasses import dataclass

from . import _backend, _purecore
from .decomposition import decomposition_from_a
from .graph import _mask_to_set

MIN_IFVS_HARD_LIMIT = 26
ENUMERATION_HARD_LIMIT = 20


class SearchSpaceTooLargeError(ValueError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(f"{n} vertices exceed the exhaustive-search limit {limit}")


@dataclass(frozen=True)
class OracleResult:
    """Outcome of an exact search.

    ``witness`` is present iff ``minimum_size`` is; ``exhausted`` records
    whether the verdict is global (a found minimum always is, an absence is
    only when no budget truncated the search).
    """

    minimum_size: object
    witness: object
    exhausted: bool


def exact_min_ifvs(g, budget=None, hard_limit=MIN_IFVS_HARD_LIMIT):
    """Smallest independent feedback vertex set by exhaustive search.

    Comfortable up to roughly 24 vertices; beyond ``hard_limit`` it raises
    :class:`SearchSpaceTooLargeError` instead of hanging.  ``budget`` caps
    the candidate size; None searches every size.
    """
    if g.n > hard_limit:
        raise SearchSpaceTooLargeError(g.n, hard_limit)
    cap = g.n if budget is None else min(budget, g.n)
    k = _backend.mask_kernels(g.n)
    if k is not None:
        got = k.min_ifvs_masks(list(g.adj_masks), g.n, cap)
    else:
        got = _purecore.min_ifvs_masks(g.adj_masks, g.n, cap)
    if got is None:
        return OracleResult(None, None, exhausted=cap >= g.n)
    size, amask = got
    return OracleResult(size, _mask_to_set(amask), exhausted=True)


def all_nb_decompositions(g, hard_limit=ENUMERATION_HARD_LIMIT):
    """Every valid independent feedback vertex set of ``g`` in
    (size, lexicographic) order, as frozensets.

    Includes the empty set whenever the graph is already a forest.
    """
    if g.n > hard_limit:
        raise SearchSpaceTooLargeError(g.n, hard_limit)
    return [
        _mask_to_set(m) for m in _purecore.valid_amasks(g.adj_masks, g.n)
    ]


def is_near_bipartite_exact(g, hard_limit=MIN_IFVS_HARD_LIMIT):
    """Exact decision: does any independent feedback vertex set exist."""
    return exact_min_ifvs(g, hard_limit=hard_limit).minimum_size is not None


def exact_min_decomposition(g, hard_limit=MIN_IFVS_HARD_LIMIT):
    """Convenience wrapper returning an :class:`NbDecomposition` or None."""
    res = exact_min_ifvs(g, hard_limit=hard_limit)
    if res.minimum_size is None:
        return None
    return decomposition_from_a(g, res.witness)
