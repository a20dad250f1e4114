"""Minimum independent feedback vertex sets of diameter-2 graphs in
polynomial time.

The solver splits on whether some vertex u exists whose removal leaves a
bipartite graph.

Case 1 (such a u exists).  The rest of the graph splits into independent
sets S1, S2, T1, T2 where S1 u S2 and T1 u T2 are the bipartition classes
of the graph minus u, the "1" parts are u's neighbours and the "2" parts
are not.  Because every vertex pair must be within distance 2, every S2
vertex is adjacent to all of T1 u T2 and every T2 vertex to all of
S1 u S2.  With Z the isolated vertices of the subgraph induced by S1 u T1,
the four sets S2, T2, Z n S1, Z n T1 are twin-sets (members share one
neighbourhood), and in any optimal good 2-colouring all but at most one
member of a twin-set share a colour.  The search therefore branches over a
uniform colour per twin-set plus an individual colour for one
representative each (at most 2^8 branches), then completes each branch:
with u coloured 1 all remaining vertices take colour 2; with u coloured 2
the remaining bipartite components must be coloured class-against-class,
and the few consistent completions are forced, guessed among at most n+1
candidates, or resolved by taking the smaller class of every component.

Case 2 (no such u).  If the graph is near-bipartite at all, some vertex
set X with 4 <= |X| <= 5 satisfies A_X = A for a minimum independent
feedback vertex set A, where A_X collects the vertices outside X with two
or more neighbours in X.  Scanning all O(n^5) such X and keeping the best
valid A_X is therefore exact.

Everything is a pure function over immutable graphs; the compiled kernels
are used for graphs of at most 64 vertices when available.
"""

from dataclasses import dataclass

from . import _backend, _purecore
from .decomposition import decomposition_from_a
from .graph import _mask_to_set, diameter

_TWIN_SET_NAMES = ("S2", "T2", "Z&S1", "Z&T1")


class DiameterNotTwoError(ValueError):
    def __init__(self, actual):
        self.actual = actual
        super().__init__(f"graph has diameter {actual}, expected exactly 2")


class StructureViolationError(ValueError):
    """A structural property the diameter-2 case analysis relies on failed,
    which means the operation's precondition did not hold."""

    def __init__(self, property_id, witness):
        self.property_id = property_id
        self.witness = witness
        super().__init__(f"structure property {property_id} violated at {witness}")


class Lemma2PreconditionError(ValueError):
    """The bounded-set scan was invoked although deleting some vertex makes
    the graph bipartite; its optimality argument needs that case excluded."""

    def __init__(self, u):
        self.u = u
        super().__init__(
            f"removing vertex {u} leaves a bipartite graph; "
            "use the deletion-vertex branching instead"
        )


@dataclass(frozen=True)
class UPartition:
    """The structured view around a deletion vertex u.

    s1 u s2 and t1 u t2 are the bipartition classes of the graph minus u;
    s1, t1 are u's neighbours, s2, t2 are not; z holds the vertices
    isolated in the subgraph induced by s1 u t1.
    """

    u: int
    s1: frozenset
    s2: frozenset
    t1: frozenset
    t2: frozenset
    z: frozenset


@dataclass(frozen=True)
class Branch:
    """A surviving partial colouring (bitmasks) plus its provenance."""

    colour1: int
    colour2: int
    tag: str


def find_deletion_bipartite_vertex(g):
    """Smallest vertex whose removal leaves the graph bipartite, or None."""
    k = _backend.mask_kernels(g.n)
    if k is not None:
        u = k.first_deletion_bipartite_vertex(list(g.adj_masks), g.n)
    else:
        u = _purecore.first_deletion_bipartite_vertex(g.adj_masks, g.n)
    return None if u < 0 else u


def _partition_masks(masks, n, u):
    """Masks (s1, s2, t1, t2, z) around u, verifying the structure the
    diameter-2 argument guarantees."""
    class1 = _purecore.bipartition_mask(masks, n, ignore=1 << u)
    if class1 < 0:
        raise StructureViolationError("(i)", u)
    rest = ((1 << n) - 1) & ~(1 << u)
    s, t = class1, rest & ~class1
    nu = masks[u]
    s1, s2 = s & nu, s & ~nu
    t1, t2 = t & nu, t & ~nu
    # at diameter 2 every S2 vertex must dominate T1 u T2 and symmetrically
    for x in _purecore.iter_bits(s2):
        missing = (t1 | t2) & ~masks[x]
        if missing:
            raise StructureViolationError(
                "(iv)", (x, (missing & -missing).bit_length() - 1)
            )
    for y in _purecore.iter_bits(t2):
        missing = (s1 | s2) & ~masks[y]
        if missing:
            raise StructureViolationError(
                "(iv)", (y, (missing & -missing).bit_length() - 1)
            )
    st1 = s1 | t1
    z = 0
    for v in _purecore.iter_bits(st1):
        if not masks[v] & st1:
            z |= 1 << v
    return s1, s2, t1, t2, z


def partition_around_u(g, u):
    """Partition the graph around a deletion vertex u.

    Requires a connected diameter-2 graph whose removal of u is bipartite;
    raises :class:`StructureViolationError` otherwise.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} outside [0, {g.n})")
    s1, s2, t1, t2, z = _partition_masks(g.adj_masks, g.n, u)
    return UPartition(
        u=u,
        s1=_mask_to_set(s1),
        s2=_mask_to_set(s2),
        t1=_mask_to_set(t1),
        t2=_mask_to_set(t2),
        z=_mask_to_set(z),
    )


def _components_of(masks, sub):
    """Connected components of the subgraph induced by ``sub`` as masks."""
    comps = []
    rem = sub
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            for v in _purecore.iter_bits(frontier):
                nxt |= masks[v]
            nxt &= sub & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def _lemma1_solve_pure(masks, n, u, stats=None):
    """Branching search for the deletion-vertex case; returns the best
    colour-1 mask.  ``stats`` (a dict) receives branch counters."""
    s1, s2, t1, t2, z = _partition_masks(masks, n, u)
    ubit = 1 << u
    zs1, zt1 = z & s1, z & t1
    s1p, t1p = s1 & ~z, t1 & ~z
    stp = s1p | t1p

    # bipartition classes per component of the subgraph on S1' u T1';
    # both sides are non-empty since no vertex there is isolated
    comps = [(c & s1p, c & t1p) for c in _components_of(masks, stp)]

    # one representative per non-empty twin-set, coloured individually;
    # the residue of each twin-set is coloured uniformly
    units = []
    for name, m in zip(_TWIN_SET_NAMES, (s2, t2, zs1, zt1)):
        if not m:
            continue
        rep = m & -m
        units.append((name + " rep", rep))
        if m ^ rep:
            units.append((name + " rest", m ^ rep))

    best = -1
    branches = 0
    enqueued = [] if stats is not None else None

    def consider(c1, c2):
        nonlocal best
        for v in _purecore.iter_bits(c1):
            if masks[v] & c1:
                return
        if not _purecore.is_forest_masks(masks, n, c2):
            return
        if best < 0 or _purecore.mask_better(c1, best):
            best = c1

    for combo in range(1 << len(units)):
        c1 = c2 = 0
        for i, (_, m) in enumerate(units):
            if combo >> i & 1:
                c1 |= m
            else:
                c2 |= m
        # discard on a 1-edge or 2-cycle among the coloured vertices
        if any(masks[v] & c1 for v in _purecore.iter_bits(c1)):
            continue
        if not _purecore.is_forest_masks(masks, n, c2):
            continue
        if enqueued is not None:
            tags = [
                name + ("=1" if combo >> i & 1 else "=2")
                for i, (name, _) in enumerate(units)
            ]
            enqueued.append(
                Branch(colour1=c1, colour2=c2, tag=",".join(tags) or "empty")
            )

        # u takes colour 1: all its uncoloured neighbours take colour 2
        branches += 1
        consider(c1 | ubit, c2 | stp)

        # u takes colour 2
        c2u = c2 | ubit
        if not stp:
            branches += 1
            consider(c1, c2u)
            continue
        if s2 & c1:
            # a colour-1 vertex of S2 dominates T1', forcing it to colour 2
            # and hence S1' to colour 1 component by component
            branches += 1
            consider(c1 | s1p, c2u | t1p)
        elif t2 & c1:
            branches += 1
            consider(c1 | t1p, c2u | s1p)
        elif s2 | t2:
            # all of S2 u T2 wears colour 2; the side it dominates keeps at
            # most one colour-2 vertex or a 2-cycle closes through u
            pool = t1p if s2 else s1p
            from_t = bool(s2)
            for gbit in [1 << v for v in _purecore.iter_bits(pool)] + [0]:
                branches += 1
                derived = _derive_from_components(comps, pool, gbit, from_t)
                if derived is None:
                    continue
                d1, d2 = derived
                consider(c1 | d1, c2u | d2)
        else:
            # no S2 or T2: per component the smaller class coloured 1 is
            # the cheapest class-against-class choice
            branches += 1
            d1 = d2 = 0
            for cs, ct in comps:
                small, big = (cs, ct) if cs.bit_count() <= ct.bit_count() else (ct, cs)
                d1 |= small
                d2 |= big
            consider(c1 | d1, c2u | d2)

    if stats is not None:
        stats["branches"] = branches
        stats["enqueued"] = enqueued
        stats["units"] = len(units)
    if best < 0:
        raise StructureViolationError("good-colouring existence", u)
    return best


def _derive_from_components(comps, pool, gbit, from_t):
    """Complete a colouring of ``pool`` (all colour 1 except ``gbit``) to
    the opposite sides class-against-class, or None when inconsistent."""
    c1 = pool & ~gbit
    c2 = gbit
    for cs, ct in comps:
        side, other = (ct, cs) if from_t else (cs, ct)
        if side & gbit:
            if side & ~gbit:
                return None  # one class with both colours cannot be completed
            c1 |= other
        else:
            c2 |= other
    return c1, c2


def lemma1_min_ifvs(g, u, stats=None):
    """Minimum independent feedback vertex set when removing ``u`` leaves a
    bipartite graph (and the graph has diameter 2).

    Pass a dict as ``stats`` to collect branch counters (pure path only).
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} outside [0, {g.n})")
    k = _backend.mask_kernels(g.n)
    if k is not None and stats is None:
        status, amask = k.lemma1_solve(list(g.adj_masks), g.n, u)
        if status != 0:
            raise StructureViolationError(_FAST_VIOLATIONS.get(status, status), u)
    else:
        amask = _lemma1_solve_pure(g.adj_masks, g.n, u, stats)
    return decomposition_from_a(g, _mask_to_set(amask))


_FAST_VIOLATIONS = {1: "(i)", 2: "(iv)", 3: "good-colouring existence"}


def _lemma2_mask(g):
    k = _backend.mask_kernels(g.n)
    if k is not None:
        return k.lemma2_scan(list(g.adj_masks), g.n)
    return _purecore.lemma2_scan(g.adj_masks, g.n)


def lemma2_min_ifvs(g):
    """Minimum independent feedback vertex set via the bounded-set scan.

    Only exact when no single-vertex deletion leaves a bipartite graph; the
    guard raises :class:`Lemma2PreconditionError` otherwise.  Returns None
    when no vertex set X of size 4 or 5 yields a valid decomposition, which
    for diameter-2 graphs means the graph is not near-bipartite.
    """
    u = find_deletion_bipartite_vertex(g)
    if u is not None:
        raise Lemma2PreconditionError(u)
    amask = _lemma2_mask(g)
    if amask is None:
        return None
    return decomposition_from_a(g, _mask_to_set(amask))


def solve_min_ifvs_diam2(g):
    """Minimum independent feedback vertex set of a diameter-2 graph.

    Returns None when the graph is not near-bipartite and raises
    :class:`DiameterNotTwoError` for any other diameter.
    """
    d = diameter(g)
    if d != 2:
        raise DiameterNotTwoError(d)
    u = find_deletion_bipartite_vertex(g)
    if u is not None:
        return lemma1_min_ifvs(g, u)
    amask = _lemma2_mask(g)
    if amask is None:
        return None
    return decomposition_from_a(g, _mask_to_set(amask))


def yang_yuan_condition(g):
    """Which of the two diameter-2 characterisation conditions holds: 1 for
    a deletion vertex, 2 for a bounded-set decomposition, None for neither."""
    d = diameter(g)
    if d != 2:
        raise DiameterNotTwoError(d)
    if find_deletion_bipartite_vertex(g) is not None:
        return 1
    if _lemma2_mask(g) is not None:
        return 2
    return None


def yang_yuan_near_bipartite(g):
    """Characterisation test: a diameter-2 graph is near-bipartite iff some
    vertex deletion leaves it bipartite or some 4- or 5-set X makes
    (A_X, complement) a valid decomposition."""
    return yang_yuan_condition(g) is not None
