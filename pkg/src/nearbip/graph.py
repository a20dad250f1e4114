"""Immutable simple-graph core.

Vertices are dense 0-based integers.  Adjacency is stored as per-vertex
neighbour bitmasks (the representation every algorithm here works on) and
exposed on demand as frozensets, an edge set, and CSR arrays for the
compiled kernels.  Vertex sets throughout the package are plain frozensets.
"""

import math
from array import array

from . import _backend, _purecore

VertexSet = frozenset

Infinite = math.inf


class GraphError(ValueError):
    """Base class for graph construction errors."""


class SelfLoopError(GraphError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class OutOfRangeError(GraphError):
    def __init__(self, vertex, n):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} outside [0, {n})")


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable once built.

    Construct through :func:`from_edge_list` (validated) or directly from
    adjacency masks when the caller guarantees symmetry.  Instances are
    safe to share across threads; nothing mutates after construction.
    """

    __slots__ = ("n", "adj_masks", "_edges", "_adj", "_csr")

    def __init__(self, n, adj_masks):
        if len(adj_masks) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj_masks)}")
        self.n = n
        self.adj_masks = tuple(adj_masks)
        self._edges = None
        self._adj = None
        self._csr = None

    @property
    def edges(self):
        """Frozenset of (u, v) pairs with u < v."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                m = self.adj_masks[u] >> (u + 1) << (u + 1)
                for v in _purecore.iter_bits(m):
                    out.append((u, v))
            self._edges = frozenset(out)
        return self._edges

    @property
    def num_edges(self):
        return sum(m.bit_count() for m in self.adj_masks) // 2

    def neighbours(self, v):
        if self._adj is None:
            self._adj = tuple(
                frozenset(_purecore.iter_bits(m)) for m in self.adj_masks
            )
        return self._adj[v]

    def degree(self, v):
        return self.adj_masks[v].bit_count()

    def has_edge(self, u, v):
        return self.adj_masks[u] >> v & 1 == 1

    def vertices(self):
        return range(self.n)

    def csr(self):
        """(indptr, indices) int32 arrays for the compiled CSR kernels."""
        if self._csr is None:
            indptr = array("i", [0] * (self.n + 1))
            indices = array("i")
            for v in range(self.n):
                for w in _purecore.iter_bits(self.adj_masks[v]):
                    indices.append(w)
                indptr[v + 1] = len(indices)
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj_masks == other.adj_masks
        )

    def __hash__(self):
        return hash((self.n, self.adj_masks))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def from_edge_list(n, pairs):
    """Validated construction from a vertex count and vertex pairs.

    Duplicate pairs (in either orientation) collapse to one edge.  Raises
    :class:`SelfLoopError` on a pair (u, u) and :class:`OutOfRangeError`
    when an endpoint falls outside [0, n).
    """
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    masks = [0] * n
    for u, v in pairs:
        if u == v:
            raise SelfLoopError(u)
        for w in (u, v):
            if not 0 <= w < n:
                raise OutOfRangeError(w, n)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, masks)


def _as_mask(s):
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


def _mask_to_set(mask):
    return frozenset(_purecore.iter_bits(mask))


def _check_subset(g, s):
    for v in s:
        if not 0 <= v < g.n:
            raise OutOfRangeError(v, g.n)


def diameter(g):
    """Largest distance between any two vertices.

    Returns ``Infinite`` (math.inf) when the graph is disconnected; graphs
    with at most one vertex have diameter 0.
    """
    k = _backend.mask_kernels(g.n)
    if k is not None:
        d = k.diameter_masks(list(g.adj_masks), g.n)
    else:
        k = _backend.csr_kernels()
        if k is not None and g.n > _backend.MASK_KERNEL_MAX_N:
            indptr, indices = g.csr()
            d = k.diameter_csr(indptr, indices, g.n)
        else:
            d = _purecore.diameter_masks(g.adj_masks, g.n)
    return Infinite if d < 0 else d


def is_bipartite(g):
    """A bipartition (class1, class2) witness, or None on an odd cycle.

    The witness is deterministic: the smallest vertex of every connected
    component sits in the first class, so edgeless graphs report all
    vertices on the first side.
    """
    k = _backend.mask_kernels(g.n)
    if k is not None:
        c1 = k.bipartition_mask(list(g.adj_masks), g.n, 0)
    else:
        c1 = _purecore.bipartition_mask(g.adj_masks, g.n)
    if c1 < 0:
        return None
    return _mask_to_set(c1), _mask_to_set(((1 << g.n) - 1) & ~c1)


def is_forest(g):
    """True iff the graph is acyclic."""
    k = _backend.mask_kernels(g.n)
    if k is not None:
        return k.is_forest_masks(list(g.adj_masks), g.n, None)
    return _purecore.is_forest_masks(g.adj_masks, g.n)


def two_neighbour_set(g, x):
    """Vertices outside ``x`` with at least two neighbours inside ``x``."""
    _check_subset(g, x)
    xmask = _as_mask(x)
    return _mask_to_set(_purecore.two_neighbour_mask(g.adj_masks, g.n, xmask))


def induced_subgraph(g, s):
    """Subgraph induced by ``s`` plus the relabelling map onto [0, |s|).

    Vertices are relabelled in ascending order, so the map is the unique
    order-preserving bijection.
    """
    _check_subset(g, s)
    keep = sorted(set(s))
    relabel = {v: i for i, v in enumerate(keep)}
    masks = [0] * len(keep)
    for i, v in enumerate(keep):
        for w in _purecore.iter_bits(g.adj_masks[v]):
            if w in relabel:
                masks[i] |= 1 << relabel[w]
    return Graph(len(keep), masks), relabel
