"""Pure-Python bitmask kernels.

Every routine here is the fallback twin of a compiled routine in
``_fastcore``.  Adjacency is passed as a sequence of per-vertex neighbour
bitmasks; Python integers are unbounded, so these versions work for any
vertex count, just slower.
"""

from itertools import combinations

BACKEND = "pure"


def iter_bits(mask):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_better(a, b):
    """True when set ``a`` precedes set ``b`` in (size, lexicographic) order.

    For equal sizes the set whose sorted vertex tuple is lexicographically
    smaller wins, which is the set owning the lowest differing vertex.
    """
    ca, cb = a.bit_count(), b.bit_count()
    if ca != cb:
        return ca < cb
    if a == b:
        return False
    diff = a ^ b
    return a & (diff & -diff) != 0


def diameter_masks(masks, n):
    """Exact diameter; -1 when disconnected, 0 for at most one vertex."""
    if n <= 1:
        return 0
    full = (1 << n) - 1
    worst = 0
    for s in range(n):
        seen = frontier = 1 << s
        dist = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            if frontier:
                seen |= frontier
                dist += 1
        if seen != full:
            return -1
        if dist > worst:
            worst = dist
    return worst


def is_connected_diam2(masks, n):
    """True iff the graph is connected with diameter exactly 2."""
    if n < 3:
        return False
    full = (1 << n) - 1
    some_ecc2 = False
    for u in range(n):
        a = masks[u]
        reach = a | (1 << u)
        if reach != full:
            some_ecc2 = True
            m = a
            while m:
                low = m & -m
                reach |= masks[low.bit_length() - 1]
                m ^= low
            if reach != full:
                return False
    return some_ecc2


def bipartition_mask(masks, n, ignore=0):
    """Mask of the colour-1 class of a 2-colouring, or -1 on an odd cycle.

    Vertices in ``ignore`` are treated as deleted.  Per connected component
    the smallest vertex lands in class 1, so the witness is deterministic.
    """
    univ = ((1 << n) - 1) & ~ignore
    seen = 0
    class1 = 0
    todo = univ
    while todo:
        frontier = todo & -todo
        parity = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                a = masks[low.bit_length() - 1] & univ
                if a & frontier:
                    return -1  # edge inside one layer closes an odd cycle
                nxt |= a
                m ^= low
            if parity == 0:
                class1 |= frontier
            seen |= frontier
            frontier = nxt & ~seen
            parity ^= 1
        todo = univ & ~seen
    return class1


def is_forest_masks(masks, n, sub=None):
    """True iff the subgraph induced by ``sub`` (default: all) is acyclic."""
    if sub is None:
        sub = (1 << n) - 1
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    m = sub
    while m:
        low = m & -m
        m ^= low
        v = low.bit_length() - 1
        higher = masks[v] & sub & ~((low << 1) - 1)
        while higher:
            lw = higher & -higher
            higher ^= lw
            rv, rw = find(v), find(lw.bit_length() - 1)
            if rv == rw:
                return False
            parent[rv] = rw
    return True


def decomposition_ok(masks, n, amask):
    """True iff ``amask`` is independent and its complement induces a forest."""
    m = amask
    while m:
        low = m & -m
        if masks[low.bit_length() - 1] & amask:
            return False
        m ^= low
    return is_forest_masks(masks, n, ((1 << n) - 1) & ~amask)


def first_deletion_bipartite_vertex(masks, n):
    """Smallest vertex whose removal leaves a bipartite graph, else -1."""
    for u in range(n):
        if bipartition_mask(masks, n, ignore=1 << u) >= 0:
            return u
    return -1


def _first_valid_of_size(masks, n, size):
    """Lexicographically first independent ``size``-set whose complement
    induces a forest, or -1."""
    full = (1 << n) - 1

    def rec(start, left, chosen):
        if left == 0:
            if is_forest_masks(masks, n, full & ~chosen):
                return chosen
            return -1
        for v in range(start, n - left + 1):
            if masks[v] & chosen:
                continue
            got = rec(v + 1, left - 1, chosen | (1 << v))
            if got >= 0:
                return got
        return -1

    return rec(0, size, 0)


def min_ifvs_masks(masks, n, cap):
    """Smallest independent set whose removal leaves a forest.

    Candidate sets are enumerated by increasing size and, within one size,
    lexicographically, so the first hit is the canonical witness.  Returns
    ``(size, mask)`` or None when no candidate of size <= cap works.
    """
    for size in range(min(cap, n) + 1):
        got = _first_valid_of_size(masks, n, size)
        if got >= 0:
            return size, got
    return None


def valid_amasks(masks, n):
    """All independent sets whose complement induces a forest, as masks,
    ordered by (size, lexicographic)."""
    out = []

    def rec(start, left, chosen):
        if left == 0:
            if is_forest_masks(masks, n, ((1 << n) - 1) & ~chosen):
                out.append(chosen)
            return
        for v in range(start, n - left + 1):
            if masks[v] & chosen:
                continue
            rec(v + 1, left - 1, chosen | (1 << v))

    for size in range(n + 1):
        rec(0, size, 0)
    return out


def two_neighbour_mask(masks, n, xmask):
    """Vertices outside ``xmask`` with at least two neighbours inside it."""
    a = 0
    for v in range(n):
        if xmask >> v & 1:
            continue
        if (masks[v] & xmask).bit_count() >= 2:
            a |= 1 << v
    return a


def lemma2_scan(masks, n):
    """Best (size, lex) valid 2-neighbour-set decomposition over all vertex
    sets X with 4 <= |X| <= 5, or None."""
    best = -1
    seen = set()
    for k in (4, 5):
        for xs in combinations(range(n), k):
            xmask = 0
            for v in xs:
                xmask |= 1 << v
            a = two_neighbour_mask(masks, n, xmask)
            if a in seen:
                continue
            seen.add(a)
            if decomposition_ok(masks, n, a):
                if best < 0 or mask_better(a, best):
                    best = a
    return None if best < 0 else best


def first_triangle_masks(masks, n):
    """Some triangle as an ascending vertex triple, or None."""
    for u in range(n):
        m = masks[u] & ~((1 << (u + 1)) - 1)
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            common = masks[u] & masks[v] & ~((low << 1) - 1)
            if common:
                return (u, v, (common & -common).bit_length() - 1)
    return None


def edge_pair_table(n):
    """Fixed unordered-pair ordering used by the edge-code enumeration."""
    return list(combinations(range(n), 2))


def iter_diam2_codes(n):
    """Edge codes of every labelled connected diameter-2 graph on n vertices.

    Bit i of a code switches edge ``edge_pair_table(n)[i]`` on.  Kept to
    n <= 7 because the loop is exponential in n(n-1)/2.
    """
    if n > 7:
        raise ValueError("edge-code enumeration is limited to n <= 7")
    pairs = edge_pair_table(n)
    npairs = len(pairs)
    for code in range(1 << npairs):
        adj = [0] * n
        c = code
        i = 0
        while c:
            if c & 1:
                u, v = pairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            c >>= 1
            i += 1
        if is_connected_diam2(adj, n):
            yield code


def diam2_codes(n):
    """List variant of :func:`iter_diam2_codes`."""
    return list(iter_diam2_codes(n))
