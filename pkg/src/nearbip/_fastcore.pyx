# cython: language_level=3
"""Compiled bitmask and CSR graph kernels.

Twins of the pure-Python routines in ``_purecore``: same arguments, same
results, same deterministic tie-breaking.  The bitmask entry points accept
graphs of at most 63 vertices (uint64 masks); the CSR entry points take
``array('i')`` index arrays and work for any size.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"

DEF MAXN = 63
cdef u64 SENT = <u64>0xFFFFFFFFFFFFFFFFULL


cdef inline int _pop(u64 m) nogil:
    return __builtin_popcountll(m)


cdef inline int _ctz(u64 m) nogil:
    return __builtin_ctzll(m)


cdef inline u64 _low(u64 m) nogil:
    return m & (0 - m)


cdef inline u64 _fullmask(int n) nogil:
    return ((<u64>1) << n) - 1


cdef inline bint _better(u64 a, u64 b) nogil:
    # (size, lexicographic-on-sorted-tuples) order; the set holding the
    # lowest differing vertex is the lexicographically smaller one
    cdef int ca = _pop(a), cb = _pop(b)
    cdef u64 diff
    if ca != cb:
        return ca < cb
    if a == b:
        return False
    diff = a ^ b
    return (a & _low(diff)) != 0


cdef int _load_masks(object masks, int n, u64* adj) except -1:
    cdef int i
    if n > MAXN:
        raise ValueError(f"compiled mask kernels support at most {MAXN} vertices")
    for i in range(n):
        adj[i] = masks[i]
    return 0


cdef bint _forest(u64* adj, int n, u64 sub) nogil:
    cdef int parent[MAXN + 1]
    cdef u64 m, higher, lw
    cdef int v, w, rv, rw
    for v in range(n):
        parent[v] = v
    m = sub
    while m:
        v = _ctz(m)
        m &= m - 1
        higher = adj[v] & sub
        higher >>= v + 1
        higher <<= v + 1
        while higher:
            w = _ctz(higher)
            higher &= higher - 1
            rv = v
            while parent[rv] != rv:
                parent[rv] = parent[parent[rv]]
                rv = parent[rv]
            rw = w
            while parent[rw] != rw:
                parent[rw] = parent[parent[rw]]
                rw = parent[rw]
            if rv == rw:
                return False
            parent[rv] = rw
    return True


cdef bint _decomposition_ok(u64* adj, int n, u64 amask) nogil:
    cdef u64 m = amask
    cdef int v
    while m:
        v = _ctz(m)
        if adj[v] & amask:
            return False
        m &= m - 1
    return _forest(adj, n, _fullmask(n) & ~amask)


cdef int _bipartition(u64* adj, int n, u64 ignore, u64* out) nogil:
    cdef u64 univ = _fullmask(n) & ~ignore
    cdef u64 seen = 0, class1 = 0, todo = univ
    cdef u64 frontier, nxt, m, a
    cdef int parity, v
    while todo:
        frontier = _low(todo)
        parity = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = _ctz(m)
                m &= m - 1
                a = adj[v] & univ
                if a & frontier:
                    return -1
                nxt |= a
            if parity == 0:
                class1 |= frontier
            seen |= frontier
            frontier = nxt & ~seen
            parity ^= 1
        todo = univ & ~seen
    out[0] = class1
    return 0


cdef int _diameter(u64* adj, int n) nogil:
    cdef u64 full = _fullmask(n)
    cdef u64 seen, frontier, nxt, m
    cdef int s, v, dist, worst = 0
    if n <= 1:
        return 0
    for s in range(n):
        seen = frontier = (<u64>1) << s
        dist = 0
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = _ctz(m)
                m &= m - 1
                nxt |= adj[v]
            frontier = nxt & ~seen
            if frontier:
                seen |= frontier
                dist += 1
        if seen != full:
            return -1
        if dist > worst:
            worst = dist
    return worst


cdef bint _conn_diam2(u64* adj, int n) nogil:
    cdef u64 full = _fullmask(n)
    cdef u64 a, reach, m
    cdef int u
    cdef bint some_ecc2 = False
    if n < 3:
        return False
    for u in range(n):
        a = adj[u]
        reach = a | ((<u64>1) << u)
        if reach != full:
            some_ecc2 = True
            m = a
            while m:
                reach |= adj[_ctz(m)]
                m &= m - 1
            if reach != full:
                return False
    return some_ecc2


def diameter_masks(object masks, int n):
    """Exact diameter; -1 when disconnected, 0 for at most one vertex."""
    cdef u64 adj[MAXN + 1]
    _load_masks(masks, n, adj)
    return _diameter(adj, n)


def is_connected_diam2(object masks, int n):
    cdef u64 adj[MAXN + 1]
    _load_masks(masks, n, adj)
    return _conn_diam2(adj, n)


def bipartition_mask(object masks, int n, object ignore=0):
    """Colour-1 class mask of a 2-colouring, or -1 on an odd cycle."""
    cdef u64 adj[MAXN + 1]
    cdef u64 out = 0
    _load_masks(masks, n, adj)
    if _bipartition(adj, n, <u64>ignore, &out) < 0:
        return -1
    return out


def is_forest_masks(object masks, int n, object sub=None):
    cdef u64 adj[MAXN + 1]
    cdef u64 s
    _load_masks(masks, n, adj)
    s = _fullmask(n) if sub is None else <u64>sub
    return _forest(adj, n, s)


def decomposition_ok(object masks, int n, object amask):
    cdef u64 adj[MAXN + 1]
    _load_masks(masks, n, adj)
    return _decomposition_ok(adj, n, <u64>amask)


def first_deletion_bipartite_vertex(object masks, int n):
    """Smallest vertex whose removal leaves a bipartite graph, else -1."""
    cdef u64 adj[MAXN + 1]
    cdef u64 out = 0
    cdef int u
    _load_masks(masks, n, adj)
    for u in range(n):
        if _bipartition(adj, n, (<u64>1) << u, &out) == 0:
            return u
    return -1


cdef u64 _first_valid_rec(u64* adj, int n, int start, int left, u64 chosen) nogil:
    cdef int v
    cdef u64 got
    if left == 0:
        if _forest(adj, n, _fullmask(n) & ~chosen):
            return chosen
        return SENT
    for v in range(start, n - left + 1):
        if adj[v] & chosen:
            continue
        got = _first_valid_rec(adj, n, v + 1, left - 1, chosen | ((<u64>1) << v))
        if got != SENT:
            return got
    return SENT


def min_ifvs_masks(object masks, int n, int cap):
    """(size, mask) of the smallest valid set, by increasing size and
    lexicographically within one size, or None."""
    cdef u64 adj[MAXN + 1]
    cdef u64 got
    cdef int size
    _load_masks(masks, n, adj)
    if cap > n:
        cap = n
    for size in range(cap + 1):
        got = _first_valid_rec(adj, n, 0, size, 0)
        if got != SENT:
            return size, got
    return None


cdef inline u64 _two_neighbour(u64* adj, int n, u64 xmask) nogil:
    cdef u64 a = 0
    cdef int v
    for v in range(n):
        if xmask >> v & 1:
            continue
        if _pop(adj[v] & xmask) >= 2:
            a |= (<u64>1) << v
    return a


def two_neighbour_mask(object masks, int n, object xmask):
    cdef u64 adj[MAXN + 1]
    _load_masks(masks, n, adj)
    return _two_neighbour(adj, n, <u64>xmask)


def lemma2_scan(object masks, int n):
    """Best (size, lex) valid 2-neighbour-set decomposition over all vertex
    sets X with 4 <= |X| <= 5, or None."""
    cdef u64 adj[MAXN + 1]
    cdef u64 xm3, xm4, xmask, cand
    cdef u64 best = 0
    cdef bint has_best = False
    cdef int a, b, c, d, e
    _load_masks(masks, n, adj)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                xm3 = ((<u64>1) << a) | ((<u64>1) << b) | ((<u64>1) << c)
                for d in range(c + 1, n):
                    xm4 = xm3 | ((<u64>1) << d)
                    cand = _two_neighbour(adj, n, xm4)
                    if _decomposition_ok(adj, n, cand):
                        if not has_best or _better(cand, best):
                            best = cand
                            has_best = True
                    for e in range(d + 1, n):
                        xmask = xm4 | ((<u64>1) << e)
                        cand = _two_neighbour(adj, n, xmask)
                        if _decomposition_ok(adj, n, cand):
                            if not has_best or _better(cand, best):
                                best = cand
                                has_best = True
    if not has_best:
        return None
    return best


cdef int _partition(u64* adj, int n, int u,
                    u64* s1, u64* s2, u64* t1, u64* t2, u64* z) nogil:
    cdef u64 class1 = 0
    cdef u64 rest, s, t, nu, st1, m, zz
    cdef int v
    if _bipartition(adj, n, (<u64>1) << u, &class1) < 0:
        return 1
    rest = _fullmask(n) & ~((<u64>1) << u)
    s = class1
    t = rest & ~class1
    nu = adj[u]
    s1[0] = s & nu
    s2[0] = s & ~nu
    t1[0] = t & nu
    t2[0] = t & ~nu
    m = s2[0]
    while m:
        v = _ctz(m)
        m &= m - 1
        if (t1[0] | t2[0]) & ~adj[v]:
            return 2
    m = t2[0]
    while m:
        v = _ctz(m)
        m &= m - 1
        if (s1[0] | s2[0]) & ~adj[v]:
            return 2
    st1 = s1[0] | t1[0]
    zz = 0
    m = st1
    while m:
        v = _ctz(m)
        m &= m - 1
        if not adj[v] & st1:
            zz |= (<u64>1) << v
    z[0] = zz
    return 0


cdef int _components(u64* adj, u64 sub, u64* comp_out) nogil:
    cdef u64 rem = sub, comp, frontier, nxt, m
    cdef int cnt = 0
    while rem:
        comp = _low(rem)
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                nxt |= adj[_ctz(m)]
                m &= m - 1
            nxt &= sub & ~comp
            comp |= nxt
            frontier = nxt
        comp_out[cnt] = comp
        cnt += 1
        rem &= ~comp
    return cnt


cdef inline void _consider(u64* adj, int n, u64 c1, u64 c2,
                           u64* best, bint* has_best) nogil:
    cdef u64 m = c1
    cdef int v
    while m:
        v = _ctz(m)
        if adj[v] & c1:
            return
        m &= m - 1
    if not _forest(adj, n, c2):
        return
    if not has_best[0] or _better(c1, best[0]):
        best[0] = c1
        has_best[0] = True


cdef int _derive(u64* comp_s, u64* comp_t, int ncomps, u64 pool, u64 gbit,
                 bint from_t, u64* d1, u64* d2) nogil:
    cdef u64 c1 = pool & ~gbit, c2 = gbit, side, other
    cdef int i
    for i in range(ncomps):
        if from_t:
            side = comp_t[i]
            other = comp_s[i]
        else:
            side = comp_s[i]
            other = comp_t[i]
        if side & gbit:
            if side & ~gbit:
                return -1
            c1 |= other
        else:
            c2 |= other
    d1[0] = c1
    d2[0] = c2
    return 0


def lemma1_solve(object masks, int n, int u):
    """Deletion-vertex branching; returns (status, best colour-1 mask).

    Status 0 is success; 1 means the graph minus u is not bipartite, 2 that
    the diameter-2 domination structure failed, 3 that no good colouring
    was found (all are precondition violations).
    """
    cdef u64 adj[MAXN + 1]
    cdef u64 comp_s[MAXN + 1]
    cdef u64 comp_t[MAXN + 1]
    cdef u64 units[8]
    cdef u64 s1 = 0, s2 = 0, t1 = 0, t2 = 0, z = 0
    cdef u64 ubit, zs1, zt1, s1p, t1p, stp, comp, rep, resid
    cdef u64 c1, c2, c2u, best = 0, d1 = 0, d2 = 0, pool, gbit, gpool, tm
    cdef bint has_best = False, from_t
    cdef int status, ncomps, nunits, i, combo, tsi
    cdef u64 twins[4]

    _load_masks(masks, n, adj)
    status = _partition(adj, n, u, &s1, &s2, &t1, &t2, &z)
    if status != 0:
        return status, 0

    ubit = (<u64>1) << u
    zs1 = z & s1
    zt1 = z & t1
    s1p = s1 & ~z
    t1p = t1 & ~z
    stp = s1p | t1p

    ncomps = _components(adj, stp, comp_s)
    for i in range(ncomps):
        comp = comp_s[i]
        comp_s[i] = comp & s1p
        comp_t[i] = comp & t1p

    twins[0] = s2
    twins[1] = t2
    twins[2] = zs1
    twins[3] = zt1
    nunits = 0
    for tsi in range(4):
        tm = twins[tsi]
        if not tm:
            continue
        rep = _low(tm)
        units[nunits] = rep
        nunits += 1
        resid = tm ^ rep
        if resid:
            units[nunits] = resid
            nunits += 1

    for combo in range(1 << nunits):
        c1 = 0
        c2 = 0
        for i in range(nunits):
            if combo >> i & 1:
                c1 |= units[i]
            else:
                c2 |= units[i]
        # eager discard: 1-edge or 2-cycle among the coloured vertices
        tm = c1
        while tm:
            i = _ctz(tm)
            if adj[i] & c1:
                break
            tm &= tm - 1
        if tm:
            continue
        if not _forest(adj, n, c2):
            continue

        # u coloured 1: all remaining vertices take colour 2
        _consider(adj, n, c1 | ubit, c2 | stp, &best, &has_best)

        # u coloured 2
        c2u = c2 | ubit
        if not stp:
            _consider(adj, n, c1, c2u, &best, &has_best)
            continue
        if s2 & c1:
            _consider(adj, n, c1 | s1p, c2u | t1p, &best, &has_best)
        elif t2 & c1:
            _consider(adj, n, c1 | t1p, c2u | s1p, &best, &has_best)
        elif s2 | t2:
            from_t = s2 != 0
            pool = t1p if from_t else s1p
            gpool = pool
            while True:
                if gpool:
                    gbit = _low(gpool)
                    gpool &= gpool - 1
                else:
                    gbit = 0
                if _derive(comp_s, comp_t, ncomps, pool, gbit, from_t,
                           &d1, &d2) == 0:
                    _consider(adj, n, c1 | d1, c2u | d2, &best, &has_best)
                if gbit == 0:
                    break
        else:
            d1 = 0
            d2 = 0
            for i in range(ncomps):
                if _pop(comp_s[i]) <= _pop(comp_t[i]):
                    d1 |= comp_s[i]
                    d2 |= comp_t[i]
                else:
                    d1 |= comp_t[i]
                    d2 |= comp_s[i]
            _consider(adj, n, c1 | d1, c2u | d2, &best, &has_best)

    if not has_best:
        return 3, 0
    return 0, best


def diameter_csr(object indptr_obj, object indices_obj, int n):
    """Exact diameter by all-pairs BFS over CSR adjacency; -1 when
    disconnected, 0 for at most one vertex."""
    cdef int[:] indptr = indptr_obj
    cdef int[:] indices = indices_obj
    cdef int* dist
    cdef int* queue
    cdef int s, v, w, i, head, tail, worst = 0, reached
    if n <= 1:
        return 0
    dist = <int*> malloc(n * sizeof(int))
    queue = <int*> malloc(n * sizeof(int))
    if dist == NULL or queue == NULL:
        free(dist)
        free(queue)
        raise MemoryError()
    try:
        for s in range(n):
            for v in range(n):
                dist[v] = -1
            dist[s] = 0
            queue[0] = s
            head = 0
            tail = 1
            reached = 1
            while head < tail:
                v = queue[head]
                head += 1
                for i in range(indptr[v], indptr[v + 1]):
                    w = indices[i]
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        if dist[w] > worst:
                            worst = dist[w]
                        queue[tail] = w
                        tail += 1
                        reached += 1
            if reached != n:
                return -1
        return worst
    finally:
        free(dist)
        free(queue)


def first_triangle_csr(object indptr_obj, object indices_obj, int n):
    """Lexicographically first triangle (u, v, w) with u < v < w, or None.
    Neighbour lists must be ascending."""
    cdef int[:] indptr = indptr_obj
    cdef int[:] indices = indices_obj
    cdef int u, v, i, j, iu, a, b
    for u in range(n):
        for iu in range(indptr[u], indptr[u + 1]):
            v = indices[iu]
            if v <= u:
                continue
            i = indptr[u]
            j = indptr[v]
            while i < indptr[u + 1] and j < indptr[v + 1]:
                a = indices[i]
                b = indices[j]
                if a < b:
                    i += 1
                elif b < a:
                    j += 1
                else:
                    if a > v:
                        return u, v, a
                    i += 1
                    j += 1
    return None


def diam2_codes(int n):
    """Edge codes of every labelled connected diameter-2 graph on n
    vertices, over the fixed unordered-pair ordering (n <= 7)."""
    cdef int pu[21]
    cdef int pv[21]
    cdef u64 adj[7]
    cdef int npairs = 0, u, v, i
    cdef unsigned int code, c
    cdef list out = []
    if n > 7:
        raise ValueError("edge-code enumeration is limited to n <= 7")
    for u in range(n):
        for v in range(u + 1, n):
            pu[npairs] = u
            pv[npairs] = v
            npairs += 1
    for code in range(<unsigned int>1 << npairs):
        for i in range(n):
            adj[i] = 0
        c = code
        i = 0
        while c:
            if c & 1:
                adj[pu[i]] |= (<u64>1) << pv[i]
                adj[pv[i]] |= (<u64>1) << pu[i]
            c >>= 1
            i += 1
        if _conn_diam2(adj, n):
            out.append(code)
    return out
