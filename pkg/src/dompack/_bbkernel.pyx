# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python branch-and-bound kernels.

Same preprocessing, same branch order, same tie-breaking as _bb_py: the two
backends must return identical (size, mask, nodes) triples.  Masks are
limited to 64 bits; callers route larger instances to the pure kernel.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(u64) nogil
    int __builtin_ctzll(u64) nogil


cdef inline int _pop(u64 x) nogil:
    return __builtin_popcountll(x)


# ---------------------------------------------------------------------------
# Minimum hitting set
# ---------------------------------------------------------------------------

cdef struct HS:
    u64 *scratch        # (n_levels) x m requirement masks
    int *owners         # parallel owner ids
    int m
    int best_size
    u64 best_mask
    long long nodes


cdef int _disjoint_lb(u64 *unsat, int cnt) nogil:
    cdef u64 used = 0
    cdef int c = 0, i
    for i in range(cnt):
        if not (unsat[i] & used):
            c += 1
            used |= unsat[i]
    return c


cdef void _hs_dfs(HS *st, int level, int cnt, u64 chosen, int count) nogil:
    cdef u64 *unsat = st.scratch + level * st.m
    cdef int *own = st.owners + level * st.m
    cdef u64 *nxt = st.scratch + (level + 1) * st.m
    cdef int *nxt_own = st.owners + (level + 1) * st.m
    cdef int i, bi, v, nc
    cdef int bp, bo, p
    cdef u64 r, bit

    st.nodes += 1
    if cnt == 0:
        if count < st.best_size:
            st.best_size = count
            st.best_mask = chosen
        return
    if count + _disjoint_lb(unsat, cnt) >= st.best_size:
        return
    bi = 0
    bp = _pop(unsat[0])
    bo = own[0]
    for i in range(1, cnt):
        p = _pop(unsat[i])
        if p < bp or (p == bp and own[i] < bo):
            bp = p
            bo = own[i]
            bi = i
    r = unsat[bi]
    while r:
        v = __builtin_ctzll(r)
        bit = (<u64>1) << v
        r &= r - 1
        nc = 0
        for i in range(cnt):
            if not (unsat[i] & bit):
                nxt[nc] = unsat[i]
                nxt_own[nc] = own[i]
                nc += 1
        _hs_dfs(st, level + 1, nc, chosen | bit, count + 1)


def min_hitting_set(reqs, owners):
    """Minimum-size vertex set meeting every requirement mask (64-bit)."""
    cdef int i, m, size
    cdef u64 chosen
    for r in reqs:
        if r == 0:
            return (-1, 0, 0)
    if not reqs:
        return (0, 0, 1)

    order = sorted(range(len(reqs)), key=lambda i: (int(reqs[i]).bit_count(), owners[i]))
    kept_r = []
    kept_o = []
    for i in order:
        r = reqs[i]
        dominated = False
        for s in kept_r:
            if (s & r) == s:
                dominated = True
                break
        if not dominated:
            kept_r.append(r)
            kept_o.append(owners[i])

    # Greedy incumbent: repeatedly take the vertex hitting most requirements.
    unsat = list(kept_r)
    g_mask = 0
    g_size = 0
    while unsat:
        universe = 0
        for r in unsat:
            universe |= r
        best_v = -1
        best_c = -1
        v = 0
        u = universe
        while u:
            if u & 1:
                c = sum(1 for r in unsat if (r >> v) & 1)
                if c > best_c:
                    best_c = c
                    best_v = v
            u >>= 1
            v += 1
        g_mask |= 1 << best_v
        g_size += 1
        unsat = [r for r in unsat if not (r >> best_v) & 1]

    m = len(kept_r)
    cdef HS st
    st.m = m
    st.best_size = g_size
    st.best_mask = <u64>g_mask
    st.nodes = 0
    st.scratch = <u64 *>malloc(sizeof(u64) * m * (m + 2))
    st.owners = <int *>malloc(sizeof(int) * m * (m + 2))
    if st.scratch == NULL or st.owners == NULL:
        if st.scratch != NULL:
            free(st.scratch)
        if st.owners != NULL:
            free(st.owners)
        raise MemoryError()
    for i in range(m):
        st.scratch[i] = <u64>kept_r[i]
        st.owners[i] = kept_o[i]
    _hs_dfs(&st, 0, m, 0, 0)
    size = st.best_size
    chosen = st.best_mask
    nodes = st.nodes
    free(st.scratch)
    free(st.owners)
    return (size, int(chosen), int(nodes))


# ---------------------------------------------------------------------------
# Maximum independent set
# ---------------------------------------------------------------------------

cdef struct MIS:
    u64 *adj
    int n
    int best_size
    u64 best_mask
    long long nodes


cdef int _clique_cover(MIS *st, u64 cand) nogil:
    cdef u64 cliques[64]
    cdef int nc = 0, i, v
    cdef u64 u = cand, bit
    cdef bint placed
    while u:
        v = __builtin_ctzll(u)
        bit = (<u64>1) << v
        u &= u - 1
        placed = False
        for i in range(nc):
            if (cliques[i] & st.adj[v]) == cliques[i]:
                cliques[i] |= bit
                placed = True
                break
        if not placed:
            cliques[nc] = bit
            nc += 1
    return nc


cdef void _mis_dfs(MIS *st, u64 cand, u64 chosen, int count) nogil:
    cdef int bv, bd, d, v
    cdef u64 u, bit

    st.nodes += 1
    if cand == 0:
        if count > st.best_size:
            st.best_size = count
            st.best_mask = chosen
        return
    if count + _clique_cover(st, cand) <= st.best_size:
        return
    bv = -1
    bd = -1
    u = cand
    while u:
        v = __builtin_ctzll(u)
        u &= u - 1
        d = _pop(st.adj[v] & cand)
        if d > bd:
            bd = d
            bv = v
    bit = (<u64>1) << bv
    _mis_dfs(st, cand & ~(st.adj[bv] | bit), chosen | bit, count + 1)
    _mis_dfs(st, cand & ~bit, chosen, count)


def max_independent_set(adj, cand):
    """Maximum independent set within the candidate mask (64-bit)."""
    cdef int n = len(adj)
    cdef int i
    cdef MIS st

    # Greedy incumbent ordered by (degree within candidates, id).
    verts = []
    u = cand
    v = 0
    while u:
        if u & 1:
            verts.append(v)
        u >>= 1
        v += 1
    verts.sort(key=lambda x: (int(adj[x] & cand).bit_count(), x))
    g_mask = 0
    g_size = 0
    for v in verts:
        if not (adj[v] & g_mask):
            g_mask |= 1 << v
            g_size += 1

    st.n = n
    st.best_size = g_size
    st.best_mask = <u64>g_mask
    st.nodes = 0
    st.adj = <u64 *>malloc(sizeof(u64) * max(n, 1))
    if st.adj == NULL:
        raise MemoryError()
    for i in range(n):
        st.adj[i] = <u64>adj[i]
    _mis_dfs(&st, <u64>cand, 0, 0)
    size = st.best_size
    mask = st.best_mask
    nodes = st.nodes
    free(st.adj)
    return (size, int(mask), int(nodes))
