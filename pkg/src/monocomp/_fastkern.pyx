# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Exact same contracts and observable behaviour as ``_kernels_py`` (values,
visited counts, tie-breaks, exception arguments); the parity tests compare
the two backends call for call.  Oversized inputs fall back to the pure
implementations rather than failing.
"""

from libc.stdlib cimport malloc, free

from .errors import BudgetExceeded
from . import _kernels_py

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll(x)
    """
    int POPCNT64(unsigned long long) nogil

ctypedef unsigned long long u64

BACKEND_NAME = "c"


# ---------------------------------------------------------------------------
# minimum largest monochromatic component over canonical colorings

cdef struct McState:
    int n
    int m
    int k
    int r
    int *edges        # m*k vertex ids
    int *parent       # r*n
    int *size         # r*n
    int best
    long long visited
    long long budget
    int aborted


cdef inline int _find(int *pc, int v) noexcept:
    while pc[v] != v:
        v = pc[v]
    return v


cdef int _mc_rec(McState *st, int i, int used, int cur_max) noexcept:
    # returns 1 to abort the whole search (budget), 0 otherwise
    cdef int c, hi, j, v, rt, rv, tmp, new_max, nundo
    cdef int *pc
    cdef int *sc
    cdef int undo_rv[64]
    cdef int undo_rt[64]
    if i == st.m:
        st.visited += 1
        if st.visited > st.budget:
            st.aborted = 1
            return 1
        if cur_max < st.best:
            st.best = cur_max
        return 0
    hi = used if used < st.r else st.r - 1
    for c in range(hi + 1):
        pc = st.parent + c * st.n
        sc = st.size + c * st.n
        nundo = 0
        new_max = cur_max
        rt = _find(pc, st.edges[i * st.k])
        for j in range(1, st.k):
            v = st.edges[i * st.k + j]
            rv = _find(pc, v)
            if rv != rt:
                if sc[rt] < sc[rv]:
                    tmp = rt
                    rt = rv
                    rv = tmp
                pc[rv] = rt
                sc[rt] += sc[rv]
                undo_rv[nundo] = rv
                undo_rt[nundo] = rt
                nundo += 1
                if sc[rt] > new_max:
                    new_max = sc[rt]
        if _mc_rec(st, i + 1, used + (1 if c == used else 0), new_max):
            return 1
        for j in range(nundo - 1, -1, -1):
            sc[undo_rt[j]] -= sc[undo_rv[j]]
            pc[undo_rv[j]] = undo_rv[j]
    return 0


def mc_min_max(n, edges, r, budget):
    """See _kernels_py.mc_min_max; identical contract."""
    cdef McState st
    cdef int i, j, v
    cdef list es = list(edges)
    m = len(es)
    if n <= 0:
        return 0, 0
    if budget < 1:
        raise BudgetExceeded("mc_exact budget must allow at least one coloring", 0, None)
    if m == 0:
        return 1, 1
    k = len(es[0])
    if k > 64 or r > 1024:
        return _kernels_py.mc_min_max(n, edges, r, budget)

    st.n = n
    st.m = m
    st.k = k
    st.r = r
    st.best = n + 1
    st.visited = 0
    st.budget = budget
    st.aborted = 0
    st.edges = <int *> malloc(m * k * sizeof(int))
    st.parent = <int *> malloc(r * n * sizeof(int))
    st.size = <int *> malloc(r * n * sizeof(int))
    if st.edges == NULL or st.parent == NULL or st.size == NULL:
        free(st.edges)
        free(st.parent)
        free(st.size)
        raise MemoryError()
    try:
        for i in range(m):
            for j in range(k):
                st.edges[i * k + j] = es[i][j]
        for i in range(r):
            for v in range(n):
                st.parent[i * n + v] = v
                st.size[i * n + v] = 1
        _mc_rec(&st, 0, 0, 1)
        if st.aborted:
            raise BudgetExceeded(
                f"mc_exact visited more than {budget} colorings",
                st.visited,
                st.best if st.best <= st.n else None,
            )
        return st.best, st.visited
    finally:
        free(st.edges)
        free(st.parent)
        free(st.size)


# ---------------------------------------------------------------------------
# balanced cross-free pair search

cdef struct CpState:
    int n
    u64 *adj
    int best
    u64 bx
    u64 by
    long long nodes
    long long budget
    int aborted


cdef inline int _alloc_ub(int a, int b, int c) noexcept:
    cdef int t
    if a > b:
        t = a
        a = b
        b = t
    if c <= b - a:
        return a + c
    return (a + b + c) // 2


cdef int _cp_rec(CpState *st, u64 X, u64 Y, int nx, int ny,
                 u64 candX, u64 candY) noexcept:
    cdef int cur, ub, v, vdeg, u, d, in_x, in_y, first
    cdef u64 both, cand, w, bit
    st.nodes += 1
    if st.budget and st.nodes > st.budget:
        st.aborted = 1
        return 1
    cur = nx if nx < ny else ny
    if cur > st.best:
        st.best = cur
        st.bx = X
        st.by = Y
    both = candX & candY
    ub = _alloc_ub(
        nx + POPCNT64(candX & ~both),
        ny + POPCNT64(candY & ~both),
        POPCNT64(both),
    )
    if ub <= st.best:
        return 0
    cand = candX | candY
    v = -1
    vdeg = -1
    w = cand
    while w:
        u = POPCNT64((w & (~w + 1)) - 1)  # index of lowest set bit
        w &= w - 1
        d = POPCNT64(st.adj[u] & cand)
        if d > vdeg:
            vdeg = d
            v = u
    bit = (<u64> 1) << v
    in_x = 1 if (candX & bit) else 0
    in_y = 1 if ((candY & bit) and (X | Y) != 0) else 0
    if in_x and in_y:
        if nx <= ny:
            if _cp_rec(st, X | bit, Y, nx + 1, ny, candX & ~bit, candY & ~bit & ~st.adj[v]):
                return 1
            if _cp_rec(st, X, Y | bit, nx, ny + 1, candX & ~bit & ~st.adj[v], candY & ~bit):
                return 1
        else:
            if _cp_rec(st, X, Y | bit, nx, ny + 1, candX & ~bit & ~st.adj[v], candY & ~bit):
                return 1
            if _cp_rec(st, X | bit, Y, nx + 1, ny, candX & ~bit, candY & ~bit & ~st.adj[v]):
                return 1
    elif in_x:
        if _cp_rec(st, X | bit, Y, nx + 1, ny, candX & ~bit, candY & ~bit & ~st.adj[v]):
            return 1
    elif in_y:
        if _cp_rec(st, X, Y | bit, nx, ny + 1, candX & ~bit & ~st.adj[v], candY & ~bit):
            return 1
    return _cp_rec(st, X, Y, nx, ny, candX & ~bit, candY & ~bit)


def best_cross_pair(n, adj, node_budget=0):
    """See _kernels_py.best_cross_pair; identical contract."""
    cdef CpState st
    cdef int i
    if n <= 0:
        return 0, 0, 0
    if n > 63:
        return _kernels_py.best_cross_pair(n, adj, node_budget)
    st.n = n
    st.best = 0
    st.bx = 0
    st.by = 0
    st.nodes = 0
    st.budget = node_budget
    st.aborted = 0
    st.adj = <u64 *> malloc(n * sizeof(u64))
    if st.adj == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            st.adj[i] = adj[i]
        _cp_rec(&st, 0, 0, 0, 0, (<u64> 1 << n) - 1, (<u64> 1 << n) - 1)
        if st.aborted:
            raise BudgetExceeded(
                "cross-pair search exceeded node budget", st.nodes, st.best
            )
        return st.best, st.bx, st.by
    finally:
        free(st.adj)
