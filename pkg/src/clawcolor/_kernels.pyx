# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels for graphs with at most 64 vertices.

Line-for-line ports of ``_kernels_py``; results must be identical.
"""
from libc.stdint cimport uint64_t


cdef extern from *:
    int popc "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil


cdef enum:
    MAXN = 64


cdef struct Adj:
    int n
    uint64_t a[MAXN]


cdef int _load(Adj* g, adj) except -1:
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError("compiled kernels handle at most 64 vertices")
    g.n = n
    for i in range(n):
        g.a[i] = <uint64_t>adj[i]
    return 0


# ---------------------------------------------------------------- max clique

cdef struct MC:
    int best_size
    uint64_t best_mask


cdef void _expand(Adj* g, MC* s, uint64_t R, int size, uint64_t P) nogil:
    cdef int order[MAXN]
    cdef int bounds[MAXN]
    cdef int cnt = 0
    cdef int k = 0
    cdef int i, v
    cdef uint64_t Q = P
    cdef uint64_t avail, low, NP, bit
    while Q:
        k += 1
        avail = Q
        while avail:
            low = avail & (~avail + 1)
            v = ctz(avail)
            avail &= ~g.a[v] & ~low
            Q &= ~low
            order[cnt] = v
            bounds[cnt] = k
            cnt += 1
    i = cnt - 1
    while i >= 0:
        if size + bounds[i] <= s.best_size:
            return
        v = order[i]
        bit = (<uint64_t>1) << v
        NP = P & g.a[v]
        if NP:
            _expand(g, s, R | bit, size + 1, NP)
        elif size + 1 > s.best_size:
            s.best_size = size + 1
            s.best_mask = R | bit
        P &= ~bit
        i -= 1


cdef uint64_t _max_clique(Adj* g, uint64_t cand) nogil:
    cdef MC s
    s.best_size = 0
    s.best_mask = 0
    if cand:
        _expand(g, &s, 0, 0, cand)
    return s.best_mask


def max_clique(adj, cand):
    cdef Adj g
    _load(&g, adj)
    return int(_max_clique(&g, <uint64_t>cand))


# ---------------------------------------------------------------- chromatic

cdef struct CS:
    int n
    int lb
    int best_k
    int colors[MAXN]
    int best_colors[MAXN]
    uint64_t nb[MAXN]
    int deg[MAXN]


cdef void _dsatur_greedy(Adj* g, CS* s) nogil:
    cdef int n = g.n
    cdef int step, v, best, bsat, bdeg, sat, c
    cdef uint64_t a, low
    cdef uint64_t nb[MAXN]
    for v in range(n):
        s.best_colors[v] = -1
        nb[v] = 0
    for step in range(n):
        best = -1
        bsat = -1
        bdeg = -1
        for v in range(n):
            if s.best_colors[v] < 0:
                sat = popc(nb[v])
                if sat > bsat or (sat == bsat and s.deg[v] > bdeg):
                    best = v
                    bsat = sat
                    bdeg = s.deg[v]
        c = 0
        while (nb[best] >> c) & 1:
            c += 1
        s.best_colors[best] = c
        a = g.a[best]
        while a:
            low = a & (~a + 1)
            nb[ctz(a)] |= (<uint64_t>1) << c
            a ^= low


cdef int _assign(Adj* g, CS* s, int v, int c, int* changed) nogil:
    cdef int cnt = 0
    cdef uint64_t a = g.a[v]
    cdef uint64_t bit = (<uint64_t>1) << c
    cdef uint64_t low
    cdef int u
    while a:
        low = a & (~a + 1)
        u = ctz(a)
        if not (s.nb[u] & bit):
            s.nb[u] |= bit
            changed[cnt] = u
            cnt += 1
        a ^= low
    s.colors[v] = c
    return cnt


cdef void _unassign(CS* s, int v, int c, int* changed, int cnt) nogil:
    cdef uint64_t mask = ~((<uint64_t>1) << c)
    cdef int i
    for i in range(cnt):
        s.nb[changed[i]] &= mask
    s.colors[v] = -1


cdef void _search(Adj* g, CS* s, int used, int left) nogil:
    cdef int n = g.n
    cdef int v, best, bsat, bdeg, sat, c, limit, nu, cnt, i
    cdef int changed[MAXN]
    if left == 0:
        s.best_k = used
        for i in range(n):
            s.best_colors[i] = s.colors[i]
        return
    best = -1
    bsat = -1
    bdeg = -1
    for v in range(n):
        if s.colors[v] < 0:
            sat = popc(s.nb[v])
            if sat > bsat or (sat == bsat and s.deg[v] > bdeg):
                best = v
                bsat = sat
                bdeg = s.deg[v]
    v = best
    limit = used + 1
    if s.best_k - 1 < limit:
        limit = s.best_k - 1
    for c in range(limit):
        if (s.nb[v] >> c) & 1:
            continue
        nu = used if c < used else used + 1
        if nu >= s.best_k:
            continue
        cnt = _assign(g, s, v, c, changed)
        _search(g, s, nu, left - 1)
        _unassign(s, v, c, changed, cnt)
        if s.best_k == s.lb:
            return


def chromatic(adj):
    cdef Adj g
    cdef CS s
    cdef int n, v, c, uncolored, mx
    cdef uint64_t clique, a, low
    cdef int changed[MAXN]
    _load(&g, adj)
    n = g.n
    if n == 0:
        return []
    s.n = n
    for v in range(n):
        s.deg[v] = popc(g.a[v])
        s.colors[v] = -1
        s.nb[v] = 0
    clique = _max_clique(&g, ((<uint64_t>1) << n) - 1 if n < 64 else ~(<uint64_t>0))
    s.lb = popc(clique)
    _dsatur_greedy(&g, &s)
    mx = 0
    for v in range(n):
        if s.best_colors[v] > mx:
            mx = s.best_colors[v]
    s.best_k = mx + 1
    if s.best_k != s.lb:
        c = 0
        uncolored = n
        a = clique
        while a:
            low = a & (~a + 1)
            _assign(&g, &s, ctz(a), c, changed)
            c += 1
            uncolored -= 1
            a ^= low
        _search(&g, &s, s.lb, uncolored)
    return [s.best_colors[v] for v in range(n)]


# ---------------------------------------------------------------- list coloring

cdef struct LS:
    int nv
    int fixed_order
    int vs[MAXN]
    uint64_t verts
    uint64_t avail[MAXN]
    int color[MAXN]


cdef int _pick(LS* s) nogil:
    cdef int best = -1
    cdef int bc = 1 << 30
    cdef int i, v, c
    for i in range(s.nv):
        v = s.vs[i]
        if s.color[v] < 0:
            c = popc(s.avail[v])
            if c < bc:
                best = v
                bc = c
    return best


cdef bint _lsearch(Adj* g, LS* s, int left, int pos) nogil:
    cdef int v, c, u, cnt, i
    cdef uint64_t opts, low, nbrs, lo
    cdef bint ok
    cdef int changed[MAXN]
    if left == 0:
        return True
    if s.fixed_order:
        v = s.vs[pos]
    else:
        v = _pick(s)
    opts = s.avail[v]
    while opts:
        low = opts & (~opts + 1)
        c = ctz(opts)
        opts ^= low
        cnt = 0
        ok = True
        nbrs = g.a[v] & s.verts
        while nbrs:
            lo = nbrs & (~nbrs + 1)
            u = ctz(nbrs)
            nbrs ^= lo
            if s.color[u] < 0 and (s.avail[u] & low):
                s.avail[u] &= ~low
                changed[cnt] = u
                cnt += 1
                if not s.avail[u]:
                    ok = False
                    break
        if ok:
            s.color[v] = c
            if _lsearch(g, s, left - 1, pos + 1):
                return True
            s.color[v] = -1
        for i in range(cnt):
            s.avail[changed[i]] |= low
    return False


def list_color(adj, verts, allowed, order=None):
    cdef Adj g
    cdef LS s
    cdef int i, v
    cdef uint64_t a, low
    _load(&g, adj)
    s.verts = <uint64_t>verts
    s.nv = 0
    for v in range(g.n):
        s.color[v] = -1
    if order is None:
        s.fixed_order = 0
        a = s.verts
        while a:
            low = a & (~a + 1)
            s.vs[s.nv] = ctz(a)
            s.nv += 1
            a ^= low
    else:
        s.fixed_order = 1
        for v in order:
            s.vs[s.nv] = v
            s.nv += 1
    for i in range(s.nv):
        v = s.vs[i]
        s.avail[v] = <uint64_t>allowed[v]
        if not s.avail[v]:
            return None
    if _lsearch(&g, &s, s.nv, 0):
        return {s.vs[i]: s.color[s.vs[i]] for i in range(s.nv)}
    return None


# ---------------------------------------------------------------- claws / triads

def find_claw(adj):
    cdef Adj g
    cdef int n, v, a, b
    cdef uint64_t N, A, B, C, lowa, lowb
    _load(&g, adj)
    n = g.n
    for v in range(n):
        N = g.a[v]
        A = N
        while A:
            lowa = A & (~A + 1)
            a = ctz(A)
            A ^= lowa
            B = N & ~g.a[a] & ~((lowa << 1) - 1)
            while B:
                lowb = B & (~B + 1)
                b = ctz(B)
                B ^= lowb
                C = N & ~g.a[a] & ~g.a[b] & ~((lowb << 1) - 1)
                if C:
                    return (v, a, b, ctz(C))
    return None


cdef bint _is_good(Adj* g, uint64_t* closed, uint64_t T) nogil:
    cdef int v
    cdef uint64_t h
    for v in range(g.n):
        if (T >> v) & 1:
            continue
        h = g.a[v] & T
        if h & (h - 1):
            continue
        if h and (closed[v] & ~closed[ctz(h)]) == 0:
            continue
        return False
    return True


def good_triad(adj, start=0):
    cdef Adj g
    cdef int n, a, b, c
    cdef uint64_t full, lowa, lowb, lowc, B, C, T
    cdef uint64_t closed[MAXN]
    _load(&g, adj)
    n = g.n
    full = ((<uint64_t>1) << n) - 1 if n < 64 else ~(<uint64_t>0)
    for a in range(n):
        closed[a] = g.a[a] | ((<uint64_t>1) << a)
    for a in range(start, n):
        lowa = (<uint64_t>1) << a
        B = ~g.a[a] & ~((lowa << 1) - 1) & full
        while B:
            lowb = B & (~B + 1)
            b = ctz(B)
            B ^= lowb
            C = ~g.a[a] & ~g.a[b] & ~((lowb << 1) - 1) & full
            while C:
                lowc = C & (~C + 1)
                c = ctz(C)
                C ^= lowc
                T = lowa | lowb | lowc
                if _is_good(&g, closed, T):
                    return (a, b, c)
    return None
