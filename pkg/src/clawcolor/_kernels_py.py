"""Pure-Python hot kernels.

Adjacency is a sequence of int bitsets. Every function here has a twin in
``_kernels.pyx`` that must return identical results; the compiled twin only
handles graphs with at most 64 vertices.
"""
from __future__ import annotations


def _color_sort(adj, P):
    # greedy colour classes in index order; returns vertices and running class bounds
    order = []
    bounds = []
    k = 0
    Q = P
    while Q:
        k += 1
        avail = Q
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            Q &= ~low
            order.append(v)
            bounds.append(k)
    return order, bounds


def max_clique(adj, cand):
    """Maximum clique within bitset ``cand``, as a bitset."""
    best = [0, 0]

    def expand(R, size, P):
        order, bounds = _color_sort(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            bit = 1 << v
            NP = P & adj[v]
            if NP:
                expand(R | bit, size + 1, NP)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = R | bit
            P &= ~bit

    if cand:
        expand(0, 0, cand)
    return best[1]


def _dsatur_greedy(adj, n):
    colors = [-1] * n
    nb = [0] * n
    deg = [a.bit_count() for a in adj]
    for _ in range(n):
        best = -1
        bkey = None
        for v in range(n):
            if colors[v] < 0:
                key = (nb[v].bit_count(), deg[v])
                if bkey is None or key > bkey:
                    best, bkey = v, key
        c = 0
        while nb[best] >> c & 1:
            c += 1
        colors[best] = c
        a = adj[best]
        while a:
            low = a & -a
            nb[low.bit_length() - 1] |= 1 << c
            a ^= low
    return colors


def chromatic(adj):
    """Optimal coloring as a list of color indices (exact branch and bound)."""
    n = len(adj)
    if n == 0:
        return []
    full = (1 << n) - 1
    clique = max_clique(adj, full)
    lb = clique.bit_count()
    best_colors = _dsatur_greedy(adj, n)
    best_k = max(best_colors) + 1
    if best_k == lb:
        return best_colors

    colors = [-1] * n
    nb = [0] * n
    deg = [a.bit_count() for a in adj]

    def assign(v, c):
        changed = []
        a = adj[v]
        bit = 1 << c
        while a:
            low = a & -a
            u = low.bit_length() - 1
            if not nb[u] & bit:
                nb[u] |= bit
                changed.append(u)
            a ^= low
        colors[v] = c
        return changed

    def unassign(v, c, changed):
        bit = ~(1 << c)
        for u in changed:
            nb[u] &= bit
        colors[v] = -1

    c = 0
    uncolored = n
    a = clique
    while a:
        low = a & -a
        assign(low.bit_length() - 1, c)
        c += 1
        uncolored -= 1
        a ^= low
    state = [best_k, best_colors]

    def search(used, left):
        if left == 0:
            state[0] = used
            state[1] = colors[:]
            return
        best = -1
        bkey = None
        for v in range(n):
            if colors[v] < 0:
                key = (nb[v].bit_count(), deg[v])
                if bkey is None or key > bkey:
                    best, bkey = v, key
        v = best
        limit = min(used + 1, state[0] - 1)
        for c in range(limit):
            if nb[v] >> c & 1:
                continue
            nu = used if c < used else used + 1
            if nu >= state[0]:
                continue
            changed = assign(v, c)
            search(nu, left - 1)
            unassign(v, c, changed)
            if state[0] == lb:
                return

    search(lb, uncolored)
    return state[1]


def list_color(adj, verts, allowed, order=None):
    """Color ``verts`` so each vertex takes a color from its ``allowed`` bitset.

    ``allowed`` is indexed by vertex. Returns a dict vertex -> color or None.
    With ``order`` given, vertices are colored in that fixed order; otherwise
    the vertex with fewest remaining options (lowest index on ties) goes next.
    """
    vs = []
    a = verts
    while a:
        low = a & -a
        vs.append(low.bit_length() - 1)
        a ^= low
    if order is not None:
        vs = list(order)
    avail = {v: allowed[v] for v in vs}
    colors = {}

    def pick():
        best = -1
        bc = 1 << 30
        for v in vs:
            if v not in colors:
                c = avail[v].bit_count()
                if c < bc:
                    best, bc = v, c
        return best

    def search(left, pos):
        if left == 0:
            return True
        if order is not None:
            v = vs[pos]
        else:
            v = pick()
        opts = avail[v]
        while opts:
            low = opts & -opts
            c = low.bit_length() - 1
            opts ^= low
            changed = []
            ok = True
            nbrs = adj[v] & verts
            while nbrs:
                lo = nbrs & -nbrs
                u = lo.bit_length() - 1
                nbrs ^= lo
                if u not in colors and avail[u] & low:
                    avail[u] &= ~low
                    changed.append(u)
                    if not avail[u]:
                        ok = False
                        break
            if ok:
                colors[v] = c
                if search(left - 1, pos + 1):
                    return True
                del colors[v]
            for u in changed:
                avail[u] |= low
        return False

    if any(not avail[v] for v in vs):
        return None
    if search(len(vs), 0):
        return colors
    return None


def find_claw(adj):
    """First claw as (center, a, b, c) with a < b < c, or None."""
    n = len(adj)
    for v in range(n):
        N = adj[v]
        A = N
        while A:
            lowa = A & -A
            a = lowa.bit_length() - 1
            A ^= lowa
            B = N & ~adj[a] & ~((lowa << 1) - 1)
            while B:
                lowb = B & -B
                b = lowb.bit_length() - 1
                B ^= lowb
                C = N & ~adj[a] & ~adj[b] & ~((lowb << 1) - 1)
                if C:
                    return (v, a, b, (C & -C).bit_length() - 1)
    return None


def good_triad(adj, start=0):
    """First good triad (a, b, c), a < b < c, in lexicographic order, or None.

    Outside vertex v is justified by two neighbours in T, or by some t in T
    whose closed neighbourhood contains that of v (twin or trump).
    """
    n = len(adj)
    closed = [adj[v] | (1 << v) for v in range(n)]
    for a in range(start, n):
        lowa = 1 << a
        B = ~adj[a] & ~((lowa << 1) - 1) & ((1 << n) - 1)
        while B:
            lowb = B & -B
            b = lowb.bit_length() - 1
            B ^= lowb
            C = ~adj[a] & ~adj[b] & ~((lowb << 1) - 1) & ((1 << n) - 1)
            while C:
                lowc = C & -C
                c = lowc.bit_length() - 1
                C ^= lowc
                T = lowa | lowb | lowc
                ok = True
                for v in range(n):
                    if T >> v & 1:
                        continue
                    h = adj[v] & T
                    if h & (h - 1):
                        continue
                    cv = closed[v]
                    if h and cv & ~closed[h.bit_length() - 1] == 0:
                        continue
                    ok = False
                    break
                if ok:
                    return (a, b, c)
    return None
