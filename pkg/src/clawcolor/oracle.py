"""Exact ground-truth computations.

Everything here is deterministic in the input graph. These functions are
used both by the test-suite as independent references and by algorithms that
legitimately need a clique number or a matching.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable

from . import kernels
from .errors import CapacityError
from .graph import Coloring, Graph, complement, iter_bits, to_mask

Matching = frozenset  # of (u, v) pairs with u < v

FRACTIONAL_CAP = 18


# ------------------------------------------------------------------ cliques

def max_clique(g: Graph, within: int | None = None) -> int:
    """A maximum clique of ``g`` (restricted to ``within``) as a bitset."""
    cand = g.full if within is None else to_mask(within) & g.full
    return kernels.max_clique(g.adj, cand)


def clique_number(g: Graph) -> tuple[int, frozenset[int]]:
    q = max_clique(g)
    return q.bit_count(), frozenset(iter_bits(q))


def omega(g: Graph, within: int | None = None) -> int:
    return max_clique(g, within).bit_count()


def omega_at(g: Graph, v: int, within: int | None = None) -> int:
    """Size of the largest clique containing ``v`` inside ``within``."""
    cand = g.adj[v] if within is None else g.adj[v] & to_mask(within)
    return 1 + kernels.max_clique(g.adj, cand).bit_count()


def independence_number(g: Graph) -> int:
    return omega(complement(g))


def stable_number_within(g: Graph, within: int) -> int:
    return omega(complement(g), within)


# ------------------------------------------------------------------ coloring

def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    colors = kernels.chromatic(g.adj)
    c = Coloring(tuple(colors))
    return c.k, c


def maximal_cliques(g: Graph, within: int | None = None) -> list[int]:
    """All maximal cliques of ``g[within]`` as bitsets (pivoting Bron-Kerbosch)."""
    out: list[int] = []
    adj = g.adj

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        pivot = -1
        best = -1
        for u in iter_bits(PX):
            c = (P & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in iter_bits(P & ~adj[pivot]):
            bit = 1 << v
            bk(R | bit, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    P = g.full if within is None else to_mask(within)
    if P:
        bk(0, P, 0)
    return sorted(out)


def maximal_stable_sets(g: Graph) -> list[int]:
    return maximal_cliques(complement(g))


def _simplex_max(rows: list[int], n: int) -> Fraction:
    """max sum(y) s.t. sum_{v in row} y_v <= 1, y >= 0, in exact arithmetic.

    Dictionary simplex with Bland's rule; the origin is feasible.
    """
    m = len(rows)
    nonbasic = list(range(n))
    basic = list(range(n, n + m))
    # x_basic[i] = b[i] + sum_j A[i][j] * x_nonbasic[j]
    A = [[Fraction(-1) if r >> j & 1 else Fraction(0) for j in range(n)] for r in rows]
    b = [Fraction(1)] * m
    c = [Fraction(1)] * n
    z = Fraction(0)
    while True:
        enter = None
        for j in sorted(range(n), key=lambda j: nonbasic[j]):
            if c[j] > 0:
                enter = j
                break
        if enter is None:
            return z
        leave = None
        best = None
        for i in range(m):
            a = A[i][enter]
            if a < 0:
                ratio = b[i] / -a
                if best is None or ratio < best or (ratio == best and basic[i] < basic[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise ArithmeticError("unbounded stable-set LP")
        # solve row `leave` for the entering variable
        a = A[leave][enter]
        row = A[leave]
        new_row = [-x / a for x in row]
        new_row[enter] = 1 / a
        new_b = -b[leave] / a
        for i in range(m):
            if i == leave:
                continue
            f = A[i][enter]
            if f:
                Ai = A[i]
                for j in range(n):
                    if j == enter:
                        Ai[j] = f * new_row[j]
                    elif new_row[j]:
                        Ai[j] += f * new_row[j]
                b[i] += f * new_b
        f = c[enter]
        for j in range(n):
            if j == enter:
                c[j] = f * new_row[j]
            elif new_row[j]:
                c[j] += f * new_row[j]
        z += f * new_b
        A[leave] = new_row
        b[leave] = new_b
        basic[leave], nonbasic[enter] = nonbasic[enter], basic[leave]


def fractional_chromatic(g: Graph, cap: int = FRACTIONAL_CAP) -> Fraction:
    """Exact fractional chromatic number.

    Solves the dual of the stable-set covering LP (maximum fractional clique)
    over all maximal stable sets; strong duality gives the same optimum.
    """
    if g.n > cap:
        raise CapacityError(f"fractional_chromatic: n={g.n} exceeds cap {cap}")
    if g.n == 0:
        return Fraction(0)
    return _simplex_max(maximal_stable_sets(g), g.n)


# ------------------------------------------------------------------ matching

def max_matching(g: Graph, exhaustive: bool = False) -> frozenset[tuple[int, int]]:
    """Maximum-cardinality matching (Edmonds' blossom algorithm).

    ``exhaustive=True`` switches to brute-force search; it exists so tests can
    cross-validate the blossom implementation.
    """
    if exhaustive:
        return _brute_matching(g)
    n = g.n
    nbrs = [list(iter_bits(a)) for a in g.adj]
    match = [-1] * n
    # greedy warm start, lowest-index partner first
    for v in range(n):
        if match[v] < 0:
            for u in nbrs[v]:
                if match[u] < 0:
                    match[v], match[u] = u, v
                    break

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark(v, cur, to, blossom)
                    mark(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] >= 0:
            continue
        end, parent = find_path(root)
        v = end
        while v >= 0:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return frozenset((v, match[v]) for v in range(n) if 0 <= v < match[v])


def _brute_matching(g: Graph) -> frozenset[tuple[int, int]]:
    best: list[tuple[int, int]] = []
    edges = g.edges()

    def rec(i: int, used: int, cur: list[tuple[int, int]]) -> None:
        nonlocal best
        if len(cur) + (len(edges) - i) <= len(best) or len(cur) + (g.n - used.bit_count()) // 2 <= len(best):
            if len(cur) > len(best):
                best = cur[:]
            return
        if i == len(edges):
            if len(cur) > len(best):
                best = cur[:]
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            cur.append((u, v))
            rec(i + 1, used | 1 << u | 1 << v, cur)
            cur.pop()
        rec(i + 1, used, cur)

    rec(0, 0, [])
    return frozenset(best)


def max_bipartite_matching(left: Iterable[int], right: Iterable[int],
                           edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Hopcroft-Karp. Edges are (l, r) pairs; the result uses the same orientation."""
    left = sorted(set(left))
    right = sorted(set(right))
    lset, rset = set(left), set(right)
    adj: dict[int, list[int]] = {u: [] for u in left}
    for u, v in edges:
        if u in lset and v in rset:
            adj[u].append(v)
        elif v in lset and u in rset:
            adj[v].append(u)
        else:
            raise ValueError(f"edge ({u}, {v}) does not respect the bipartition")
    for u in adj:
        adj[u] = sorted(set(adj[u]))
    mate_l = {u: None for u in left}
    mate_r = {v: None for v in right}
    INF = float("inf")

    def bfs() -> dict:
        dist = {}
        q = deque()
        for u in left:
            if mate_l[u] is None:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = mate_r[v]
                if w is None:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return dist if found else {}

    def dfs(u: int, dist: dict) -> bool:
        for v in adj[u]:
            w = mate_r[v]
            if w is None or (dist[w] == dist[u] + 1 and dfs(w, dist)):
                mate_l[u] = v
                mate_r[v] = u
                return True
        dist[u] = INF
        return False

    while True:
        dist = bfs()
        if not dist:
            break
        for u in left:
            if mate_l[u] is None:
                dfs(u, dist)
    return frozenset((u, v) for u, v in mate_l.items() if v is not None)


def konig_cover(left: Iterable[int], right: Iterable[int], edges: Iterable[tuple[int, int]],
                matching: frozenset[tuple[int, int]]) -> tuple[set[int], set[int]]:
    """Minimum vertex cover from a maximum matching (Koenig's construction)."""
    left = sorted(set(left))
    right = sorted(set(right))
    adj: dict[int, list[int]] = {u: [] for u in left}
    for u, v in edges:
        if u in adj:
            adj[u].append(v)
        else:
            adj[v].append(u)
    mate_l = {u: v for u, v in matching}
    mate_r = {v: u for u, v in matching}
    # alternating reachability from unmatched left vertices
    seen_l = {u for u in left if u not in mate_l}
    seen_r: set[int] = set()
    q = deque(sorted(seen_l))
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in seen_r and mate_l.get(u) != v:
                seen_r.add(v)
                w = mate_r.get(v)
                if w is not None and w not in seen_l:
                    seen_l.add(w)
                    q.append(w)
    return set(left) - seen_l, seen_r


# ------------------------------------------------------------------ bounds

def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def gamma(g: Graph) -> int:
    """ceil((Delta + 1 + omega) / 2); 0 for the empty graph."""
    if g.n == 0:
        return 0
    return _ceil_half(g.max_degree() + 1 + omega(g))


def local_gamma_values(g: Graph) -> list[int]:
    return [_ceil_half(g.degree(v) + 1 + omega_at(g, v)) for v in range(g.n)]


def gamma_local(g: Graph) -> int:
    return max(local_gamma_values(g), default=0)
