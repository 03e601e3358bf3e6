"""Structure detection: claws, twins, trumping, good triads and homogeneous pairs of cliques."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .errors import ContractError
from .graph import Graph, iter_bits, lowest, to_mask

TWO_NEIGHBORS = "two-neighbors"
TWIN = "twin"
TRUMPED = "trumped"

NONLINEAR = "nonlinear"
LINEAR_NONSKELETAL = "linear-nonskeletal"
SKELETAL = "skeletal"


@dataclass(frozen=True)
class ClawWitness:
    center: int
    leaves: tuple[int, int, int]

    def verify(self, g: Graph) -> bool:
        a, b, c = self.leaves
        return (all(g.has_edge(self.center, x) for x in self.leaves)
                and not g.has_edge(a, b) and not g.has_edge(a, c) and not g.has_edge(b, c))


@dataclass(frozen=True)
class TriadCertificate:
    """A good triad plus, for each outside vertex, why it is satisfied.

    ``justification[v]`` is ``(TWO_NEIGHBORS, None)``, ``(TWIN, t)`` or
    ``(TRUMPED, t)`` with ``t`` in the triad.
    """

    triad: tuple[int, int, int]
    justification: dict = field(hash=False, compare=True)

    def verify(self, g: Graph) -> bool:
        T = to_mask(self.triad)
        if len(set(self.triad)) != 3 or not g.is_stable(T):
            return False
        if set(self.justification) != set(iter_bits(g.full & ~T)):
            return False
        for v, (kind, t) in self.justification.items():
            if kind == TWO_NEIGHBORS:
                ok = (g.adj[v] & T).bit_count() >= 2
            elif kind == TWIN:
                ok = t in self.triad and g.closed(v) == g.closed(t)
            elif kind == TRUMPED:
                ok = t in self.triad and trumps(g, t, v)
            else:
                ok = False
            if not ok:
                return False
        return True


@dataclass(frozen=True)
class CliquePair:
    A: frozenset[int]
    B: frozenset[int]
    kind: str

    @property
    def a_mask(self) -> int:
        return to_mask(self.A)

    @property
    def b_mask(self) -> int:
        return to_mask(self.B)


# ------------------------------------------------------------------ claws, twins

def find_claw(g: Graph) -> ClawWitness | None:
    hit = kernels.find_claw(g.adj)
    if hit is None:
        return None
    return ClawWitness(hit[0], (hit[1], hit[2], hit[3]))


def is_claw_free(g: Graph) -> bool:
    return kernels.find_claw(g.adj) is None


def is_quasi_line(g: Graph) -> bool:
    """Every neighbourhood is the union of two cliques."""
    adj = g.adj
    for v in range(g.n):
        N = adj[v]
        side: dict[int, int] = {}
        for start in iter_bits(N):
            if start in side:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                x = stack.pop()
                for y in iter_bits(N & ~adj[x] & ~(1 << x)):
                    if y not in side:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return False
    return True


def twin_class_masks(g: Graph) -> list[int]:
    """Twin class of each vertex, as a bitset."""
    groups: dict[int, int] = {}
    for v in range(g.n):
        key = g.closed(v)
        groups[key] = groups.get(key, 0) | (1 << v)
    return [groups[g.closed(v)] for v in range(g.n)]


def twin_classes(g: Graph) -> list[frozenset[int]]:
    seen = set()
    out = []
    for m in twin_class_masks(g):
        if m not in seen:
            seen.add(m)
            out.append(frozenset(iter_bits(m)))
    return out


def trumps(g: Graph, u: int, v: int) -> bool:
    """True iff the closed neighbourhood of ``v`` is a proper subset of that of ``u``."""
    if u == v:
        raise ContractError("trumps needs two distinct vertices")
    cu, cv = g.closed(u), g.closed(v)
    return cv != cu and cv & ~cu == 0


# ------------------------------------------------------------------ good triads

def certify_triad(g: Graph, triad: tuple[int, int, int]) -> TriadCertificate | None:
    """Build a certificate for ``triad`` or return None if it is not good."""
    T = to_mask(triad)
    if not g.is_stable(T):
        return None
    just = {}
    for v in iter_bits(g.full & ~T):
        hits = g.adj[v] & T
        if hits.bit_count() >= 2:
            just[v] = (TWO_NEIGHBORS, None)
            continue
        if hits:
            t = lowest(hits)
            if g.closed(v) == g.closed(t):
                just[v] = (TWIN, t)
                continue
            if g.closed(v) & ~g.closed(t) == 0:
                just[v] = (TRUMPED, t)
                continue
        return None
    return TriadCertificate(tuple(sorted(triad)), just)


def find_good_triad(g: Graph) -> TriadCertificate | None:
    """First good triad in lexicographic order, with its certificate."""
    hit = kernels.good_triad(g.adj)
    if hit is None:
        return None
    return certify_triad(g, hit)


def find_triad(g: Graph) -> tuple[int, int, int] | None:
    """Any stable set of size three (lexicographically first)."""
    adj = g.adj
    for a in range(g.n):
        for b in iter_bits(~adj[a] & g.full & ~((2 << a) - 1)):
            C = ~adj[a] & ~adj[b] & g.full & ~((2 << b) - 1)
            if C:
                return (a, b, lowest(C))
    return None


# ------------------------------------------------------------------ homogeneous pairs

def is_homogeneous_pair(g: Graph, A, B) -> bool:
    """(A, B) is a homogeneous pair of cliques."""
    A, B = to_mask(A), to_mask(B)
    if not A or not B or A & B or (A | B).bit_count() < 3:
        return False
    if not g.is_clique(A) or not g.is_clique(B):
        return False
    for v in iter_bits(g.full & ~(A | B)):
        sa = g.adj[v] & A
        sb = g.adj[v] & B
        if (sa and sa != A) or (sb and sb != B):
            return False
    return True


def _has_cross_c4(g: Graph, A: int, B: int) -> bool:
    nb = [g.adj[a] & B for a in iter_bits(A)]
    for x, y in combinations(nb, 2):
        if x & ~y and y & ~x:
            return True
    return False


def omega_set(g: Graph, A, B) -> int:
    """Vertices of A or B incident to an A-B edge (the clique Omega of a skeletal pair)."""
    A, B = to_mask(A), to_mask(B)
    out = 0
    for a in iter_bits(A):
        if g.adj[a] & B:
            out |= 1 << a
    for b in iter_bits(B):
        if g.adj[b] & A:
            out |= 1 << b
    return out


def _cross_edges(g: Graph, A: int, B: int) -> list[tuple[int, int]]:
    return [(a, b) for a in iter_bits(A) for b in iter_bits(g.adj[a] & B)]


def _pair_is_skeletal(g: Graph, A: int, B: int) -> bool:
    """No single A-B edge can be removed without lowering omega(G[A u B])."""
    U = A | B
    members = list(iter_bits(U))
    index = {v: i for i, v in enumerate(members)}
    local = [0] * len(members)
    for v in members:
        for u in iter_bits(g.adj[v] & U):
            local[index[v]] |= 1 << index[u]
    full = (1 << len(members)) - 1
    w = kernels.max_clique(local, full).bit_count()
    for a, b in _cross_edges(g, A, B):
        ia, ib = index[a], index[b]
        local[ia] &= ~(1 << ib)
        local[ib] &= ~(1 << ia)
        w2 = kernels.max_clique(local, full).bit_count()
        local[ia] |= 1 << ib
        local[ib] |= 1 << ia
        if w2 == w:
            return False
    return True


def classify_pair(g: Graph, A, B) -> str:
    A, B = to_mask(A), to_mask(B)
    if not is_homogeneous_pair(g, A, B):
        raise ContractError("classify_pair: input is not a homogeneous pair of cliques")
    if _has_cross_c4(g, A, B):
        return NONLINEAR
    return SKELETAL if _pair_is_skeletal(g, A, B) else LINEAR_NONSKELETAL


def _close_pair(g: Graph, A: int, B: int) -> tuple[int, int] | None:
    """Smallest homogeneous pair of cliques containing the seed, if any.

    A vertex outside A u B that sees part of A cannot join A (A is a clique), so
    it is forced into B; symmetrically for B. Closure is therefore unique.
    """
    adj = g.adj
    if A & B or not g.is_clique(A) or not g.is_clique(B):
        return None
    changed = True
    while changed:
        changed = False
        for v in iter_bits(g.full & ~(A | B)):
            sa = adj[v] & A
            sb = adj[v] & B
            to_b = bool(sa) and sa != A
            to_a = bool(sb) and sb != B
            if to_a and to_b:
                return None
            if to_b:
                if adj[v] & B != B:
                    return None
                B |= 1 << v
                changed = True
            elif to_a:
                if adj[v] & A != A:
                    return None
                A |= 1 << v
                changed = True
    return A, B


def find_nonlinear_hpoc(g: Graph) -> CliquePair | None:
    """Seed from each induced C4 a1-a2-b2-b1 and grow the forced closure."""
    adj = g.adj
    tried = set()
    for a1 in range(g.n):
        for a2 in iter_bits(adj[a1] & ~((2 << a1) - 1)):
            for b1 in iter_bits(adj[a1] & ~adj[a2] & ~(1 << a2)):
                for b2 in iter_bits(adj[a2] & ~adj[a1] & ~(1 << a1) & adj[b1]):
                    seed = ((1 << a1) | (1 << a2), (1 << b1) | (1 << b2))
                    if seed in tried:
                        continue
                    tried.add(seed)
                    closed = _close_pair(g, *seed)
                    if closed is not None:
                        A, B = closed
                        return CliquePair(frozenset(iter_bits(A)), frozenset(iter_bits(B)), NONLINEAR)
    return None


def find_nonskeletal_linear_hpoc(g: Graph, check: bool = False) -> CliquePair | None:
    """Twin-class path search for a nonskeletal linear pair.

    Looks for a1 - a2 - b1 with N[a1] strictly inside N[a2], where the vertices
    seeing a2 but not a1 are exactly the twin class of b1, and the twin class of
    a1 is at least as large as that of b1. Returns (T(a1) u T(a2), T(b1)).
    With ``check`` the no-nonlinear-pair precondition is verified first.
    """
    if check and find_nonlinear_hpoc(g) is not None:
        raise ContractError("find_nonskeletal_linear_hpoc: graph has a nonlinear homogeneous pair")
    twins = twin_class_masks(g)
    for a1 in range(g.n):
        c1 = g.closed(a1)
        for a2 in iter_bits(g.adj[a1] & ~twins[a1]):
            c2 = g.closed(a2)
            if c1 & ~c2:
                continue
            D = c2 & ~c1
            b1 = lowest(D)
            if D != twins[b1] or twins[a1].bit_count() < twins[b1].bit_count():
                continue
            A = twins[a1] | twins[a2]
            B = twins[b1]
            return CliquePair(frozenset(iter_bits(A)), frozenset(iter_bits(B)), LINEAR_NONSKELETAL)
    return None


def all_cliques(g: Graph, limit: int = 12) -> list[int]:
    """Every nonempty clique (exhaustive; small graphs only)."""
    if g.n > limit:
        raise ContractError(f"all_cliques is exhaustive; n={g.n} > {limit}")
    out = []

    def grow(R: int, P: int) -> None:
        for v in iter_bits(P):
            R2 = R | (1 << v)
            out.append(R2)
            grow(R2, P & g.adj[v] & ~((2 << v) - 1))

    grow(0, g.full)
    return out


def all_homogeneous_pairs(g: Graph, limit: int = 12) -> list[CliquePair]:
    """Every homogeneous pair of cliques, each unordered pair once (exhaustive)."""
    cl = all_cliques(g, limit)
    out = []
    for i, A in enumerate(cl):
        for B in cl[i + 1:]:
            if A & B or (A | B).bit_count() < 3:
                continue
            if is_homogeneous_pair(g, A, B):
                out.append(CliquePair(frozenset(iter_bits(A)), frozenset(iter_bits(B)), classify_pair(g, A, B)))
    return out
