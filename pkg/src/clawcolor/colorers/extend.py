"""Extending an l-coloring of G1 across an annotated generalized 2-join.

Each extension follows the case analysis for its strip kind: normalize the
overlap k between the colors on X1 and Y1, peel color classes of G1 together
with small stable sets of the strip while that lowers the join invariant, and
finish with a terminal completion (clique cutset, disjoint color pools,
skeletal reduction plus interval completion, or an auxiliary perfect graph).
Any step that cannot be carried out falls through to an exact list-coloring
completion of the remaining strip, and every such event is written to the
optional ``trail``.
"""
from __future__ import annotations

from itertools import permutations

from .. import kernels, oracle
from ..detect import SKELETAL, classify_pair, is_homogeneous_pair, omega_set
from ..errors import ContractError, ExtensionError, InvariantViolation
from ..graph import Coloring, Graph, complement, induced, iter_bits, lowest, to_mask
from ..reduce import lift_coloring, skeletal_reduce_pair
from .base import color_alpha2
from .joins import (ANTIHAT, CANONICAL_INTERVAL, GEAR, PSEUDO_LINE, STRANGE, JoinAnnotation,
                    compute_join_context, join_context_masks, pseudo_line_endpoints)


def _popcount(x: int) -> int:
    return x.bit_count()


class _State:
    """Partial coloring of g while the strip is being peeled."""

    def __init__(self, g: Graph, j: JoinAnnotation, colors: list[int], l: int, trail: list):
        self.g = g
        self.j = j
        self.colors = colors
        self.alive = g.full
        self.palette = (1 << l) - 1
        self.strip = to_mask(j.V2)
        self.X1, self.Y1 = to_mask(j.X1), to_mask(j.Y1)
        self.X2, self.Y2 = to_mask(j.X2), to_mask(j.Y2)
        self.labels = {k: to_mask(v) for k, v in j.labels.items()}
        self.trail = trail

    # ---------------------------------------------------------------- views
    def lab(self, name: str) -> int:
        return self.labels.get(name, 0) & self.alive

    def live(self, m: int) -> int:
        return m & self.alive

    @property
    def Z2(self) -> int:
        return self.strip & self.alive & ~self.X2 & ~self.Y2

    def colors_on(self, m: int) -> int:
        out = 0
        for v in iter_bits(m & self.alive):
            if self.colors[v] >= 0:
                out |= 1 << self.colors[v]
        return out

    def cx(self) -> int:
        return self.colors_on(self.X1)

    def cy(self) -> int:
        return self.colors_on(self.Y1)

    def note(self, msg: str) -> None:
        self.trail.append(msg)

    def neighbour_colors(self, v: int) -> int:
        out = 0
        for u in iter_bits(self.g.adj[v]):
            if self.colors[u] >= 0:
                out |= 1 << self.colors[u]
        return out

    # ---------------------------------------------------------------- moves
    def peel(self, color: int, S2: int) -> None:
        """Give ``color`` to the stable set S2 and remove that whole color class."""
        if not self.palette >> color & 1:
            raise InvariantViolation(f"peel: color {color} is not available")
        if not self.g.is_stable(S2) or S2 & ~(self.strip & self.alive):
            raise InvariantViolation("peel: strip set is not a stable set of live strip vertices")
        for v in iter_bits(S2):
            if self.colors[v] >= 0 or self.neighbour_colors(v) >> color & 1:
                raise InvariantViolation(f"peel: vertex {v} cannot take color {color}")
        for v in iter_bits(S2):
            self.colors[v] = color
        cls = to_mask(v for v in iter_bits(self.alive) if self.colors[v] == color)
        self.alive &= ~cls
        self.palette &= ~(1 << color)
        self.note(f"peel color {color} with {sorted(iter_bits(S2))}")

    def _recolor_pass(self, candidates: int, want) -> bool:
        for v in iter_bits(candidates & self.alive):
            options = want(v)
            if options:
                old = self.colors[v]
                self.colors[v] = lowest(options)
                self.note(f"recolor {v}: {old} -> {self.colors[v]}")
                return True
        return False

    def k_min(self) -> None:
        """Recolor single vertices of X1 xor Y1 until no move lowers the overlap."""
        sym = (self.X1 ^ self.Y1) & self.V1_live()

        def want(v):
            both = self.cx() & self.cy()
            if not both >> self.colors[v] & 1:
                return 0
            return self.palette & ~(self.cx() | self.cy() | self.neighbour_colors(v))

        while self._recolor_pass(sym, want):
            pass

    def k_max(self) -> None:
        """Recolor single vertices so colors private to one side move onto the other's colors."""
        def want_x(v):
            if self.cy() >> self.colors[v] & 1:
                return 0
            return self.palette & self.cy() & ~self.cx() & ~self.neighbour_colors(v)

        def want_y(v):
            if self.cx() >> self.colors[v] & 1:
                return 0
            return self.palette & self.cx() & ~self.cy() & ~self.neighbour_colors(v)

        while (self._recolor_pass(self.X1 & ~self.Y1 & self.V1_live(), want_x)
               or self._recolor_pass(self.Y1 & ~self.X1 & self.V1_live(), want_y)):
            pass

    def V1_live(self) -> int:
        return self.alive & ~self.strip

    def drop_surplus(self, threshold: int) -> None:
        """Discard color classes until exactly ``threshold`` colors remain."""
        while _popcount(self.palette) > threshold:
            used_v1 = self.colors_on(self.V1_live())
            ends = self.cx() | self.cy()
            for pool in (self.palette & ~used_v1, self.palette & ~ends, self.palette):
                if pool:
                    self.peel(lowest(pool), 0)
                    break

    # ---------------------------------------------------------------- completions
    def complete(self, targets: int | None = None, restrict: dict | None = None, order=None) -> bool:
        """Exact list coloring of ``targets`` (default: all uncolored live strip vertices)."""
        if targets is None:
            targets = to_mask(v for v in iter_bits(self.strip & self.alive) if self.colors[v] < 0)
        if not targets:
            return True
        allowed = [0] * self.g.n
        for v in iter_bits(targets):
            allowed[v] = self.palette & ~self.neighbour_colors(v)
        for m, pool in (restrict or {}).items():
            for v in iter_bits(m & targets):
                allowed[v] &= pool
        if order is not None:
            order = [v for v in order if targets >> v & 1]
        sol = kernels.list_color(self.g.adj, targets, allowed, order)
        if sol is None:
            return False
        for v, c in sol.items():
            self.colors[v] = c
        return True

    def engine(self, why: str) -> None:
        self.note(f"engine completion ({why})")
        if not self.complete():
            raise ExtensionError(f"no completion of the remaining strip ({why})")

    def cutset_complete(self) -> None:
        """One side of the join is gone: color the strip alone, then permute colors."""
        self.note("clique cutset: strip colored independently")
        targets = to_mask(v for v in iter_bits(self.strip & self.alive) if self.colors[v] < 0)
        allowed = [0] * self.g.n
        for v in iter_bits(targets):
            allowed[v] = self.palette
        sol = kernels.list_color(self.g.adj, targets, allowed)
        if sol is None:
            return self.engine("strip alone not colorable")
        attached = 0
        forbidden = 0
        if self.live(self.X1):
            attached, forbidden = self.X2 & targets, self.cx()
        elif self.live(self.Y1):
            attached, forbidden = self.Y2 & targets, self.cy()
        used = sorted({sol[v] for v in iter_bits(attached)})
        free = [c for c in iter_bits(self.palette & ~forbidden)]
        perm = {}
        for c in used:
            if c in free:
                perm[c] = c
        rest = [c for c in free if c not in perm.values()]
        for c in used:
            if c not in perm:
                if not rest:
                    return self.engine("too few free colors at the cutset")
                perm[c] = rest.pop(0)
        remaining_src = [c for c in iter_bits(self.palette) if c not in perm]
        remaining_dst = [c for c in iter_bits(self.palette) if c not in perm.values()]
        perm.update(zip(remaining_src, remaining_dst))
        for v, c in sol.items():
            self.colors[v] = perm[c]
        # the strip may still touch the other (already colored) side through absorbed vertices
        if not self._locally_proper(targets):
            for v in iter_bits(targets):
                self.colors[v] = -1
            self.engine("permuted strip clashes with the colored side")

    def _locally_proper(self, m: int) -> bool:
        for v in iter_bits(m):
            if self.neighbour_colors(v) >> self.colors[v] & 1:
                return False
        return True

    def reduce_complete(self, pairs, order=None) -> None:
        """Reduce the listed homogeneous pairs to skeletal ones, complete, then lift back."""
        H, index = induced(self.g, self.alive)
        back = {new: old for old, new in index.items()}
        steps = []
        cur = H
        for A, B in pairs:
            A = to_mask(index[v] for v in iter_bits(A & self.alive))
            B = to_mask(index[v] for v in iter_bits(B & self.alive))
            if not A or not B or A & B or not is_homogeneous_pair(cur, A, B):
                continue
            if classify_pair(cur, A, B) == SKELETAL:
                continue
            before = cur
            cur, step = skeletal_reduce_pair(cur, A, B)
            steps.append((before, step))
        self.note(f"reduced {len(steps)} homogeneous pair(s), interval completion")
        targets = to_mask(index[v] for v in iter_bits(self.strip & self.alive) if self.colors[v] < 0)
        allowed = [0] * cur.n
        base_colors = [self.colors[back[i]] for i in range(cur.n)]
        for v in iter_bits(targets):
            used = 0
            for u in iter_bits(cur.adj[v]):
                if base_colors[u] >= 0:
                    used |= 1 << base_colors[u]
            allowed[v] = self.palette & ~used
        ordr = [index[v] for v in order if v in index] if order else None
        sol = kernels.list_color(cur.adj, targets, allowed, ordr)
        if sol is None:
            return self.engine("reduced strip not colorable")
        for v, c in sol.items():
            base_colors[v] = c
        col = Coloring(tuple(base_colors))
        for before, step in reversed(steps):
            col = lift_coloring(before, step, col)
        for i, c in enumerate(col.colors):
            self.colors[back[i]] = c
        if not self._locally_proper(self.strip & self.alive):
            raise InvariantViolation("lifted strip coloring is not proper")

    def gamma_g(self, removed: int = 0) -> int:
        alive = self.alive & ~removed
        H, index = induced(self.g, alive)
        m = lambda s: to_mask(index[v] for v in iter_bits(s & alive))  # noqa: E731
        return join_context_masks(H, m(self.strip), m(self.X1), m(self.Y1)).gamma_gj

    def diad(self, P: int, Q: int) -> int | None:
        """A nonadjacent pair p in P, q in Q, hitting the clique of cross edges when it is partial."""
        P, Q = self.live(P), self.live(Q)
        best = None
        for p in iter_bits(P):
            for q in iter_bits(Q & ~self.g.adj[p]):
                score = 0
                lp, lq = self.label_of(p), self.label_of(q)
                if lp is not None and lq is not None:
                    om = omega_set(self.g, self.lab(lp), self.lab(lq))
                    if om and not (om >> p & 1 or om >> q & 1):
                        score = 1
                key = (score, p, q)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        return (1 << best[1]) | (1 << best[2])

    def label_of(self, v: int) -> str | None:
        for k, m in self.labels.items():
            if m >> v & 1:
                return k
        return None

    def absorb(self, m: int) -> None:
        """Move live strip vertices ``m`` to the G1 side (they must already be colored)."""
        self.strip &= ~m

    def finished(self) -> bool:
        return all(c >= 0 for c in self.colors)


# ------------------------------------------------------------------ antihat

def _flow_antihat(st: _State) -> None:
    st.k_min()
    for attach, other_end, mine, theirs in ((st.Y2, "y", st.cx, st.cy), (st.X2, "x", st.cy, st.cx)):
        while True:
            cols = mine() & ~theirs() & st.palette
            end = st.live(st.Y2 if other_end == "y" else st.X2)
            rest = end | st.Z2
            if not cols or st.g.is_clique(rest):
                break
            pair = st.diad(end, st.Z2)
            if pair is None:
                break
            st.peel(lowest(cols), pair)
    _antihat_terminal(st)


def _antihat_terminal(st: _State) -> None:
    if not st.live(st.X1) or not st.live(st.Y1):
        return st.cutset_complete()
    cx, cy = st.cx(), st.cy()
    if not cy & ~cx or not cx & ~cy:
        st.note("disjoint color pools")
        return st.engine("disjoint pools")
    st.reduce_complete([(st.X2, st.Y2)])


def _antihat_relabel_ok(st: _State) -> bool:
    """Whether the live strip labels fit the antihat adjacency for some indexing."""
    groups = {"a": [], "b": [], "c": []}
    for name in st.labels:
        m = st.lab(name)
        if not m or not (m & st.strip):
            continue
        if m & st.X2:
            groups["a"].append(name)
        elif m & st.Y2:
            groups["b"].append(name)
        else:
            groups["c"].append(name)
    # labels with no partner of the same index may sit on fresh indices
    k = sum(len(v) for v in groups.values())
    if k == 0 or k > 8 or len(groups["c"]) < 1:
        return False

    def status(p, q):
        A, B = st.lab(p), st.lab(q)
        hits = sum(_popcount(st.g.adj[a] & B) for a in iter_bits(A))
        return "anti" if hits == 0 else "complete" if hits == _popcount(A) * _popcount(B) else "partial"

    for pa in permutations(range(1, k + 1), len(groups["a"])):
        for pb in permutations(range(1, k + 1), len(groups["b"])):
            for pc in permutations(range(1, k + 1), len(groups["c"])):
                idx = {}
                idx.update({n: ("a", i) for n, i in zip(groups["a"], pa)})
                idx.update({n: ("b", i) for n, i in zip(groups["b"], pb)})
                idx.update({n: ("c", i) for n, i in zip(groups["c"], pc)})
                if _fits(idx, status):
                    return True
    return False


def _fits(idx: dict, status) -> bool:
    names = list(idx)
    present = set(idx.values())
    for i, p in enumerate(names):
        for q in names[i + 1:]:
            (sp, ip), (sq, iq) = idx[p], idx[q]
            st = status(p, q)
            if sp == sq:
                if st != "complete":
                    return False
                continue
            adjacent = (ip == iq) if {sp, sq} == {"a", "b"} else (ip != iq)
            third = ({"a", "b", "c"} - {sp, sq}).pop()
            matched = ip == iq and (third, ip) not in present
            if matched:
                continue
            if st != ("complete" if adjacent else "anti"):
                return False
    return True


# ------------------------------------------------------------------ strange

def _flow_strange(st: _State) -> None:
    st.k_min()
    k = _popcount(st.cx() & st.cy())
    omega_c1 = st.lab("c1") & omega_set(st.g, st.lab("c1"), st.lab("b3"))
    cols = st.cy() & ~st.cx() & st.palette
    t = min(_popcount(st.lab("a1")), _popcount(omega_c1), _popcount(st.live(st.Y2)) - k, _popcount(cols))
    t = max(t, 0)
    st.note(f"strange: peeling t={t}")
    for _ in range(t):
        cols = st.cy() & ~st.cx() & st.palette
        a = lowest(st.lab("a1"))
        c = lowest(st.live(omega_c1))
        st.peel(lowest(cols), (1 << a) | (1 << c))
    if not st.lab("a1"):
        st.note("strange: I(a1) empty, fuzzy linear interval branch")
        Z2 = st.Z2
        return st.reduce_complete([(Z2, st.live(st.Y2))])
    if st.lab("c1") and not st.live(omega_c1):
        b3 = st.lab("b3")
        st.note("strange: I(b3) simplicial, antihat relabel")
        st.alive &= ~b3
        saved_y2 = st.Y2
        st.Y2 &= ~b3
        if not _antihat_relabel_ok(st):
            st.note("strange: relabelled strip does not fit the antihat template")
        if st.live(st.Y2):
            _flow_antihat(st)
        else:
            st.engine("empty Y2 after removing I(b3)")
        st.alive |= b3
        st.Y2 = saved_y2
        if not st.complete(targets=b3):
            raise ExtensionError("strange: simplicial I(b3) cannot be colored")
        return
    st.engine("strange: no terminal branch applies")


# ------------------------------------------------------------------ gear

GEAR_PAIRS = (("v7",), ("v8",)), (("v3", "v10"), ("v4", "v5")), (("v6", "v9"), ("v1", "v2")), \
    (("v3", "v7"), ("v6", "v8")), (("v6", "v10"), ("v1", "v2")), (("v3", "v9"), ("v4", "v5"))


def _gear_fuzzy_linear(st: _State) -> None:
    st.note("gear: fuzzy linear interval branch")
    pairs = [(to_mask(v for n in a for v in iter_bits(st.lab(n))), to_mask(v for n in b for v in iter_bits(st.lab(n))))
             for a, b in GEAR_PAIRS]
    st.reduce_complete(pairs)


def _gear_to_antihat(st: _State, outer: str) -> None:
    """An end label vanished: absorb its partner into G1 and continue as an antihat join."""
    partner = {"v1": "v2", "v2": "v1", "v4": "v5", "v5": "v4"}[outer]
    side_x = outer in ("v1", "v2")
    m = st.lab(partner)
    if not st.complete(targets=m):
        return st.engine(f"gear: cannot pre-color I({partner})")
    st.absorb(m)
    new_end = 0
    for v in iter_bits(m):
        new_end |= st.g.adj[v]
    new_end &= st.strip & st.alive
    if side_x:
        st.X1, st.X2 = m, new_end
    else:
        st.Y1, st.Y2 = m, new_end
    st.note(f"gear: I({outer}) empty, antihat relabel with end I({partner})")
    if not st.live(st.X2) or not st.live(st.Y2) or st.X2 & st.Y2:
        return st.engine("gear: relabelled join degenerate")
    if not _antihat_relabel_ok(st):
        st.note("gear: relabelled strip does not fit the antihat template")
    _flow_antihat(st)


def _gear_case3(st: _State) -> None:
    st.note("gear: auxiliary cobipartite graph")
    Z2 = st.Z2
    H, index = induced(st.g, Z2)
    back = {new: old for old, new in index.items()}
    matching = oracle.max_matching(complement(H))
    S_pairs = [(back[a], back[b]) for a, b in sorted(matching)]
    S = to_mask(v for p in S_pairs for v in p)
    t = len(S_pairs)
    rest = st.strip & st.alive & ~S
    X2, Y2 = st.live(st.X2), st.live(st.Y2)
    G2, idx2 = induced(st.g, rest)
    adj = list(G2.adj)
    xs = to_mask(idx2[v] for v in iter_bits(X2))
    ys = to_mask(idx2[v] for v in iter_bits(Y2))
    for v in iter_bits(xs):
        adj[v] |= ys
    for v in iter_bits(ys):
        adj[v] |= xs
    aux = Graph(G2.n, adj)
    w = oracle.omega(aux)
    budget = _popcount(st.palette) - t
    st.note(f"gear: omega(G')={w}, budget l-t={budget}")
    if w > budget:
        return st.engine("gear: auxiliary clique bound fails")
    col = color_alpha2(aux)
    back2 = {new: old for old, new in idx2.items()}
    classes: dict[int, int] = {}
    for i, c in enumerate(col.colors):
        classes[c] = classes.get(c, 0) | (1 << back2[i])
    x_cls = [m for m in classes.values() if m & X2]
    y_cls = [m for m in classes.values() if m & Y2]
    z_cls = [m for m in classes.values() if not m & (X2 | Y2)] + [(1 << a) | (1 << b) for a, b in S_pairs]
    pool_x = [c for c in iter_bits(st.palette & ~st.cx())]
    pool_y = [c for c in iter_bits(st.palette & ~st.cy())]
    assign = {}
    used = set()
    for group, pool in ((x_cls, pool_x), (y_cls, pool_y)):
        for m in group:
            free = [c for c in pool if c not in used]
            if not free:
                return st.engine("gear: color pools exhausted")
            assign[m] = free[0]
            used.add(free[0])
    for m in z_cls:
        free = [c for c in iter_bits(st.palette) if c not in used]
        if not free:
            return st.engine("gear: palette exhausted")
        assign[m] = free[0]
        used.add(free[0])
    for m, c in assign.items():
        for v in iter_bits(m):
            st.colors[v] = c
    if not st._locally_proper(st.strip & st.alive):
        for v in iter_bits(st.strip & st.alive):
            st.colors[v] = -1
        st.engine("gear: auxiliary coloring clashes")


def _flow_gear(st: _State) -> None:
    while True:
        if not st.live(st.X1) or not st.live(st.Y1):
            st.note("gear: 1-join")
            return st.cutset_complete()
        st.k_max()
        cx, cy = st.cx(), st.cy()
        both = cx & cy & st.palette
        L = st.lab
        if both:
            if L("v9") and L("v10"):
                S2 = (1 << lowest(L("v9"))) | (1 << lowest(L("v10")))
            elif L("v3") and L("v6"):
                S2 = (1 << lowest(L("v3"))) | (1 << lowest(L("v6")))
            else:
                return _gear_fuzzy_linear(st)
            st.peel(lowest(both), S2)
            continue
        free = st.palette & ~(cx | cy)
        if free:
            if L("v10"):
                if not L("v1") and not L("v4"):
                    return _gear_fuzzy_linear(st)
                if not L("v1"):
                    return _gear_to_antihat(st, "v1")
                if not L("v4"):
                    return _gear_to_antihat(st, "v4")
                trio = ("v10", "v1", "v4")
            else:
                if not L("v3"):
                    return _gear_fuzzy_linear(st)
                if not L("v1"):
                    return _gear_to_antihat(st, "v1")
                if not L("v5"):
                    return _gear_to_antihat(st, "v5")
                trio = ("v1", "v3", "v5")
            st.peel(lowest(free), to_mask(lowest(L(n)) for n in trio))
            continue
        return _gear_case3(st)


# ------------------------------------------------------------------ pseudo-line

def _centres(st: _State) -> dict:
    out: dict = {}
    for name in st.labels:
        for end in pseudo_line_endpoints(name):
            if end.startswith("t"):
                out[end] = out.get(end, 0) | st.lab(name)
    return {t: m for t, m in out.items() if m}


def _centre_matchings(st: _State):
    edges = {}
    for name in st.labels:
        m = st.lab(name)
        if m:
            edges[name] = m
    cs = sorted(_centres(st))
    for trio in permutations(cs, 3):
        names = [f"{j}-{t}" for j, t in zip(("j1", "j2", "j3"), trio)]
        if all(n in edges for n in names):
            yield to_mask(lowest(edges[n]) for n in names)


def _flow_pseudo_line(st: _State) -> None:
    while True:
        st.k_max()
        cx, cy = st.cx(), st.cy()
        free = st.palette & ~(cx | cy)
        X2, Y2, Z2 = st.live(st.X2), st.live(st.Y2), st.Z2
        if not free:
            if _popcount(Z2) <= _popcount(st.palette) - _popcount(X2) - _popcount(Y2):
                st.note("pseudo-line: three color pools")
                restrict = {X2: cy & ~cx, Y2: cx & ~cy}
            else:
                st.note("pseudo-line: Y2 from X1-only colors, cobipartite rest")
                restrict = {Y2: cx & ~cy}
            if not st.complete(restrict=restrict):
                st.engine("pseudo-line: pooled completion failed")
            return
        if len(_centres(st)) <= 2:
            st.note("pseudo-line: at most two centres, antihat route")
            return _flow_antihat(st)
        e1, e2 = st.lab("j1-j2"), st.lab("j2-j3")
        color = lowest(free)
        before = st.gamma_g()
        candidates = []
        diad = st.diad(e1, e2) if e1 and e2 else None
        if diad is not None:
            candidates.append(diad)
        candidates.extend(_centre_matchings(st))
        chosen = None
        for S2 in candidates:
            cls = to_mask(v for v in iter_bits(st.alive) if st.colors[v] == color)
            if st.gamma_g(cls | S2) < before:
                chosen = S2
                break
        if chosen is None:
            if not candidates:
                return st.engine("pseudo-line: no stable set to peel")
            chosen = candidates[0]
            st.note("pseudo-line: no peel lowers the global join invariant")
        st.peel(color, chosen)


# ------------------------------------------------------------------ canonical interval

def _flow_canonical(st: _State) -> None:
    order = sorted(iter_bits(st.strip), key=lambda v: int(st.label_of(v)[1:]))
    st.note("canonical interval: ordered completion")
    if not st.complete(order=order):
        st.engine("ordered completion failed")


# ------------------------------------------------------------------ public entry points

def _host_coloring(g: Graph, j: JoinAnnotation, c1) -> list[int]:
    V2 = to_mask(j.V2)
    V1 = [v for v in range(g.n) if not V2 >> v & 1]
    colors = list(c1.colors if isinstance(c1, Coloring) else c1)
    if len(colors) == g.n:
        out = [-1] * g.n
        for v in V1:
            out[v] = colors[v]
        return out
    if len(colors) == len(V1):
        out = [-1] * g.n
        for v, c in zip(V1, colors):
            out[v] = c
        return out
    raise ContractError(f"c1 has {len(colors)} entries; expected {len(V1)} (G1) or {g.n} (G)")


def _run(kind: str, flow, g: Graph, j: JoinAnnotation, c1, l: int, trail: list | None) -> Coloring:
    trail = trail if trail is not None else []
    if j.kind != kind:
        raise ContractError(f"extend_{kind.replace('-', '_')}: annotation kind is {j.kind!r}")
    ctx = compute_join_context(g, j)
    threshold = ctx.gamma_gj if kind == PSEUDO_LINE else ctx.gamma_lj
    if l < threshold:
        raise ContractError(f"l={l} is below the join threshold {threshold}")
    base = _host_coloring(g, j, c1)
    V2 = to_mask(j.V2)
    for v in range(g.n):
        if not V2 >> v & 1:
            if not 0 <= base[v] < l:
                raise ContractError(f"c1 gives vertex {v} color {base[v]} outside 0..{l - 1}")
            for u in iter_bits(g.adj[v] & ~V2):
                if base[u] == base[v]:
                    raise ContractError(f"c1 is not proper on G1 (edge {v}-{u})")
    result = None
    st = _State(g, j, list(base), l, trail)
    try:
        st.drop_surplus(threshold)
        flow(st)
        if st.finished() and _proper(g, st.colors):
            result = st.colors
        else:
            trail.append("proof flow left the coloring incomplete or improper")
    except (ExtensionError, InvariantViolation) as exc:
        trail.append(f"proof flow stopped: {exc}")
    if result is not None and all(result[v] == base[v] for v in range(g.n) if not V2 >> v & 1):
        return Coloring(tuple(result))
    if result is not None:
        trail.append("proof flow recolored G1; trying a completion that keeps c1")
    keep = _State(g, j, list(base), l, trail)
    if keep.complete():
        trail.append("c1-preserving completion")
        return Coloring(tuple(keep.colors))
    if result is not None:
        trail.append("no c1-preserving completion exists; returning the proof-flow coloring")
        return Coloring(tuple(result))
    raise ExtensionError(f"extension across the {kind} join failed")


def _proper(g: Graph, colors: list[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


def extend_canonical_interval(g: Graph, j: JoinAnnotation, c1, l: int, trail: list | None = None) -> Coloring:
    return _run(CANONICAL_INTERVAL, _flow_canonical, g, j, c1, l, trail)


def extend_antihat(g: Graph, j: JoinAnnotation, c1, l: int, trail: list | None = None) -> Coloring:
    return _run(ANTIHAT, _flow_antihat, g, j, c1, l, trail)


def extend_strange(g: Graph, j: JoinAnnotation, c1, l: int, trail: list | None = None) -> Coloring:
    return _run(STRANGE, _flow_strange, g, j, c1, l, trail)


def extend_gear(g: Graph, j: JoinAnnotation, c1, l: int, trail: list | None = None) -> Coloring:
    return _run(GEAR, _flow_gear, g, j, c1, l, trail)


def extend_pseudo_line(g: Graph, j: JoinAnnotation, c1, l: int, trail: list | None = None) -> Coloring:
    return _run(PSEUDO_LINE, _flow_pseudo_line, g, j, c1, l, trail)


EXTENDERS = {
    CANONICAL_INTERVAL: extend_canonical_interval,
    ANTIHAT: extend_antihat,
    STRANGE: extend_strange,
    GEAR: extend_gear,
    PSEUDO_LINE: extend_pseudo_line,
}


def extend(g: Graph, j: JoinAnnotation, c1, l: int, trail: list | None = None) -> Coloring:
    return EXTENDERS[j.kind](g, j, c1, l, trail)


def join_threshold(g: Graph, j: JoinAnnotation) -> int:
    ctx = compute_join_context(g, j)
    return ctx.gamma_gj if j.kind == PSEUDO_LINE else ctx.gamma_lj
