"""Seeded instance factories for the claw-free families the colorers handle.

Every generator is a pure function of its seed and parameters. Outputs carry
the structure hints (join annotation, thickening spec, interval
representation, three-clique partition) that the colorers consume.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import kernels, oracle
from .colorers.base import CIRCULAR, LINEAR, IntervalRepresentation
from .colorers.joins import (ANTIHAT, CANONICAL_INTERVAL, GEAR, GEAR_EDGES, PSEUDO_LINE, STRANGE,
                             STRANGE_EDGES, JoinAnnotation, find_w5, validate_join)
from .colorers.thickening import ThickeningSpec, realize
from .errors import BudgetExceeded, ContractError
from .graph import Coloring, Graph, iter_bits, to_mask

RESAMPLE_BUDGET = 64


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ContractError("multigraph must be loopless")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ContractError(f"edge ({u}, {v}) out of range")


@dataclass
class Instance:
    """A generated graph with whatever structure its generator knows about."""

    family: str
    seed: int
    graph: Graph
    join: JoinAnnotation | None = None
    thickening: ThickeningSpec | None = None
    interval: IntervalRepresentation | None = None
    cliques: tuple[int, int, int] | None = None
    params: dict = field(default_factory=dict)

    def annotation_json(self) -> dict:
        out: dict = {"family": self.family, "seed": self.seed, "params": self.params}
        if self.join is not None:
            out["join"] = self.join.to_json()
        if self.thickening is not None:
            out["thickening"] = self.thickening.to_json()
        if self.interval is not None:
            out["interval"] = self.interval.to_json()
        if self.cliques is not None:
            out["three_cliqued"] = [sorted(iter_bits(c)) for c in self.cliques]
        return out

    @staticmethod
    def hints_from_json(d: dict) -> dict:
        hints: dict = {}
        if "join" in d:
            hints["join"] = JoinAnnotation.from_json(d["join"])
        if "thickening" in d:
            hints["thickening"] = ThickeningSpec.from_json(d["thickening"])
        if "interval" in d:
            hints["interval"] = IntervalRepresentation.from_json(d["interval"])
        if "three_cliqued" in d:
            hints["three_cliqued"] = tuple(to_mask(c) for c in d["three_cliqued"])
        return hints

    def hints(self) -> dict:
        return self.hints_from_json(self.annotation_json())


def _resample(fn, what: str):
    for attempt in range(RESAMPLE_BUDGET):
        out = fn(attempt)
        if out is not None:
            return out
    raise BudgetExceeded(f"{what}: resampling budget of {RESAMPLE_BUDGET} exhausted")


def _claw_free(g: Graph) -> bool:
    return kernels.find_claw(g.adj) is None


# ------------------------------------------------------------------ line graphs and intervals

def gen_line_graph(h: Multigraph) -> tuple[Graph, list[tuple[int, int]]]:
    """L(h): one vertex per edge, adjacent when the edges share an endpoint."""
    m = len(h.edges)
    adj = [0] * m
    for i, j in combinations(range(m), 2):
        if set(h.edges[i]) & set(h.edges[j]):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(m, adj), list(h.edges)


def random_multigraph(rng: random.Random, n: int, m: int) -> Multigraph:
    edges = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.append((min(u, v), max(u, v)))
    return Multigraph(n, tuple(edges))


def gen_interval(seed: int, n: int, kind: str = LINEAR, long: bool = False,
                 intervals: int | None = None) -> tuple[Graph, IntervalRepresentation]:
    if n < 1:
        raise ContractError("gen_interval needs n >= 1")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    count = intervals if intervals is not None else rng.randint(1, max(1, n))
    maxlen = max(0, (n - 1) // 3 - 1) if (long and kind == CIRCULAR) else max(1, n // 2)
    ivs = []
    for _ in range(count):
        s = rng.randrange(n)
        length = rng.randint(0, maxlen)
        if kind == LINEAR:
            ivs.append((s, min(n - 1, s + length)))
        else:
            ivs.append((s, (s + length) % n))
    rep = IntervalRepresentation(kind, tuple(order), tuple(sorted(set(ivs))))
    return rep.graph(), rep


# ------------------------------------------------------------------ thickenings

def _random_pattern(rng: random.Random, mu: int, mv: int) -> set:
    pairs = [(i, j) for i in range(mu) for j in range(mv)]
    k = rng.randint(1, len(pairs) - 1)
    return set(rng.sample(pairs, k))


def _thicken(rng: random.Random, base: Graph, names, family: str, max_mult: int,
             fuzz: float, optional_pairs=(), mandatory_pairs=()) -> ThickeningSpec:
    """Random multiplicities; fuzzy patterns on mandatory pairs and on optional ones with prob ``fuzz``."""
    mult = [rng.randint(1, max_mult) for _ in range(base.n)]
    fuzzy = {}
    chosen = list(mandatory_pairs) + [p for p in optional_pairs if rng.random() < fuzz]
    for u, v in chosen:
        if mult[u] + mult[v] < 3:
            mult[u if rng.random() < 0.5 else v] += 1
        fuzzy[(u, v)] = _random_pattern(rng, mult[u], mult[v])
    return ThickeningSpec(base, tuple(mult), fuzzy, family, tuple(names))


def gen_thickening(seed: int, base: Graph, family: str = "generic", max_multiplicity: int = 2,
                   fuzz: float = 0.0) -> tuple[ThickeningSpec, Graph]:
    """Thicken a claw-free base along a random claw-neutral matching."""
    if not _claw_free(base):
        raise ContractError("gen_thickening: base graph has a claw")
    rng = random.Random(seed)

    def attempt(_):
        edges = base.edges()
        rng.shuffle(edges)
        used = set()
        matching = []
        for u, v in edges:
            if u not in used and v not in used and rng.random() < fuzz:
                if _claw_free(_drop_edge(base, u, v)):
                    matching.append((u, v))
                    used.update((u, v))
        spec = _thicken(rng, base, [f"v{i}" for i in range(base.n)], family, max_multiplicity, 1.0,
                        optional_pairs=matching)
        g, _ = realize(spec)
        return (spec, g) if _claw_free(g) else None

    return _resample(attempt, "gen_thickening")


def _drop_edge(g: Graph, u: int, v: int) -> Graph:
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def _named_graph(names, edges) -> Graph:
    index = {x: i for i, x in enumerate(names)}
    return Graph.from_edges(len(names), [(index[a], index[b]) for a, b in edges])


# ------------------------------------------------------------------ icosahedral

def icosahedral_base(which: str, M=()) -> tuple[Graph, list[str]]:
    """G0 (the icosahedron), G1 = G0 - v11 or G2 = G1 - v10, the latter plus the pairs in M."""
    names = [f"v{i}" for i in range(12)]
    edges = set()
    for i in range(1, 11):
        for step in (1, 2):
            j = (i - 1 + step) % 10 + 1
            edges.add(frozenset((f"v{i}", f"v{j}")))
    for i in range(1, 11):
        edges.add(frozenset(("v0" if i % 2 else "v11", f"v{i}")))
    drop = {"G0": [], "G1": ["v11"], "G2": ["v11", "v10"]}
    if which not in drop:
        raise ContractError(f"unknown icosahedral graph {which!r}")
    if M and which != "G2":
        raise ContractError("only G2 takes a matching")
    for p in M:
        if frozenset(p) not in (frozenset(("v1", "v4")), frozenset(("v6", "v9"))):
            raise ContractError(f"pair {p} is not allowed in the icosahedral matching")
        edges.add(frozenset(p))
    names = [x for x in names if x not in drop[which]]
    edges = [tuple(sorted(e)) for e in edges if not (e & set(drop[which]))]
    return _named_graph(names, edges), names


def gen_icosahedral(seed: int, which: str = "G0", max_multiplicity: int = 2,
                    fuzz: float = 0.5) -> tuple[ThickeningSpec, Graph]:
    rng = random.Random(seed)
    M = []
    if which == "G2":
        M = [p for p in (("v1", "v4"), ("v6", "v9")) if rng.random() < fuzz]
    base, names = icosahedral_base(which, M)
    idx = {x: i for i, x in enumerate(names)}
    pairs = [(idx[a], idx[b]) for a, b in M]
    spec = _thicken(rng, base, names, f"icosahedral-{which}", max_multiplicity, 1.0, mandatory_pairs=pairs)
    g, _ = realize(spec)
    return spec, g


# ------------------------------------------------------------------ antihat thickenings

def antihat_base(k: int, X=(), a0b0: str = "none", M=()) -> tuple[Graph, list[str]]:
    """The antihat graph H - X on a0..ak, b0..bk, c1..ck, with the pairs of M added.

    ``a0b0`` is "none", "edge" (antiprismatic variant) or "fuzzy" (edge present, in M).
    """
    if k < 2:
        raise ContractError("antihat needs k >= 2")
    names = [f"a{i}" for i in range(k + 1)] + [f"b{i}" for i in range(k + 1)] + [f"c{i}" for i in range(1, k + 1)]
    X = set(X)
    if X & {"a0", "b0"} or not X <= set(names):
        raise ContractError("antihat: X must avoid a0, b0")
    if sum(1 for i in range(1, k + 1) if f"c{i}" not in X) < 2:
        raise ContractError("antihat: need |C - X| >= 2")
    edges = set()
    for side in "abc":
        members = [x for x in names if x[0] == side]
        edges.update(frozenset(p) for p in combinations(members, 2))
    for i in range(1, k + 1):
        edges.add(frozenset((f"a{i}", f"b{i}")))
        for j in range(1, k + 1):
            if i != j:
                edges.add(frozenset((f"a{i}", f"c{j}")))
                edges.add(frozenset((f"b{i}", f"c{j}")))
    if a0b0 in ("edge", "fuzzy"):
        edges.add(frozenset(("a0", "b0")))
    _check_antihat_matching(k, X, a0b0, M)
    for p in M:
        edges.add(frozenset(p))
    names = [x for x in names if x not in X]
    edges = [tuple(sorted(e)) for e in edges if not (e & X)]
    return _named_graph(names, edges), names


def _check_antihat_matching(k: int, X: set, a0b0: str, M) -> None:
    used = set()
    for p, q in M:
        if p in used or q in used:
            raise ContractError("antihat: M must be a matching")
        used.update((p, q))
        if p[0] == q[0]:
            raise ContractError("antihat: M may not contain an edge inside A, B or C")
        if {p, q} == {"a0", "b0"}:
            continue
        if p[1:] != q[1:] or p[1:] == "0":
            raise ContractError(f"antihat: pair {p}{q} violates the index rule")
        third = ({"a", "b", "c"} - {p[0], q[0]}).pop() + p[1:]
        if third not in X:
            raise ContractError(f"antihat: pair {p}{q} requires {third} in X")
    if a0b0 == "fuzzy" and not any({p, q} == {"a0", "b0"} for p, q in M):
        raise ContractError("antihat: a0b0 adjacent requires a0b0 in M")


def _sample_antihat(rng: random.Random, k: int, a0b0: str):
    pool = [f"{s}{i}" for s in "abc" for i in range(1, k + 1)]
    while True:
        X = {x for x in pool if rng.random() < 0.25}
        if sum(1 for i in range(1, k + 1) if f"c{i}" not in X) >= 2:
            break
    M = []
    used = set()
    if a0b0 == "fuzzy":
        M.append(("a0", "b0"))
        used.update(("a0", "b0"))
    for i in range(1, k + 1):
        for p, q, third in ((f"a{i}", f"b{i}", f"c{i}"), (f"b{i}", f"c{i}", f"a{i}"), (f"a{i}", f"c{i}", f"b{i}")):
            if third in X and p not in X and q not in X and p not in used and q not in used and rng.random() < 0.5:
                M.append((p, q))
                used.update((p, q))
    return X, M


def gen_antihat(seed: int, k: int | None = None, max_multiplicity: int = 2, a0b0: str | None = None,
                X=None, M=None) -> tuple[ThickeningSpec, Graph, tuple[int, int, int]]:
    """Antihat thickening with its three cliques I(A), I(B), I(C)."""
    rng = random.Random(seed)

    def attempt(_):
        kk = k if k is not None else rng.randint(2, 3)
        mode = a0b0 if a0b0 is not None else rng.choice(["none", "none", "fuzzy"])
        if X is None:
            XX, MM = _sample_antihat(rng, kk, mode)
        else:
            XX, MM = set(X), list(M or ())
        base, names = antihat_base(kk, XX, mode, MM)
        idx = {x: i for i, x in enumerate(names)}
        pairs = [(min(idx[p], idx[q]), max(idx[p], idx[q])) for p, q in MM]
        spec = _thicken(rng, base, names, "antihat", max_multiplicity, 1.0, mandatory_pairs=pairs)
        g, _ = realize(spec)
        if not _claw_free(g):
            return None
        cls = spec.classes()
        cliques = tuple(to_mask(v for i, x in enumerate(names) if x[0] == s for v in iter_bits(cls[i]))
                        for s in "abc")
        return spec, g, cliques

    return _resample(attempt, "gen_antihat")


# ------------------------------------------------------------------ three-cliqued exceptions

def gen_long_circular(seed: int, n: int | None = None) -> tuple[Graph, IntervalRepresentation, tuple]:
    """Three-cliqued long circular interval graph, every vertex in a triad."""
    rng = random.Random(seed)

    def attempt(_):
        nn = n if n is not None else rng.randint(6, 12)
        cuts = sorted(rng.sample(range(1, nn), 2))
        arcs = [(0, cuts[0] - 1), (cuts[0], cuts[1] - 1), (cuts[1], nn - 1)]
        ivs = set(arcs)
        maxlen = max(e - s for s, e in arcs)
        for _ in range(rng.randint(0, nn)):
            s = rng.randrange(nn)
            ivs.add((s, (s + rng.randint(0, maxlen)) % nn))
        rep = IntervalRepresentation(CIRCULAR, tuple(range(nn)), tuple(sorted(ivs)))
        if not rep.is_long():
            return None
        g = rep.graph()
        if not _all_in_triads(g):
            return None
        cliques = tuple(to_mask(range(s, e + 1)) for s, e in arcs)
        return g, rep, cliques

    return _resample(attempt, "gen_long_circular")


def _all_in_triads(g: Graph) -> bool:
    for v in range(g.n):
        non = g.full & ~g.adj[v] & ~(1 << v)
        if not any(non & ~g.adj[u] & ~(1 << u) for u in iter_bits(non)):
            return False
    return True


def gen_exception_one(seed: int, max_multiplicity: int = 2) -> tuple[ThickeningSpec, Graph, tuple]:
    rng = random.Random(seed)

    def attempt(_):
        names = [f"v{i}" for i in range(1, 9)]
        edges = [("v1", "v2"), ("v1", "v3"), ("v1", "v6"), ("v1", "v7"), ("v2", "v3"), ("v2", "v4"),
                 ("v3", "v4"), ("v3", "v5"), ("v4", "v5"), ("v4", "v6"), ("v5", "v6"), ("v6", "v7"),
                 ("v8", "v7")]
        M = [("v1", "v4"), ("v3", "v6")]
        if rng.random() < 0.5:
            edges.append(("v2", "v5"))
            M.append(("v2", "v5"))
        X = {x for x in ("v3", "v4") if rng.random() < 0.3}
        names = [x for x in names if x not in X]
        edges = [e for e in edges + M if not set(e) & X]
        M = [p for p in M if not set(p) & X]
        base = _named_graph(names, set(tuple(sorted(e)) for e in edges))
        idx = {x: i for i, x in enumerate(names)}
        pairs = [tuple(sorted((idx[p], idx[q]))) for p, q in M]
        spec = _thicken(rng, base, names, "generic", max_multiplicity, 1.0, mandatory_pairs=pairs)
        g, _ = realize(spec)
        if not _claw_free(g):
            return None
        cls = spec.classes()
        groups = ({"v1", "v2", "v3"}, {"v4", "v5", "v6"}, {"v7", "v8"})
        cliques = tuple(to_mask(v for i, x in enumerate(names) if x in grp for v in iter_bits(cls[i]))
                        for grp in groups)
        return spec, g, cliques

    return _resample(attempt, "gen_exception_one")


def gen_exception_two(seed: int, max_multiplicity: int = 2) -> tuple[ThickeningSpec, Graph, tuple]:
    rng = random.Random(seed)

    def attempt(_):
        A, B, C = ["v1", "v2"], ["v7", "v8"], ["v3", "v4", "v5", "v6", "v9"]
        edges = set()
        for grp in (A, B, C):
            edges.update(tuple(sorted(p)) for p in combinations(grp, 2))
        edges.update([("v1", "v3"), ("v1", "v8"), ("v1", "v9"), ("v6", "v8"), ("v8", "v9"), ("v2", "v3"),
                      ("v6", "v7")])
        v24 = rng.random() < 0.5
        v57 = rng.random() < 0.5
        if v24:
            edges.add(("v2", "v4"))
        if v57:
            edges.add(("v5", "v7"))
        X = {x for x in ("v3", "v4", "v5", "v6") if rng.random() < 0.3}
        CX = set(C) - X
        nb2 = {"v3"} | ({"v4"} if v24 else set())
        nb7 = {"v6"} | ({"v5"} if v57 else set())
        if not (nb2 & CX and nb7 & CX):
            return None
        if "v4" not in X and "v5" not in X and not (v24 and v57):
            return None
        M = [("v1", "v3"), ("v6", "v8")]
        opt = [p for p, on in ((("v2", "v4"), v24), (("v5", "v7"), v57)) if on and rng.random() < 0.5]
        names = [f"v{i}" for i in range(1, 10) if f"v{i}" not in X]
        edges = [tuple(sorted(e)) for e in edges if not set(e) & X]
        M = [p for p in M + opt if not set(p) & X]
        base = _named_graph(names, edges)
        plain = _named_graph(names, [e for e in edges if tuple(sorted(e)) not in {tuple(sorted(p)) for p in M}])
        if not _all_in_triads(plain):
            return None
        idx = {x: i for i, x in enumerate(names)}
        pairs = [tuple(sorted((idx[p], idx[q]))) for p, q in M]
        spec = _thicken(rng, base, names, "generic", max_multiplicity, 1.0, mandatory_pairs=pairs)
        g, _ = realize(spec)
        if not _claw_free(g):
            return None
        cls = spec.classes()
        cliques = tuple(to_mask(v for i, x in enumerate(names) if x in grp for v in iter_bits(cls[i]))
                        for grp in (A, B, C))
        return spec, g, cliques

    return _resample(attempt, "gen_exception_two")


def gen_hex_join(seed: int, term1: tuple, term2: tuple | None) -> tuple[Graph, tuple[int, int, int]]:
    """Hex-join of two three-cliqued terms ``(graph, A, B, C)``; term2 may be None or empty."""
    g1, A1, B1, C1 = term1
    if term2 is None or term2[0].n == 0:
        return g1, (A1, B1, C1)
    g2, A2, B2, C2 = term2
    n1 = g1.n
    adj = list(g1.adj) + [a << n1 for a in g2.adj]
    A2, B2, C2 = A2 << n1, B2 << n1, C2 << n1
    for P, Q in ((A1, A2), (A2, B1), (B1, B2), (B2, C1), (C1, C2), (C2, A1)):
        for v in iter_bits(P):
            adj[v] |= Q
        for v in iter_bits(Q):
            adj[v] |= P
    g = Graph(n1 + g2.n, adj)
    if not _claw_free(g):
        raise ContractError("gen_hex_join: result has a claw")
    return g, (A1 | A2, B1 | B2, C1 | C2)


def gen_alpha2(seed: int, n: int | None = None, density: float | None = None) -> Graph:
    """Complement of a random triangle-free graph (so no stable set of size three)."""
    rng = random.Random(seed)
    n = n if n is not None else rng.randint(3, 14)
    p = density if density is not None else rng.uniform(0.2, 0.7)
    adj = [0] * n
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() < p and not (adj[u] & adj[v]):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    tf = Graph(n, adj)
    full = tf.full
    return Graph(n, [full & ~a & ~(1 << v) for v, a in enumerate(tf.adj)])


# ------------------------------------------------------------------ strips and composites

@dataclass
class Strip:
    graph: Graph
    labels: dict
    X2: int
    Y2: int
    fuzzy: frozenset = frozenset()
    intervals: tuple = ()


def _strip_from_spec(spec: ThickeningSpec, x_names, y_names, fuzzy_names) -> Strip:
    g, _ = realize(spec)
    cls = spec.classes()
    labels = {x: cls[i] for i, x in enumerate(spec.names)}
    X2 = to_mask(v for x in x_names if x in labels for v in iter_bits(labels[x]))
    Y2 = to_mask(v for x in y_names if x in labels for v in iter_bits(labels[x]))
    return Strip(g, labels, X2, Y2, frozenset(frozenset(p) for p in fuzzy_names))


def strip_gear(rng: random.Random, max_mult: int = 2, fuzz: float = 0.5, X=None) -> Strip:
    X = set(X) if X is not None else {x for x in ("v9", "v10") if rng.random() < 0.3}
    names = [f"v{i}" for i in range(1, 11) if f"v{i}" not in X]
    edges = [e for e in GEAR_EDGES if not set(e) & X]
    base = _named_graph(names, edges)
    idx = {x: i for i, x in enumerate(names)}
    opt = [(idx["v7"], idx["v8"])]
    spec = _thicken(rng, base, names, "strip-internal", max_mult, fuzz, optional_pairs=opt)
    fz = [("v7", "v8")] if spec.fuzzy else []
    return _strip_from_spec(spec, ("v1", "v2"), ("v4", "v5"), fz)


def strip_strange(rng: random.Random, max_mult: int = 2, fuzz: float = 0.5) -> Strip:
    names = ["a1", "a2", "b1", "b2", "b3", "c1", "c2"]
    base = _named_graph(names, STRANGE_EDGES)
    idx = {x: i for i, x in enumerate(names)}
    opt = [tuple(sorted((idx["b3"], idx["c1"]))), tuple(sorted((idx["b2"], idx["c2"])))]
    spec = _thicken(rng, base, names, "strip-internal", max_mult, fuzz, optional_pairs=opt)
    fz = [(spec.names[u], spec.names[v]) for u, v in spec.fuzzy]
    return _strip_from_spec(spec, ("a1", "a2"), ("b1", "b2", "b3"), fz)


def strip_antihat(rng: random.Random, max_mult: int = 2) -> Strip | None:
    k = rng.randint(2, 3)
    X, M = _sample_antihat(rng, k, "none")
    base, names = antihat_base(k, X, "none", M)
    keep = [x for x in names if x not in ("a0", "b0")]
    idx = {x: i for i, x in enumerate(keep)}
    sub = _named_graph(keep, [(names[u], names[v]) for u, v in base.edges()
                              if names[u] in idx and names[v] in idx])
    pairs = [tuple(sorted((idx[p], idx[q]))) for p, q in M]
    spec = _thicken(rng, sub, keep, "strip-internal", max_mult, 1.0, mandatory_pairs=pairs)
    strip = _strip_from_spec(spec, [x for x in keep if x[0] == "a"], [x for x in keep if x[0] == "b"], M)
    if not strip.X2 or not strip.Y2 or find_w5(strip.graph) is None:
        return None
    return strip


def strip_pseudo_line(rng: random.Random, max_mult: int = 2, fuzz: float = 0.5) -> Strip | None:
    centres = rng.randint(1, 4)
    edges = [("j1", "j2"), ("j2", "j3")]
    for t in range(centres):
        nbrs = [j for j in ("j1", "j2", "j3") if rng.random() < 0.6]
        if not nbrs:
            nbrs = [rng.choice(("j1", "j2", "j3"))]
        edges.extend((j, f"t{t}") for j in nbrs)
    names = [f"{u}-{v}" for u, v in edges]
    ledges = [(names[i], names[j]) for i, j in combinations(range(len(edges)), 2)
              if set(edges[i]) & set(edges[j])]
    base = _named_graph(names, ledges)
    opt = [(0, 1)]
    spec = _thicken(rng, base, names, "strip-internal", max_mult, fuzz, optional_pairs=opt)
    fz = [("j1-j2", "j2-j3")] if spec.fuzzy else []
    strip = _strip_from_spec(spec, [x for x in names if "j1" in x.split("-")],
                             [x for x in names if "j3" in x.split("-")], fz)
    if find_w5(strip.graph) is None:
        return None
    return strip


def strip_canonical(rng: random.Random, n: int | None = None) -> Strip | None:
    n = n if n is not None else rng.randint(3, 7)
    x = rng.randint(1, max(1, n // 3))
    y = rng.randint(1, max(1, n // 3))
    if x + y > n:
        return None
    ivs = {(0, x - 1), (n - y, n - 1)}
    for _ in range(rng.randint(1, n)):
        s = rng.randrange(n)
        ivs.add((s, min(n - 1, s + rng.randint(0, 2))))
    rep = IntervalRepresentation(LINEAR, tuple(range(n)), tuple(sorted(ivs)))
    g = rep.graph()
    if g.is_clique(g.full):
        return None
    labels = {f"p{i}": 1 << i for i in range(n)}
    return Strip(g, labels, to_mask(range(x)), to_mask(range(n - y, n)), frozenset(), rep.intervals)


STRIP_BUILDERS = {
    CANONICAL_INTERVAL: strip_canonical,
    ANTIHAT: strip_antihat,
    STRANGE: strip_strange,
    PSEUDO_LINE: strip_pseudo_line,
    GEAR: strip_gear,
}


def gen_host(rng: random.Random, n: int | None = None) -> tuple[Graph, int, int]:
    """A linear interval host with disjoint end cliques X1 (leftmost) and Y1 (rightmost)."""
    n = n if n is not None else rng.randint(3, 7)
    a = rng.randint(1, max(1, n // 2 - 1) if n > 2 else 1)
    b = rng.randint(1, max(1, n - a - 1)) if n - a > 1 else 1
    b = min(b, n - a)
    ivs = {(0, a - 1), (n - b, n - 1)}
    for _ in range(rng.randint(1, n)):
        s = rng.randrange(n)
        ivs.add((s, min(n - 1, s + rng.randint(0, 2))))
    rep = IntervalRepresentation(LINEAR, tuple(range(n)), tuple(sorted(ivs)))
    return rep.graph(), to_mask(range(a)), to_mask(range(n - b, n))


def glue(host: Graph, X1: int, Y1: int, strip: Strip, kind: str) -> tuple[Graph, JoinAnnotation]:
    n1 = host.n
    adj = list(host.adj) + [a << n1 for a in strip.graph.adj]
    X2, Y2 = strip.X2 << n1, strip.Y2 << n1
    for P, Q in ((X1, X2), (Y1, Y2)):
        for v in iter_bits(P):
            adj[v] |= Q
        for v in iter_bits(Q):
            adj[v] |= P
    g = Graph(n1 + strip.graph.n, adj)
    labels = {k: frozenset(v + n1 for v in iter_bits(m)) for k, m in strip.labels.items()}
    j = JoinAnnotation(kind, frozenset(iter_bits(X1)), frozenset(iter_bits(Y1)),
                       frozenset(iter_bits(X2)), frozenset(iter_bits(Y2)), labels, strip.fuzzy, strip.intervals)
    return g, j


def gen_strip_composite(seed: int, kind: str, host_n: int | None = None, max_multiplicity: int = 2,
                        max_n: int | None = None) -> tuple[Graph, JoinAnnotation]:
    """A linear interval host glued to a strip of the given kind along a generalized 2-join."""
    if kind not in STRIP_BUILDERS:
        raise ContractError(f"unknown strip kind {kind!r}")
    rng = random.Random(seed)

    def attempt(i):
        # the second half of the budget shrinks the instance to fit max_n
        small = max_n is not None and i >= RESAMPLE_BUDGET // 2
        mm = 1 if small else max_multiplicity
        if kind == CANONICAL_INTERVAL:
            strip = strip_canonical(rng)
        elif kind == PSEUDO_LINE and small:
            strip = strip_pseudo_line(rng, mm, fuzz=1.0)
        else:
            strip = STRIP_BUILDERS[kind](rng, mm)
        if strip is None:
            return None
        host, X1, Y1 = gen_host(rng, 3 if small and host_n is None else host_n)
        g, j = glue(host, X1, Y1, strip, kind)
        if max_n is not None and g.n > max_n:
            return None
        try:
            validate_join(g, j)
        except ContractError:
            return None
        return g, j

    return _resample(attempt, f"gen_strip_composite[{kind}]")


def gen_gear_three_cliqued(seed: int, max_multiplicity: int = 2) -> tuple[Graph, tuple[int, int, int], Strip]:
    """A gear strip on its own, as a three-cliqued graph."""
    rng = random.Random(seed)
    strip = strip_gear(rng, max_multiplicity)
    groups = ({"v1", "v2", "v7"}, {"v3", "v4", "v8", "v9"}, {"v5", "v6", "v10"})
    cliques = tuple(to_mask(v for x in grp if x in strip.labels for v in iter_bits(strip.labels[x]))
                    for grp in groups)
    return strip.graph, cliques, strip


# ------------------------------------------------------------------ colorings of the host side

def random_coloring(g: Graph, l: int, rng: random.Random, moves: int | None = None) -> Coloring | None:
    """A random proper coloring with colors in range(l), or None if chi(g) > l."""
    k, base = oracle.chromatic_number(g)
    if k > l:
        return None
    palette = rng.sample(range(l), k)
    norm = base.normalized().colors
    colors = [palette[c] for c in norm]
    for _ in range(moves if moves is not None else 3 * g.n):
        if g.n == 0:
            break
        v = rng.randrange(g.n)
        used = {colors[u] for u in iter_bits(g.adj[v])}
        free = [c for c in range(l) if c not in used]
        colors[v] = rng.choice(free)
    return Coloring(tuple(colors))


# ------------------------------------------------------------------ family dispatch

MAX_N = 18

FAMILY_NAMES = (
    "line-graph", "linear-interval", "circular-interval", "long-circular", "thickening",
    "icosahedral-G0", "icosahedral-G1", "icosahedral-G2", "antihat", "antiprismatic",
    "ttc5", "ttc6", "hex-join", "gear-three-cliqued",
    "composite-canonical-interval", "composite-antihat", "composite-strange",
    "composite-pseudo-line", "composite-gear", "alpha2",
)

THREE_CLIQUED = ("long-circular", "antihat", "antiprismatic", "ttc5", "ttc6", "hex-join",
                 "gear-three-cliqued")


def _subseeds(seed: int):
    """``seed`` itself, then a deterministic stream of derived seeds."""
    yield seed
    rng = random.Random(f"subseed:{seed}")
    for _ in range(RESAMPLE_BUDGET - 1):
        yield rng.getrandbits(32)


def _bounded(fn, seed: int, max_n: int, what: str):
    for s in _subseeds(seed):
        try:
            out = fn(s)
        except BudgetExceeded:
            continue
        if out is not None and out[0].n <= max_n:
            return out
    raise BudgetExceeded(f"{what}: no instance with n <= {max_n} after {RESAMPLE_BUDGET} seeds")


def _three_cliqued_term(rng: random.Random, budget: int):
    """A small three-cliqued term (graph, A, B, C) for hex-joins."""
    kind = rng.choice(["triangle", "antihat", "ttc5", "long-circular", "clique"])
    s = rng.getrandbits(32)
    if kind == "antihat" and budget >= 8:
        spec, g, cl = gen_antihat(s, k=2, max_multiplicity=1)
        return (g, *cl)
    if kind == "ttc5" and budget >= 8:
        spec, g, cl = gen_exception_one(s, max_multiplicity=1)
        return (g, *cl)
    if kind == "long-circular" and budget >= 6:
        g, _, cl = gen_long_circular(s, n=rng.randint(6, min(10, budget)))
        return (g, *cl)
    sizes = [rng.randint(0, 2) for _ in range(3)]
    if kind == "triangle":
        sizes = [1, 1, 1]
    n = sum(sizes)
    g = Graph.complete(n) if kind == "clique" else Graph(n, [0] * n)
    if kind != "clique":
        adj = [0] * n
        off = 0
        for sz in sizes:
            m = ((1 << sz) - 1) << off
            for v in iter_bits(m):
                adj[v] = m & ~(1 << v)
            off += sz
        g = Graph(n, adj)
    off, masks = 0, []
    for sz in sizes:
        masks.append(((1 << sz) - 1) << off)
        off += sz
    return (g, *masks)


def generate(family: str, seed: int, **params) -> Instance:
    """One instance of ``family`` with n <= max_n (default 18), deterministic in (family, seed, params)."""
    max_n = params.pop("max_n", MAX_N)
    if family == "icosahedral":
        family = f"icosahedral-{params.pop('which', 'G0')}"
    if family == "composite":
        family = f"composite-{params.pop('kind', ANTIHAT)}"
    mm = params.get("max_multiplicity", 2)
    rec = dict(params, max_n=max_n)

    if family == "line-graph":
        def fn(s):
            rng = random.Random(s)
            n = params.get("n", rng.randint(3, 7))
            h = random_multigraph(rng, n, params.get("m", rng.randint(2, min(max_n, 14))))
            return gen_line_graph(h)
        g, _ = _bounded(fn, seed, max_n, family)
        return Instance(family, seed, g, params=rec)
    if family in ("linear-interval", "circular-interval"):
        kind = LINEAR if family == "linear-interval" else CIRCULAR
        n = params.get("n", random.Random(seed).randint(1, min(max_n, 16)))
        g, rep = gen_interval(seed, n, kind, params.get("long", False))
        return Instance(family, seed, g, interval=rep, params=rec)
    if family == "long-circular":
        g, rep, cl = gen_long_circular(seed, params.get("n"))
        return Instance(family, seed, g, interval=rep, cliques=cl, params=rec)
    if family == "thickening":
        def fn(s):
            rng = random.Random(s)
            h = random_multigraph(rng, rng.randint(3, 5), rng.randint(3, 7))
            base, _ = gen_line_graph(h)
            spec, g = gen_thickening(s, base, "generic", mm, params.get("fuzz", 0.4))
            return g, spec
        g, spec = _bounded(fn, seed, max_n, family)
        return Instance(family, seed, g, thickening=spec, params=rec)
    if family.startswith("icosahedral-"):
        which = family.split("-")[1]

        def fn(s):
            spec, g = gen_icosahedral(s, which, mm, params.get("fuzz", 0.5))
            return g, spec
        g, spec = _bounded(fn, seed, max_n, family)
        return Instance(family, seed, g, thickening=spec, params=rec)
    if family in ("antihat", "antiprismatic"):
        a0b0 = "edge" if family == "antiprismatic" else None

        def fn(s):
            spec, g, cl = gen_antihat(s, params.get("k"), mm, a0b0)
            return g, spec, cl
        g, spec, cl = _bounded(fn, seed, max_n, family)
        return Instance(family, seed, g, thickening=spec, cliques=cl, params=rec)
    if family in ("ttc5", "ttc6"):
        gen = gen_exception_one if family == "ttc5" else gen_exception_two

        def fn(s):
            spec, g, cl = gen(s, mm)
            return g, spec, cl
        g, spec, cl = _bounded(fn, seed, max_n, family)
        return Instance(family, seed, g, thickening=spec, cliques=cl, params=rec)
    if family == "hex-join":
        def fn(s):
            rng = random.Random(s)
            t1 = _three_cliqued_term(rng, max_n)
            t2 = _three_cliqued_term(rng, max_n - t1[0].n)
            try:
                return gen_hex_join(s, t1, t2)
            except ContractError:
                return None
        g, cl = _bounded(fn, seed, max_n, family)
        return Instance(family, seed, g, cliques=cl, params=rec)
    if family == "gear-three-cliqued":
        def fn(s):
            g, cl, _ = gen_gear_three_cliqued(s, mm)
            return g, cl
        g, cl = _bounded(fn, seed, max_n, family)
        return Instance(family, seed, g, cliques=cl, params=rec)
    if family.startswith("composite-"):
        kind = family[len("composite-"):]
        g, j = gen_strip_composite(seed, kind, params.get("host_n"), mm, max_n)
        return Instance(family, seed, g, join=j, params=rec)
    if family == "alpha2":
        g = gen_alpha2(seed, params.get("n", random.Random(seed).randint(3, 14)), params.get("density"))
        return Instance(family, seed, g, params=rec)
    raise ContractError(f"unknown generator family {family!r}")
