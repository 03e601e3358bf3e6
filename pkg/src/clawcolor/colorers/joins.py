"""Generalized 2-join annotations, strip templates and the join invariants."""
from __future__ import annotations

from dataclasses import dataclass, field

from .. import kernels
from ..errors import ContractError
from ..graph import Graph, iter_bits, to_mask

CANONICAL_INTERVAL = "canonical-interval"
ANTIHAT = "antihat"
STRANGE = "strange"
PSEUDO_LINE = "pseudo-line"
GEAR = "gear"
KINDS = (CANONICAL_INTERVAL, ANTIHAT, STRANGE, PSEUDO_LINE, GEAR)

GEAR_EDGES = (
    ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v6"), ("v6", "v1"),
    ("v7", "v1"), ("v7", "v2"), ("v7", "v3"), ("v7", "v6"),
    ("v8", "v3"), ("v8", "v4"), ("v8", "v5"), ("v8", "v6"), ("v8", "v7"),
    ("v9", "v3"), ("v9", "v4"), ("v9", "v6"), ("v9", "v1"), ("v9", "v7"), ("v9", "v8"),
    ("v10", "v2"), ("v10", "v3"), ("v10", "v5"), ("v10", "v6"), ("v10", "v7"), ("v10", "v8"),
)
GEAR_FUZZY = (("v7", "v8"),)

STRANGE_EDGES = (
    ("a1", "a2"), ("b1", "b2"), ("b1", "b3"), ("b2", "b3"), ("c1", "c2"),
    ("a1", "b1"), ("c1", "a2"), ("c1", "b2"), ("c1", "b3"),
    ("c2", "a1"), ("c2", "a2"), ("c2", "b1"), ("c2", "b2"),
)
STRANGE_FUZZY = (("b3", "c1"), ("b2", "c2"))


def _pair(p: str, q: str) -> frozenset:
    return frozenset((p, q))


def antihat_adjacent(p: str, q: str) -> bool:
    """Base adjacency of the antihat graph between labels a_i, b_i, c_i (i >= 1)."""
    (sp, ip), (sq, iq) = (p[0], int(p[1:])), (q[0], int(q[1:]))
    if sp == sq:
        return True
    if {sp, sq} == {"a", "b"}:
        return ip == iq
    return ip != iq


def antihat_fuzzy_allowed(p: str, q: str, present: set[str]) -> bool:
    """Whether the pair may carry a matched (fuzzy) pattern, given the present labels."""
    (sp, ip), (sq, iq) = (p[0], int(p[1:])), (q[0], int(q[1:]))
    if sp == sq or ip != iq:
        return False
    third = ({"a", "b", "c"} - {sp, sq}).pop()
    return f"{third}{ip}" not in present


def pseudo_line_endpoints(name: str) -> tuple[str, str]:
    u, v = name.split("-")
    return u, v


def template_adjacent(kind: str, p: str, q: str, intervals=None, positions=None) -> bool:
    if kind == GEAR:
        return _pair(p, q) in _GEAR_SET
    if kind == STRANGE:
        return _pair(p, q) in _STRANGE_SET
    if kind == ANTIHAT:
        return antihat_adjacent(p, q)
    if kind == PSEUDO_LINE:
        return bool(set(pseudo_line_endpoints(p)) & set(pseudo_line_endpoints(q)))
    if kind == CANONICAL_INTERVAL:
        i, j = sorted((positions[p], positions[q]))
        return any(s <= i and j <= e for s, e in intervals)
    raise ContractError(f"unknown join kind {kind!r}")


_GEAR_SET = {_pair(*e) for e in GEAR_EDGES}
_STRANGE_SET = {_pair(*e) for e in STRANGE_EDGES}


@dataclass(frozen=True)
class JoinAnnotation:
    """A generalized 2-join ((X1, Y1), (X2, Y2)) with the strip's named label sets.

    ``labels`` partitions V2. ``fuzzy`` lists label pairs whose adjacency may be
    partial. For the canonical-interval kind the labels are positions
    ``p0, p1, ...`` and ``intervals`` gives the linear interval ranges over them.
    """

    kind: str
    X1: frozenset
    Y1: frozenset
    X2: frozenset
    Y2: frozenset
    labels: dict = field(hash=False)
    fuzzy: frozenset = frozenset()
    intervals: tuple = ()

    def __post_init__(self):
        for name in ("X1", "Y1", "X2", "Y2"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        labels = {k: frozenset(v) for k, v in self.labels.items() if v}
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "fuzzy", frozenset(frozenset(p) for p in self.fuzzy))
        object.__setattr__(self, "intervals", tuple(tuple(iv) for iv in self.intervals))
        if self.kind not in KINDS:
            raise ContractError(f"unknown join kind {self.kind!r}")

    @property
    def V2(self) -> frozenset:
        out = set()
        for s in self.labels.values():
            out |= s
        return frozenset(out)

    def mask(self, name: str) -> int:
        return to_mask(self.labels.get(name, ()))

    def positions(self) -> dict:
        return {f"p{i}": i for i in range(len(self.labels))}

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "X1": sorted(self.X1), "Y1": sorted(self.Y1),
            "X2": sorted(self.X2), "Y2": sorted(self.Y2),
            "labels": {k: sorted(v) for k, v in sorted(self.labels.items())},
            "fuzzy": sorted(sorted(p) for p in self.fuzzy),
            "intervals": [list(iv) for iv in self.intervals],
        }

    @classmethod
    def from_json(cls, d: dict) -> "JoinAnnotation":
        return cls(d["kind"], d["X1"], d["Y1"], d["X2"], d["Y2"],
                   {k: frozenset(v) for k, v in d["labels"].items()},
                   frozenset(frozenset(p) for p in d.get("fuzzy", ())),
                   tuple(tuple(iv) for iv in d.get("intervals", ())))

    def remap(self, index: dict) -> "JoinAnnotation":
        """The annotation on an induced subgraph, given its old-to-new index map."""
        def m(s):
            return frozenset(index[v] for v in s if v in index)
        return JoinAnnotation(self.kind, m(self.X1), m(self.Y1), m(self.X2), m(self.Y2),
                              {k: m(v) for k, v in self.labels.items()}, self.fuzzy, self.intervals)


def _status(g: Graph, A: int, B: int) -> str:
    hits = sum((g.adj[a] & B).bit_count() for a in iter_bits(A))
    if hits == 0:
        return "anti"
    if hits == A.bit_count() * B.bit_count():
        return "complete"
    return "partial"


def find_w5(g: Graph, within: int | None = None) -> tuple | None:
    """An induced 5-hole plus a vertex adjacent to all of it, or None."""
    within = g.full if within is None else within
    adj = g.adj
    for hub in iter_bits(within):
        N = adj[hub] & within
        for x1 in iter_bits(N):
            for x2 in iter_bits(N & adj[x1] & ~((2 << x1) - 1)):
                for x3 in iter_bits(N & adj[x2] & ~adj[x1] & ~(1 << x1)):
                    for x4 in iter_bits(N & adj[x3] & ~adj[x1] & ~adj[x2] & ~(1 << x1) & ~(1 << x2)):
                        C = N & adj[x4] & adj[x1] & ~adj[x2] & ~adj[x3] & ~((2 << x1) - 1)
                        C &= ~((1 << x2) | (1 << x3))
                        if C:
                            x5 = (C & -C).bit_length() - 1
                            return hub, (x1, x2, x3, x4, x5)
    return None


def validate_join(g: Graph, j: JoinAnnotation) -> None:
    """Raise ContractError unless ``j`` describes a generalized 2-join of ``g`` of its kind."""
    V2 = to_mask(j.V2)
    total = sum(len(s) for s in j.labels.values())
    if total != bin(V2).count("1"):
        raise ContractError("join: label sets overlap")
    if V2 & ~g.full:
        raise ContractError("join: label vertex out of range")
    V1 = g.full & ~V2
    X1, Y1, X2, Y2 = (to_mask(s) for s in (j.X1, j.Y1, j.X2, j.Y2))
    if (X1 | Y1) & ~V1 or (X2 | Y2) & ~V2:
        raise ContractError("join: X1, Y1 must lie in V1 and X2, Y2 in V2")
    if X2 & Y2:
        raise ContractError("join: X2 and Y2 must be disjoint")
    if not X2 or not Y2:
        raise ContractError("join: X2 and Y2 must be nonempty")
    for name, s in (("X1", X1), ("Y1", Y1), ("X2", X2), ("Y2", Y2)):
        if not g.is_clique(s):
            raise ContractError(f"join: {name} is not a clique")
    if not g.is_clique(X1 | X2) or not g.is_clique(Y1 | Y2):
        raise ContractError("join: X1 u X2 and Y1 u Y2 must be cliques")
    for v in iter_bits(V1):
        want = (X2 if X1 >> v & 1 else 0) | (Y2 if Y1 >> v & 1 else 0)
        if g.adj[v] & V2 != want:
            raise ContractError(f"join: vertex {v} has V2-neighbours outside the join rule")
    for v in iter_bits(X2):
        out = g.adj[v] & V2 & ~X2
        if not g.is_clique(out):
            raise ContractError(f"join: strip end vertex {v} has a non-clique outside neighbourhood")
    for v in iter_bits(Y2):
        out = g.adj[v] & V2 & ~Y2
        if not g.is_clique(out):
            raise ContractError(f"join: strip end vertex {v} has a non-clique outside neighbourhood")
    if kernels.find_claw(g.adj) is not None:
        raise ContractError("join: graph is not claw-free")
    _validate_template(g, j, X2, Y2, V2)


def _validate_template(g: Graph, j: JoinAnnotation, X2: int, Y2: int, V2: int) -> None:
    names = sorted(j.labels)
    masks = {p: to_mask(j.labels[p]) for p in names}
    present = set(names)
    kind = j.kind
    positions = intervals = None
    if kind == CANONICAL_INTERVAL:
        positions = j.positions()
        if set(names) != set(positions):
            raise ContractError("join: canonical-interval labels must be p0..p(m-1)")
        intervals = j.intervals
        order = sorted(names, key=positions.get)
        if any(len(j.labels[p]) != 1 for p in names):
            raise ContractError("join: canonical-interval labels are single vertices")
        first = to_mask(v for p in order[:X2.bit_count()] for v in j.labels[p])
        last = to_mask(v for p in order[len(order) - Y2.bit_count():] for v in j.labels[p])
        if first != X2 or last != Y2:
            raise ContractError("join: X2 and Y2 must be the leftmost and rightmost strip vertices")
        if g.is_clique(V2):
            raise ContractError("join: canonical-interval strip must not be a clique")
    elif kind == GEAR:
        if not present <= {f"v{i}" for i in range(1, 11)} or not {f"v{i}" for i in range(1, 9)} <= present:
            raise ContractError("join: gear labels must be v1..v8 plus optionally v9, v10")
        if masks["v1"] | masks["v2"] != X2 or masks["v4"] | masks["v5"] != Y2:
            raise ContractError("join: gear strip ends must be I(v1) u I(v2) and I(v4) u I(v5)")
    elif kind == STRANGE:
        if present != {"a1", "a2", "b1", "b2", "b3", "c1", "c2"}:
            raise ContractError("join: strange labels must be a1, a2, b1, b2, b3, c1, c2")
        if masks["a1"] | masks["a2"] != X2 or masks["b1"] | masks["b2"] | masks["b3"] != Y2:
            raise ContractError("join: strange strip ends must be I(A) and I(B)")
    elif kind == ANTIHAT:
        for p in names:
            if p[0] not in "abc" or not p[1:].isdigit() or int(p[1:]) < 1:
                raise ContractError(f"join: bad antihat label {p!r}")
        xa = to_mask(v for p in names if p[0] == "a" for v in j.labels[p])
        yb = to_mask(v for p in names if p[0] == "b" for v in j.labels[p])
        if xa != X2 or yb != Y2:
            raise ContractError("join: antihat strip ends must be I(A') and I(B')")
        if sum(1 for p in names if p[0] == "c") < 2:
            raise ContractError("join: antihat strip needs at least two c labels")
        if find_w5(g, V2) is None:
            raise ContractError("join: antihat strip has no W5")
    elif kind == PSEUDO_LINE:
        for p in names:
            ends = pseudo_line_endpoints(p)
            if not set(ends) & {"j1", "j2", "j3"}:
                raise ContractError(f"join: pseudo-line edge {p} avoids j1, j2, j3")
        if not {"j1-j2", "j2-j3"} <= present:
            raise ContractError("join: pseudo-line strip needs edges j1-j2 and j2-j3")
        xs = to_mask(v for p in names if "j1" in pseudo_line_endpoints(p) for v in j.labels[p])
        ys = to_mask(v for p in names if "j3" in pseudo_line_endpoints(p) for v in j.labels[p])
        if xs != X2 or ys != Y2:
            raise ContractError("join: pseudo-line strip ends must be the edges at j1 and j3")
        if find_w5(g, V2) is None:
            raise ContractError("join: pseudo-line strip has no W5")
    allowed = set(j.fuzzy)
    for i, p in enumerate(names):
        if not g.is_clique(masks[p]):
            raise ContractError(f"join: label {p} is not a clique")
        for q in names[i + 1:]:
            st = _status(g, masks[p], masks[q])
            adjacent = template_adjacent(kind, p, q, intervals, positions)
            may_fuzz = _pair(p, q) in allowed
            if may_fuzz and not _fuzz_permitted(kind, p, q, present):
                raise ContractError(f"join: pair {p}{q} may not be fuzzy")
            if may_fuzz:
                continue
            if st != ("complete" if adjacent else "anti"):
                raise ContractError(f"join: labels {p}, {q} are {st}, template says "
                                    f"{'adjacent' if adjacent else 'nonadjacent'}")


def _fuzz_permitted(kind: str, p: str, q: str, present: set) -> bool:
    pair = _pair(p, q)
    if kind == GEAR:
        return pair in {_pair(*e) for e in GEAR_FUZZY}
    if kind == STRANGE:
        return pair in {_pair(*e) for e in STRANGE_FUZZY}
    if kind == PSEUDO_LINE:
        return pair == _pair("j1-j2", "j2-j3")
    if kind == ANTIHAT:
        return antihat_fuzzy_allowed(p, q, present)
    return False


# ------------------------------------------------------------------ join invariants

@dataclass(frozen=True)
class JoinContext:
    omega_prime: dict = field(hash=False)
    gamma_lj: int
    gamma_gj: int


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def join_context_masks(g: Graph, V2: int, X1: int, Y1: int) -> JoinContext:
    """Join invariants from masks; degrees are taken in ``g`` itself."""
    H2 = V2 | X1 | Y1
    only_x = X1 & ~Y1
    only_y = Y1 & ~X1
    sides = [H2 & ~only_y, H2 & ~only_x]
    omega_prime = {}
    for v in iter_bits(H2):
        best = 0
        for side in sides:
            if side >> v & 1:
                best = max(best, 1 + kernels.max_clique(g.adj, g.adj[v] & side).bit_count())
        omega_prime[v] = best
    if not omega_prime:
        return JoinContext({}, 0, 0)
    glj = max(_ceil_half(g.degree(v) + 1 + w) for v, w in omega_prime.items())
    ggj = _ceil_half(max(g.degree(v) for v in omega_prime) + 1 + max(omega_prime.values()))
    return JoinContext(omega_prime, glj, ggj)


def compute_join_context(g: Graph, j: JoinAnnotation, check: bool = True) -> JoinContext:
    if check:
        validate_join(g, j)
    return join_context_masks(g, to_mask(j.V2), to_mask(j.X1), to_mask(j.Y1))
