"""Optimal colorers for the degenerate classes: stability number at most two,
linear interval graphs and circular interval graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .. import oracle
from ..detect import find_triad
from ..errors import ContractError
from ..graph import Coloring, Graph, complement, iter_bits, to_mask

LINEAR = "linear"
CIRCULAR = "circular"


@dataclass(frozen=True)
class IntervalRepresentation:
    """Vertices placed at positions with a family of position ranges.

    ``order[p]`` is the vertex at position ``p``. Each interval ``(s, e)`` covers
    positions ``s..e`` inclusive; for the circular kind ``s > e`` wraps around.
    Two vertices are adjacent iff some interval covers both positions.
    """

    kind: str
    order: tuple[int, ...]
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.kind not in (LINEAR, CIRCULAR):
            raise ContractError(f"unknown interval kind {self.kind!r}")
        n = len(self.order)
        if sorted(self.order) != list(range(n)):
            raise ContractError("order must be a permutation of the vertices")
        for s, e in self.intervals:
            if not (0 <= s < n and 0 <= e < n):
                raise ContractError(f"interval ({s}, {e}) out of range")
            if self.kind == LINEAR and s > e:
                raise ContractError(f"linear interval ({s}, {e}) is reversed")

    @property
    def n(self) -> int:
        return len(self.order)

    def positions(self, interval: tuple[int, int]) -> list[int]:
        s, e = interval
        if s <= e:
            return list(range(s, e + 1))
        return list(range(s, self.n)) + list(range(0, e + 1))

    def graph(self) -> Graph:
        adj = [0] * self.n
        for iv in self.intervals:
            members = to_mask(self.order[p] for p in self.positions(iv))
            for v in iter_bits(members):
                adj[v] |= members & ~(1 << v)
        return Graph(self.n, adj)

    def validate(self, g: Graph) -> None:
        if g.n != self.n or self.graph() != g:
            raise ContractError("interval representation does not match the graph")

    def _gaps(self, interval: tuple[int, int]) -> int:
        # gap p joins positions p and p+1 (mod n)
        pos = self.positions(interval)
        out = 0
        for p in pos[:-1]:
            out |= 1 << p
        return out

    def is_long(self) -> bool:
        """No three intervals together cover the whole circle."""
        if self.kind != CIRCULAR or self.n < 2:
            return self.kind == CIRCULAR
        full = (1 << self.n) - 1
        gaps = sorted(set(self._gaps(iv) for iv in self.intervals))
        for a, b, c in combinations_with_replacement(gaps, 3):
            if a | b | c == full:
                return False
        return True

    def as_circular(self) -> "IntervalRepresentation":
        return IntervalRepresentation(CIRCULAR, self.order, self.intervals)

    def to_json(self) -> dict:
        return {"kind": self.kind, "order": list(self.order), "intervals": [list(iv) for iv in self.intervals]}

    @classmethod
    def from_json(cls, d: dict) -> "IntervalRepresentation":
        return cls(d["kind"], tuple(d["order"]), tuple(tuple(iv) for iv in d["intervals"]))


def color_alpha2(g: Graph) -> Coloring:
    """Optimal coloring of a graph with no stable set of size three.

    Matched pairs of a maximum matching in the complement become color classes.
    """
    triad = find_triad(g)
    if triad is not None:
        raise ContractError(f"color_alpha2: graph has the triad {triad}")
    matching = oracle.max_matching(complement(g))
    classes = [tuple(e) for e in matching]
    matched = set(v for e in matching for v in e)
    classes.extend((v,) for v in range(g.n) if v not in matched)
    classes.sort(key=min)
    colors = [0] * g.n
    for i, cls in enumerate(classes):
        for v in cls:
            colors[v] = i
    return Coloring(tuple(colors))


def color_linear_interval(rep: IntervalRepresentation, g: Graph) -> Coloring:
    if rep.kind != LINEAR:
        raise ContractError("color_linear_interval needs a linear representation")
    rep.validate(g)
    colors = [-1] * g.n
    for v in rep.order:
        used = {colors[u] for u in iter_bits(g.adj[v]) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def _canonical(labels: list[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


def _sweep(g: Graph, seq: list[int], k: int):
    """Frontier DP: can ``seq`` be colored with k colors? Returns per-step choices."""
    n = len(seq)
    pos = {v: i for i, v in enumerate(seq)}
    last = [max((pos[u] for u in iter_bits(g.adj[v])), default=-1) for v in seq]
    frontiers: list[list[int]] = []
    frontier: list[int] = []
    parents: list[dict] = []
    states = {(): None}
    for p, v in enumerate(seq):
        frontiers.append(frontier)
        adjacent = [i for i, u in enumerate(frontier) if g.has_edge(u, v)]
        keep = [i for i, u in enumerate(frontier) if last[pos[u]] > p]
        keep_v = last[p] > p
        nxt: dict = {}
        for st in states:
            blocks = max(st) + 1 if st else 0
            forbidden = {st[i] for i in adjacent}
            options = [lab for lab in range(blocks) if lab not in forbidden]
            if blocks < k:
                options.append(blocks)
            for lab in options:
                labels = [st[i] for i in keep] + ([lab] if keep_v else [])
                key = _canonical(labels)
                if key not in nxt:
                    nxt[key] = (st, lab)
        parents.append(nxt)
        states = nxt
        frontier = [frontier[i] for i in keep] + ([v] if keep_v else [])
        if not states:
            return None
    # walk back from the empty final frontier
    key = ()
    choices = [None] * n
    for p in range(n - 1, -1, -1):
        st, lab = parents[p][key]
        choices[p] = (st, lab)
        key = st
    colors: dict[int, int] = {}
    for p, v in enumerate(seq):
        st, lab = choices[p]
        F = frontiers[p]
        hit = [u for i, u in enumerate(F) if st[i] == lab]
        if hit:
            colors[v] = colors[hit[0]]
        else:
            busy = {colors[u] for u in F}
            colors[v] = min(c for c in range(k) if c not in busy)
    return colors


def _frontier_width(g: Graph, seq: list[int]) -> int:
    pos = {v: i for i, v in enumerate(seq)}
    last = [max((pos[u] for u in iter_bits(g.adj[v])), default=-1) for v in seq]
    width = 0
    live = 0
    for p in range(len(seq)):
        live = sum(1 for q in range(p + 1) if last[q] > p)
        width = max(width, live)
    return width


def color_circular_interval(rep: IntervalRepresentation, g: Graph) -> Coloring:
    """Optimal coloring by a frontier DP swept around the circle from the best cut."""
    rep.validate(g)
    if g.n == 0:
        return Coloring(())
    seqs = [list(rep.order[s:]) + list(rep.order[:s]) for s in range(rep.n)]
    seq = min(seqs, key=lambda s: (_frontier_width(g, s), s))
    k = max(oracle.omega(g), 1)
    while True:
        colors = _sweep(g, seq, k)
        if colors is not None:
            return Coloring(tuple(colors[v] for v in range(g.n)))
        k += 1
