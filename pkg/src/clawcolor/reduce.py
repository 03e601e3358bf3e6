"""Skeletal reduction of homogeneous pairs of cliques, and lifting colorings back."""
from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .detect import (NONLINEAR, SKELETAL, CliquePair, classify_pair, find_nonlinear_hpoc,
                     find_nonskeletal_linear_hpoc)
from .errors import ContractError, InvariantViolation
from .graph import Coloring, Graph, iter_bits, remove_edges, to_mask


@dataclass(frozen=True)
class ReductionStep:
    pair: CliquePair
    removed_edges: tuple[tuple[int, int], ...]
    kept_clique: frozenset[int]

    def to_json(self) -> dict:
        return {
            "A": sorted(self.pair.A),
            "B": sorted(self.pair.B),
            "kind": self.pair.kind,
            "removed_edges": [list(e) for e in self.removed_edges],
            "kept_clique": sorted(self.kept_clique),
        }

    @classmethod
    def from_json(cls, d: dict) -> "ReductionStep":
        pair = CliquePair(frozenset(d["A"]), frozenset(d["B"]), d["kind"])
        return cls(pair, tuple(tuple(e) for e in d["removed_edges"]), frozenset(d["kept_clique"]))


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def replay(self, g: Graph) -> list[Graph]:
        """Graphs before each step, followed by the final reduced graph."""
        out = [g]
        for s in self.steps:
            g = remove_edges(g, s.removed_edges)
            out.append(g)
        return out

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps]}

    @classmethod
    def from_json(cls, d: dict) -> "ReductionTrace":
        return cls(tuple(ReductionStep.from_json(s) for s in d["steps"]))


def _nonedges_between(g: Graph, A: int, B: int) -> list[tuple[int, int]]:
    return [(a, b) for a in iter_bits(A) for b in iter_bits(B & ~g.adj[a])]


def cobipartite_max_clique(g: Graph, A, B) -> int:
    """Maximum clique of G[A u B] for cliques A, B, via Koenig in the bipartite complement.

    Prefers A, then B, when either is already maximum.
    """
    A, B = to_mask(A), to_mask(B)
    left, right = list(iter_bits(A)), list(iter_bits(B))
    non = _nonedges_between(g, A, B)
    matching = oracle.max_bipartite_matching(left, right, non)
    size = len(left) + len(right) - len(matching)
    if len(left) == size:
        return A
    if len(right) == size:
        return B
    cover_l, cover_r = oracle.konig_cover(left, right, non, matching)
    return (A | B) & ~to_mask(cover_l | cover_r)


def skeletal_reduce_pair(g: Graph, A, B) -> tuple[Graph, ReductionStep]:
    """Remove exactly the A-B edges outside one maximum clique of G[A u B]."""
    A, B = to_mask(A), to_mask(B)
    kind = classify_pair(g, A, B)
    if kind == SKELETAL:
        raise ContractError("skeletal_reduce_pair: pair is already skeletal")
    X = cobipartite_max_clique(g, A, B)
    removed = []
    for a in iter_bits(A):
        for b in iter_bits(g.adj[a] & B):
            if not (X >> a & 1 and X >> b & 1):
                removed.append((a, b) if a < b else (b, a))
    removed.sort()
    reduced = remove_edges(g, removed)
    step = ReductionStep(CliquePair(frozenset(iter_bits(A)), frozenset(iter_bits(B)), kind),
                         tuple(removed), frozenset(iter_bits(X)))
    return reduced, step


def find_nonskeletal_pair(g: Graph) -> CliquePair | None:
    """Nonlinear pairs first, as the linear search presumes none exist."""
    return find_nonlinear_hpoc(g) or find_nonskeletal_linear_hpoc(g)


def make_skeletal(g: Graph) -> tuple[Graph, ReductionTrace]:
    steps = []
    cur = g
    for _ in range(g.m + 1):
        pair = find_nonskeletal_pair(cur)
        if pair is None:
            return cur, ReductionTrace(tuple(steps))
        cur, step = skeletal_reduce_pair(cur, pair.A, pair.B)
        steps.append(step)
    raise InvariantViolation("make_skeletal did not terminate within m steps")


def lift_coloring(g: Graph, step: ReductionStep, c: Coloring) -> Coloring:
    """Recolor A u B so each side keeps its color set and g's edges are respected.

    Colors shared by A and B go onto pairs of a maximum matching of A-B
    non-edges of ``g``; everything else keeps its color set unchanged.
    """
    A, B = step.pair.a_mask, step.pair.b_mask
    colors = list(c.colors)
    if len(colors) != g.n:
        raise ContractError("lift_coloring: coloring size does not match graph")
    ca = {colors[a] for a in iter_bits(A)}
    cb = {colors[b] for b in iter_bits(B)}
    if len(ca) != A.bit_count() or len(cb) != B.bit_count():
        raise ContractError("lift_coloring: coloring is not proper on the reduced cliques")
    shared = sorted(ca & cb)
    non = _nonedges_between(g, A, B)
    matching = sorted(oracle.max_bipartite_matching(iter_bits(A), iter_bits(B), non))
    if len(matching) < len(shared):
        raise InvariantViolation("lift_coloring: too few A-B non-edges for the shared colors")
    used_a = used_b = 0
    for (a, b), col in zip(matching, shared):
        colors[a] = colors[b] = col
        used_a |= 1 << a
        used_b |= 1 << b
    for v, col in zip(iter_bits(A & ~used_a), sorted(ca - set(shared))):
        colors[v] = col
    for v, col in zip(iter_bits(B & ~used_b), sorted(cb - set(shared))):
        colors[v] = col
    return Coloring(tuple(colors))


def lift_through_trace(g: Graph, trace: ReductionTrace, c: Coloring) -> Coloring:
    graphs = trace.replay(g)
    for step, before in zip(reversed(trace.steps), reversed(graphs[:-1])):
        c = lift_coloring(before, step, c)
    return c


__all__ = [
    "ReductionStep", "ReductionTrace", "skeletal_reduce_pair", "make_skeletal",
    "lift_coloring", "lift_through_trace", "cobipartite_max_clique", "NONLINEAR",
]
