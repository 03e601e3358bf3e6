"""Coloring thickenings of the icosahedron and its two derivatives.

Whole rounds of stable sets, one vertex per clique I(v) along a fixed stable
set of the base, are peeled while every I(v) they need is nonempty. What is
left is a thickening of a proper subgraph and goes to a residue colorer.
"""
from __future__ import annotations

from typing import Callable

from .. import oracle
from ..detect import omega_set
from ..errors import ContractError, InvariantViolation
from ..graph import Coloring, Graph, induced, iter_bits, lowest, to_mask
from ..reduce import lift_through_trace, make_skeletal
from .thickening import ThickeningSpec, realize

ICOSAHEDRAL = ("icosahedral-G0", "icosahedral-G1", "icosahedral-G2")
G2_ROUNDS = (("v1", "v4", "v7"), ("v3", "v6", "v9"))


def _base_classes(spec: ThickeningSpec) -> list[list[int]]:
    """The color classes of an optimal coloring of the base, as base-vertex lists."""
    _, c = oracle.chromatic_number(spec.base)
    out: dict[int, list[int]] = {}
    for v, col in enumerate(c.colors):
        out.setdefault(col, []).append(v)
    return [out[k] for k in sorted(out)]


def _pick(g: Graph, classes: list[int], alive: int, pair=None) -> int | None:
    """One live vertex from each class, stable, hitting the cross-edge clique of ``pair``."""
    chosen = 0
    if pair is not None:
        A, B = classes[pair[0]] & alive, classes[pair[1]] & alive
        om = omega_set(g, A, B)
        best = None
        for a in iter_bits(A):
            for b in iter_bits(B & ~g.adj[a]):
                key = (0 if (om >> a & 1 or om >> b & 1) else 1, a, b)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        chosen = (1 << best[1]) | (1 << best[2])
    for i, m in enumerate(classes):
        if pair is not None and i in pair:
            continue
        free = m & alive & ~to_mask(u for v in iter_bits(chosen) for u in iter_bits(g.adj[v]))
        if not m & alive or not free:
            return None
        chosen |= 1 << lowest(free)
    return chosen if g.is_stable(chosen) else None


def color_icosahedral(spec: ThickeningSpec, g: Graph,
                      residue: Callable[[Graph], Coloring] | None = None,
                      log: list | None = None) -> Coloring:
    if spec.family not in ICOSAHEDRAL:
        raise ContractError(f"color_icosahedral: family {spec.family!r} is not icosahedral")
    if realize(spec)[0] != g:
        raise ContractError("color_icosahedral: graph does not realize the thickening")
    if residue is None:
        from .pipeline import color_claw_free
        residue = color_claw_free
    log = log if log is not None else []
    cls = spec.classes()
    trace = None
    work = g
    if spec.family == "icosahedral-G2":
        work, trace = make_skeletal(g)
        names = list(spec.names)
        rounds = [([cls[names.index(x)] for x in r], (0, 1)) for r in G2_ROUNDS]
    else:
        rounds = [([cls[v] for v in group], None) for group in _base_classes(spec)]
    colors = [-1] * g.n
    alive = g.full
    next_color = 0
    while True:
        batch = []
        for classes, pair in rounds:
            S = _pick(work, classes, alive & ~to_mask(v for s in batch for v in iter_bits(s)), pair)
            if S is None:
                break
            batch.append(S)
        if len(batch) < len(rounds):
            break
        for S in batch:
            for v in iter_bits(S):
                colors[v] = next_color
            alive &= ~S
            next_color += 1
        log.append(f"round of {len(batch)} stable sets")
    if alive:
        h, index = induced(work, alive)
        rc = residue(h)
        log.append(f"residue on {h.n} vertices with {rc.k} colors")
        for old, new in index.items():
            colors[old] = next_color + rc.colors[new]
    c = Coloring(tuple(colors))
    if trace is not None:
        c = lift_through_trace(g, trace, c)
    bad = [(u, v) for u, v in g.edges() if c.colors[u] == c.colors[v]]
    if bad:
        raise InvariantViolation(f"color_icosahedral produced a clash on {bad[0]}")
    return c
