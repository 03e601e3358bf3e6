"""Top-level colorer for claw-free graphs.

Structure hints (a join annotation, a thickening, an interval representation
or a three-clique partition) route a graph to its dedicated colorer. Without
hints the graph is split along components and clique cutsets, reduced to a
skeletal graph and colored by the stability-two colorer or by good-triad
peeling. The exact oracle is the last resort at desk scale. Every answer is
checked for properness and against the bound before it is returned.
"""
from __future__ import annotations

import time

from .. import oracle
from ..detect import find_claw, find_triad
from ..errors import (BudgetExceeded, ClawColorError, ContractError, ExtensionError,
                      InvariantViolation)
from ..graph import Coloring, Graph, induced, iter_bits
from ..reduce import lift_through_trace, make_skeletal
from .base import CIRCULAR, LINEAR, color_alpha2, color_circular_interval, color_linear_interval
from .extend import extend, join_threshold
from .icosahedral import ICOSAHEDRAL, color_icosahedral
from .joins import validate_join
from .triads import peel_good_triads

ORACLE_CAP = 24
TRIAD_ROUNDS = 10_000
_RECOVERABLE = (ExtensionError, InvariantViolation, ContractError, BudgetExceeded)


class _Clock:
    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def check(self, where: str) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"color_claw_free: time budget exhausted at {where}")


def color_claw_free(g: Graph, hints: dict | None = None, budget: float | None = None,
                    log: list | None = None) -> Coloring:
    """Color a claw-free graph with at most gamma(g) colors.

    ``hints`` may carry ``join``, ``thickening``, ``interval`` and
    ``three_cliqued`` entries as produced by the generators. ``budget`` is
    a wall-clock limit in seconds. ``log`` collects the route taken.
    """
    claw = find_claw(g)
    if claw is not None:
        raise ContractError(f"color_claw_free: graph has the claw {claw}")
    log = log if log is not None else []
    clock = _Clock(budget)
    c = _color(g, hints or {}, log, clock).normalized()
    bad = [(u, v) for u, v in g.edges() if c.colors[u] == c.colors[v]]
    if bad:
        raise InvariantViolation(f"color_claw_free: improper on edge {bad[0]}")
    bound = oracle.gamma(g) if g.n else 0
    if c.k > bound:
        raise InvariantViolation(f"color_claw_free: {c.k} colors exceeds gamma={bound}")
    return c


def _color(g: Graph, hints: dict, log: list, clock: _Clock) -> Coloring:
    if g.n == 0:
        return Coloring(())
    bound = oracle.gamma(g)
    for name, route in _hinted_routes(g, hints, log, clock):
        clock.check(name)
        try:
            c = route()
        except _RECOVERABLE as exc:
            log.append(f"{name} failed: {exc}")
            continue
        if c is not None and c.k <= bound:
            log.append(f"route: {name}")
            return c
        log.append(f"{name} gave no usable coloring")
    return _color_plain(g, log, clock)


def _hinted_routes(g: Graph, hints: dict, log: list, clock: _Clock):
    j = hints.get("join")
    if j is not None:
        yield "join extension", lambda: _color_join(g, j, log, clock)
    spec = hints.get("thickening")
    if spec is not None and spec.family in ICOSAHEDRAL:
        yield "icosahedral", lambda: color_icosahedral(spec, g, lambda h: _color(h, {}, log, clock), log)
    rep = hints.get("interval")
    if rep is not None:
        if rep.kind == LINEAR:
            yield "linear interval", lambda: color_linear_interval(rep, g)
        elif rep.kind == CIRCULAR:
            yield "circular interval", lambda: color_circular_interval(rep, g)
    if hints.get("three_cliqued") is not None or (spec is not None and spec.family == "antihat"):
        yield "good-triad peeling", lambda: peel_good_triads(g, TRIAD_ROUNDS, log)


def _color_join(g: Graph, j, log: list, clock: _Clock) -> Coloring:
    validate_join(g, j)
    V2 = sum(1 << v for v in j.V2)
    G1, index = induced(g, g.full & ~V2)
    c1 = _color(G1, {}, log, clock).normalized()
    l = max(join_threshold(g, j), c1.k)
    host = [-1] * g.n
    for old, new in index.items():
        host[old] = c1.colors[new]
    return extend(g, j, host, l, log)


def _components(g: Graph) -> list[int]:
    out, seen = [], 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(comp)
    return out


def find_clique_cutset(g: Graph) -> int | None:
    """A maximal clique whose removal disconnects g, or None."""
    for K in oracle.maximal_cliques(g):
        rest = g.full & ~K
        if rest and len(_components(induced(g, rest)[0])) > 1:
            return K
    return None


def _merge_on_clique(g: Graph, K: int, pieces: list[tuple[dict, Coloring]]) -> Coloring:
    """Combine colorings of G[C_i + K] after permuting each to agree on K."""
    colors = [-1] * g.n
    ref = None
    for index, c in pieces:
        on_k = {v: c.colors[index[v]] for v in iter_bits(K)}
        if ref is None:
            ref = on_k
            perm = {x: x for x in set(c.colors)}
        else:
            perm = {on_k[v]: ref[v] for v in on_k}
            spare = [x for x in range(len(g.adj) + len(set(c.colors))) if x not in perm.values()]
            for x in sorted(set(c.colors)):
                if x not in perm:
                    perm[x] = spare.pop(0)
        for old, new in index.items():
            colors[old] = perm[c.colors[new]]
    return Coloring(tuple(colors))


def _color_plain(g: Graph, log: list, clock: _Clock) -> Coloring:
    clock.check("plain dispatch")
    comps = _components(g)
    if len(comps) > 1:
        colors = [0] * g.n
        for comp in comps:
            h, index = induced(g, comp)
            c = _color(h, {}, log, clock)
            for old, new in index.items():
                colors[old] = c.colors[new]
        return Coloring(tuple(colors))
    K = find_clique_cutset(g)
    if K is not None:
        log.append(f"clique cutset of size {K.bit_count()}")
        rest, index_rest = induced(g, g.full & ~K)
        pieces = []
        for comp in _components(rest):
            members = sum(1 << v for v in iter_bits(g.full & ~K) if comp >> index_rest[v] & 1) | K
            h, index = induced(g, members)
            pieces.append((index, _color(h, {}, log, clock).normalized()))
        return _merge_on_clique(g, K, pieces)
    sk, trace = make_skeletal(g)
    if len(trace):
        log.append(f"skeletal reduction in {len(trace)} step(s)")
    c = _color_skeletal(sk, log, clock)
    return lift_through_trace(g, trace, c)


def _color_skeletal(g: Graph, log: list, clock: _Clock) -> Coloring:
    if find_triad(g) is None:
        log.append("route: stability two")
        return color_alpha2(g)
    clock.check("good-triad peeling")
    try:
        c = peel_good_triads(g, TRIAD_ROUNDS, log)
    except BudgetExceeded as exc:
        log.append(str(exc))
        c = None
    if c is not None and c.k <= oracle.gamma(g):
        log.append("route: good-triad peeling")
        return c
    if g.n > ORACLE_CAP:
        raise ClawColorError(f"color_claw_free: no structural route and n={g.n} exceeds the oracle cap")
    clock.check("oracle fallback")
    log.append("route: exact oracle fallback")
    return oracle.chromatic_number(g)[1]


__all__ = ["color_claw_free", "find_clique_cutset", "ORACLE_CAP"]
