"""Coloring by repeatedly making a good triad into a color class."""
from __future__ import annotations

from ..detect import find_good_triad, find_triad
from ..errors import BudgetExceeded
from ..graph import Coloring, Graph, remove_vertices
from ..reduce import lift_through_trace, make_skeletal
from .base import color_alpha2

DEFAULT_BUDGET = 10_000


def peel_good_triads(g: Graph, budget: int = DEFAULT_BUDGET, log: list | None = None) -> Coloring | None:
    """Color g by peeling good triads, finishing with the stability-two colorer.

    Each round reduces to a skeletal graph, stops with ``color_alpha2`` once
    no triad is left, and otherwise gives a good triad one new color. Returns
    None when a round has triads but no good one. ``budget`` caps the number
    of rounds; running out raises ``BudgetExceeded``.
    """
    rounds = 0

    def solve(h: Graph) -> Coloring | None:
        nonlocal rounds
        rounds += 1
        if rounds > budget:
            raise BudgetExceeded(f"peel_good_triads: more than {budget} rounds")
        sk, trace = make_skeletal(h)
        if find_triad(sk) is None:
            c = color_alpha2(sk)
        else:
            cert = find_good_triad(sk)
            if cert is None:
                if log is not None:
                    log.append(f"stalled: no good triad on {sk.n} vertices")
                return None
            if log is not None:
                log.append(f"good triad {cert.triad}")
            rest, index = remove_vertices(sk, cert.triad)
            sub = solve(rest)
            if sub is None:
                return None
            fresh = max(sub.colors, default=-1) + 1
            colors = [fresh] * sk.n
            for old, new in index.items():
                colors[old] = sub.colors[new]
            c = Coloring(tuple(colors))
        return lift_through_trace(h, trace, c)

    return solve(g)
