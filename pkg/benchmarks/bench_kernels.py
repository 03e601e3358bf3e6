"""Time the compiled kernels against their pure-Python twins on generated instances.

Run with ``python3 benchmarks/bench_kernels.py [--seeds N]``. Both backends are
checked to agree before anything is timed.
"""
from __future__ import annotations

import argparse
import time

from clawcolor import _kernels_py as pure
from clawcolor.generators import FAMILY_NAMES, generate

try:
    from clawcolor import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for adj in graphs:
            fn(adj)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if compiled is None:
        print("compiled kernels are not built; nothing to compare")
        return 1
    graphs = [generate(f, s).graph.adj for f in FAMILY_NAMES for s in range(args.seeds)]

    def full(adj):
        return (1 << len(adj)) - 1

    kernels = {
        "max_clique": lambda k: (lambda adj: k.max_clique(adj, full(adj))),
        "chromatic": lambda k: k.chromatic,
        "find_claw": lambda k: k.find_claw,
        "good_triad": lambda k: k.good_triad,
    }
    for adj in graphs:
        assert pure.max_clique(adj, full(adj)).bit_count() == compiled.max_clique(adj, full(adj)).bit_count()
        assert len(set(pure.chromatic(adj))) == len(set(compiled.chromatic(adj)))
    print(f"{len(graphs)} graphs, best of {args.repeat}")
    print(f"{'kernel':12s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, make in kernels.items():
        tp = _time(make(pure), graphs, args.repeat)
        tc = _time(make(compiled), graphs, args.repeat)
        print(f"{name:12s} {tp:10.4f} {tc:10.4f} {tp / max(tc, 1e-9):8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
