"""Kernel selection: compiled twin when importable, pure Python otherwise.

Set ``CLAWCOLOR_PURE=1`` to force the pure-Python kernels. The compiled
kernels only accept graphs with at most 64 vertices (and color indices below
64 for list coloring); larger inputs always take the Python path.
"""
from __future__ import annotations

import os

from . import _kernels_py as pure

compiled = None
if not os.environ.get("CLAWCOLOR_PURE"):
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled = None

BACKEND = "cython" if compiled is not None else "python"
_WORD = 1 << 64


def _impl(adj):
    if compiled is not None and len(adj) <= 64:
        return compiled
    return pure


def max_clique(adj, cand: int) -> int:
    return _impl(adj).max_clique(adj, cand)


def chromatic(adj) -> list[int]:
    return _impl(adj).chromatic(adj)


def list_color(adj, verts: int, allowed, order=None):
    impl = _impl(adj)
    if impl is compiled and any(allowed[v] >= _WORD for v in _members(verts)):
        impl = pure
    return impl.list_color(adj, verts, allowed, order)


def find_claw(adj):
    return _impl(adj).find_claw(adj)


def good_triad(adj):
    return _impl(adj).good_triad(adj)


def _members(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
