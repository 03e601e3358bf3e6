import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from clawcolor import _kernels_py as pure
from clawcolor import kernels
from clawcolor.graph import Graph

from .conftest import brute_chromatic, graphs, line_graphs, to_nx

compiled = pytest.importorskip("clawcolor._kernels")


def full(g):
    return (1 << g.n) - 1


@given(graphs(max_n=12))
def test_max_clique_twins_agree(g):
    a = pure.max_clique(g.adj, full(g))
    b = compiled.max_clique(g.adj, full(g))
    assert a.bit_count() == b.bit_count()
    assert g.is_clique(a) and g.is_clique(b)


@given(graphs(max_n=12))
def test_max_clique_matches_networkx(g):
    import networkx as nx
    expected = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert kernels.max_clique(g.adj, full(g)).bit_count() == expected


@given(graphs(max_n=7))
def test_chromatic_twins_match_brute_force(g):
    want = brute_chromatic(g)
    for impl in (pure, compiled):
        colors = impl.chromatic(g.adj)
        assert len(set(colors)) == want
        assert all(colors[u] != colors[v] for u, v in g.edges())


@given(graphs(max_n=9), st.integers(1, 4), st.randoms(use_true_random=False))
def test_list_color_twins_agree_on_feasibility(g, k, rnd):
    allowed = [rnd.randrange(1, 1 << k) for _ in range(g.n)]
    a = pure.list_color(g.adj, full(g), allowed)
    b = compiled.list_color(g.adj, full(g), allowed)
    assert (a is None) == (b is None)
    for sol in (a, b):
        if sol is not None:
            assert all(allowed[v] >> c & 1 for v, c in sol.items())
            assert all(sol[u] != sol[v] for u, v in g.edges())


@given(graphs(max_n=9))
def test_claw_twins_agree(g):
    a, b = pure.find_claw(g.adj), compiled.find_claw(g.adj)
    assert (a is None) == (b is None)


@given(line_graphs())
def test_line_graphs_have_no_claw(g):
    assert kernels.find_claw(g.adj) is None


@given(graphs(max_n=9))
def test_good_triad_twins_agree(g):
    assert pure.good_triad(g.adj) == compiled.good_triad(g.adj)


def test_pure_backend_forced_by_env():
    env = dict(os.environ, CLAWCOLOR_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from clawcolor import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_compiled_backend_selected():
    assert kernels.BACKEND == ("python" if os.environ.get("CLAWCOLOR_PURE") else "cython")


def test_large_graphs_use_python_path():
    g = Graph.cycle(70)
    assert kernels.max_clique(g.adj, g.full).bit_count() == 2
