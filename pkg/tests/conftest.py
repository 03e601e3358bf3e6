import itertools

import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from clawcolor.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE: dict = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {criterion:2d}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE[criterion] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def line_graphs(draw, max_vertices=6, max_edges=10):
    """Line graphs of random multigraphs, which are claw-free."""
    n = draw(st.integers(2, max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
                          min_size=1, max_size=max_edges))
    m = len(edges)
    adj_pairs = [(i, j) for i, j in itertools.combinations(range(m), 2) if set(edges[i]) & set(edges[j])]
    return Graph.from_edges(m, adj_pairs)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_chromatic(g: Graph) -> int:
    """Smallest k with a proper k-coloring, by exhaustive search (tiny graphs only)."""
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if colors[0] == 0 and all(colors[u] != colors[v] for u, v in edges):
                return k
    return g.n


@pytest.fixture
def icosahedron():
    from clawcolor.generators import icosahedral_base
    return icosahedral_base("G0")[0]
