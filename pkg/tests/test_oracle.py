from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given
from scipy.optimize import linprog

from clawcolor import oracle
from clawcolor.errors import CapacityError
from clawcolor.graph import Graph, complement

from .conftest import brute_chromatic, graphs, to_nx


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


# frozen values, cross-checked with networkx cliques and a scipy LP
KNOWN = {
    "petersen": (nx.petersen_graph(), dict(omega=2, alpha=4, chi=3, chi_f=Fraction(5, 2), gamma=3)),
    "icosahedron": (nx.icosahedral_graph(), dict(omega=3, alpha=3, chi=4, chi_f=Fraction(4), gamma=5)),
    "c5": (nx.cycle_graph(5), dict(omega=2, alpha=2, chi=3, chi_f=Fraction(5, 2), gamma=3)),
    "c7 complement": (nx.complement(nx.cycle_graph(7)), dict(omega=3, alpha=2, chi=4, chi_f=Fraction(7, 2), gamma=4)),
    "wheel w5": (nx.wheel_graph(6), dict(omega=3, alpha=2, chi=4, chi_f=Fraction(7, 2), gamma=5)),
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_parameters(name):
    h, want = KNOWN[name]
    g = from_nx(h)
    assert oracle.omega(g) == want["omega"]
    assert oracle.independence_number(g) == want["alpha"]
    assert oracle.chromatic_number(g)[0] == want["chi"]
    assert oracle.fractional_chromatic(g) == want["chi_f"]
    assert oracle.gamma(g) == want["gamma"]


def test_wheel_local_gamma():
    g = from_nx(nx.wheel_graph(6))
    assert sorted(oracle.local_gamma_values(g)) == [4, 4, 4, 4, 4, 5]
    assert oracle.gamma_local(g) == 5


def lp_chi_f(g):
    h = to_nx(complement(g))
    stables = list(nx.find_cliques(h))
    rows = [[-1.0 if v in s else 0.0 for s in stables] for v in range(g.n)]
    return linprog([1.0] * len(stables), A_ub=rows, b_ub=[-1.0] * g.n, bounds=(0, None)).fun


@given(graphs(max_n=8, min_n=1))
def test_fractional_matches_scipy(g):
    assert float(oracle.fractional_chromatic(g)) == pytest.approx(lp_chi_f(g), abs=1e-7)


@given(graphs(max_n=7))
def test_chromatic_matches_brute_force(g):
    k, c = oracle.chromatic_number(g)
    assert k == brute_chromatic(g)
    assert all(c[u] != c[v] for u, v in g.edges())


@given(graphs(max_n=10))
def test_matching_size_matches_networkx(g):
    m = oracle.max_matching(g)
    assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    used = [v for e in m for v in e]
    assert len(used) == len(set(used)) and all(g.has_edge(u, v) for u, v in m)


@given(graphs(max_n=8))
def test_blossom_matches_exhaustive(g):
    assert len(oracle.max_matching(g)) == len(oracle.max_matching(g, exhaustive=True))


@given(graphs(max_n=10))
def test_konig_cover_size_equals_matching(g):
    left = [v for v in range(g.n) if v % 2 == 0]
    right = [v for v in range(g.n) if v % 2 == 1]
    edges = [(u, v) if u % 2 == 0 else (v, u) for u, v in g.edges() if (u + v) % 2 == 1]
    m = oracle.max_bipartite_matching(left, right, edges)
    cl, cr = oracle.konig_cover(left, right, edges, m)
    assert len(cl) + len(cr) == len(m)
    assert all(u in cl or v in cr for u, v in edges)


@given(graphs(max_n=9, min_n=1))
def test_bound_chain(g):
    w = oracle.omega(g)
    cf = oracle.fractional_chromatic(g)
    assert w <= cf <= oracle.chromatic_number(g)[0]
    assert cf <= oracle.gamma_local(g) <= oracle.gamma(g) <= g.max_degree() + 1


def test_fractional_cap():
    with pytest.raises(CapacityError):
        oracle.fractional_chromatic(Graph.cycle(30), cap=20)


def test_empty_graph():
    g = Graph(0, [])
    assert oracle.gamma(g) == 0 and oracle.gamma_local(g) == 0 and oracle.omega(g) == 0
