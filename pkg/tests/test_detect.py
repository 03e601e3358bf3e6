import pytest
from hypothesis import given, strategies as st

from clawcolor import oracle
from clawcolor.detect import (LINEAR_NONSKELETAL, NONLINEAR, SKELETAL, TWO_NEIGHBORS, all_homogeneous_pairs,
                              certify_triad, classify_pair, find_claw, find_good_triad, find_nonlinear_hpoc,
                              find_nonskeletal_linear_hpoc, find_triad, is_claw_free, is_homogeneous_pair,
                              is_quasi_line, omega_set, trumps, twin_classes)
from clawcolor.errors import ContractError
from clawcolor.generators import gen_thickening
from clawcolor.graph import Graph, remove_vertices

from .conftest import graphs, line_graphs

CLAW = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_claw_found_and_verified():
    w = find_claw(CLAW)
    assert w is not None and w.verify(CLAW)
    assert not is_claw_free(CLAW)


@given(line_graphs())
def test_line_graphs_are_claw_free_and_quasi_line(g):
    assert is_claw_free(g)
    assert is_quasi_line(g)


@given(graphs(max_n=8))
def test_claw_witness_is_induced_claw(g):
    w = find_claw(g)
    if w is not None:
        assert w.verify(g)


def test_twins_and_trumps():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert trumps(path, 1, 0) and not trumps(path, 0, 1)
    k4 = Graph.complete(4)
    assert twin_classes(k4) == [frozenset(range(4))]
    with pytest.raises(ContractError):
        trumps(path, 1, 1)


def test_c6_has_good_triad():
    c6 = Graph.cycle(6)
    cert = find_good_triad(c6)
    assert cert is not None and cert.triad == (0, 2, 4)
    assert all(kind == TWO_NEIGHBORS for kind, _ in cert.justification.values())


def test_certificate_rejects_bad_triads():
    path = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert certify_triad(path, (0, 1, 3)) is None   # not stable
    cert = certify_triad(path, (0, 2, 4))
    assert cert is not None and cert.verify(path)


@given(line_graphs(max_vertices=6, max_edges=11))
def test_good_triad_contract(g):
    cert = find_good_triad(g)
    if cert is None:
        return
    assert cert.verify(g)
    rest, _ = remove_vertices(g, cert.triad)
    assert oracle.gamma_local(rest) <= oracle.gamma_local(g) - 1


@given(graphs(max_n=9))
def test_find_triad_is_stable(g):
    t = find_triad(g)
    if t is None:
        assert oracle.independence_number(g) <= 2
    else:
        assert g.is_stable(t) and len(set(t)) == 3


def test_classify_examples():
    # a0 a1 | b0 b1 with a0b0 and a1b1: induced C4
    g = Graph.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    assert classify_pair(g, 0b0011, 0b1100) == NONLINEAR
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert classify_pair(g, 0b0011, 0b1100) == SKELETAL
    assert omega_set(g, 0b0011, 0b1100) == 0
    g = Graph.from_edges(4, [(0, 1), (2, 3), (0, 2)])
    assert classify_pair(g, 0b0011, 0b1100) == LINEAR_NONSKELETAL
    with pytest.raises(ContractError):
        classify_pair(CLAW, 0b0001, 0b0010)


def test_homogeneity_rejects_mixed_outsider():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (4, 0)])
    assert not is_homogeneous_pair(g, 0b0011, 0b1100)
    assert is_homogeneous_pair(g, 0b0011 | 0, 0b1100) is False


@given(st.integers(0, 10_000))
def test_finders_agree_with_exhaustive_search(seed):
    base = Graph.cycle(5) if seed % 2 else Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    _, g = gen_thickening(seed, base, max_multiplicity=3, fuzz=0.7)
    if g.n > 12:
        return
    pairs = all_homogeneous_pairs(g)
    nonlinear = find_nonlinear_hpoc(g)
    if nonlinear is None:
        assert all(p.kind != NONLINEAR for p in pairs)
        if find_nonskeletal_linear_hpoc(g) is None:
            assert all(p.kind == SKELETAL for p in pairs)
    else:
        assert is_homogeneous_pair(g, nonlinear.a_mask, nonlinear.b_mask)
        assert classify_pair(g, nonlinear.a_mask, nonlinear.b_mask) == NONLINEAR
    lin = find_nonskeletal_linear_hpoc(g)
    if lin is not None and nonlinear is None:
        assert classify_pair(g, lin.a_mask, lin.b_mask) == LINEAR_NONSKELETAL
