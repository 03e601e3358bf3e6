import pytest
from hypothesis import given, strategies as st

from clawcolor import oracle
from clawcolor.colorers.joins import KINDS, JoinAnnotation, compute_join_context, validate_join
from clawcolor.colorers.thickening import ThickeningSpec, realize
from clawcolor.errors import ContractError
from clawcolor.generators import gen_strip_composite
from clawcolor.graph import Graph, to_mask


def test_thickening_c5_doubled():
    spec = ThickeningSpec(Graph.cycle(5), (2,) * 5)
    g, owner = realize(spec)
    assert g.n == 10 and oracle.omega(g) == 4
    assert owner == [0, 0, 1, 1, 2, 2, 3, 3, 4, 4]


def test_fuzzy_pattern_removes_listed_pairs():
    base = Graph.from_edges(2, [(0, 1)])
    spec = ThickeningSpec(base, (2, 2), {(0, 1): {(0, 1)}})
    g, _ = realize(spec)
    assert not g.has_edge(0, 3) and g.has_edge(0, 2) and g.has_edge(1, 3)


@pytest.mark.parametrize("mult, fuzzy", [
    ((0, 1), {}),
    ((1, 1), {(0, 1): {(0, 0)}}),                 # full pattern is not proper
    ((2, 2), {(0, 1): set()}),                    # empty pattern
    ((2, 2), {(0, 1): {(5, 0)}}),                 # out of range
])
def test_thickening_contract(mult, fuzzy):
    base = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ContractError):
        ThickeningSpec(base, mult, fuzzy)


def test_fuzzy_pairs_form_a_matching():
    base = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ContractError):
        ThickeningSpec(base, (2, 2, 2), {(0, 1): {(0, 0)}, (1, 2): {(0, 0)}})
    with pytest.raises(ContractError):
        ThickeningSpec(base, (2, 2, 2), {(0, 2): {(0, 0)}})


def test_thickening_json_round_trip():
    base = Graph.from_edges(3, [(0, 1), (1, 2)])
    spec = ThickeningSpec(base, (2, 1, 3), {(2, 1): {(0, 0)}}, "generic", ("x", "y", "z"))
    assert spec.fuzzy == {(1, 2): frozenset({(0, 0)})}
    again = ThickeningSpec.from_json(spec.to_json())
    assert again.to_json() == spec.to_json()
    assert spec.class_of("z") == 0b111000


@pytest.mark.parametrize("kind", KINDS)
@given(seed=st.integers(0, 10_000))
def test_composites_validate_and_contexts_are_ordered(kind, seed):
    g, j = gen_strip_composite(seed, kind, max_n=18)
    validate_join(g, j)
    ctx = compute_join_context(g, j)
    assert ctx.gamma_lj <= ctx.gamma_gj
    assert ctx.gamma_lj <= oracle.gamma_local(g)
    assert ctx.gamma_gj <= oracle.gamma(g)
    assert JoinAnnotation.from_json(j.to_json()) == j


def test_context_on_ends_uses_side_sizes():
    g, j = gen_strip_composite(5, "antihat", max_n=18)
    ctx = compute_join_context(g, j)
    X1, X2 = to_mask(j.X1), to_mask(j.X2)
    for v in j.X1 - j.Y1:
        assert ctx.omega_prime[v] >= X1.bit_count() + X2.bit_count()


def test_tampered_annotation_is_rejected():
    g, j = gen_strip_composite(2, "gear", max_n=18)
    broken = JoinAnnotation(j.kind, j.X1, j.Y1, j.Y2, j.X2, j.labels, j.fuzzy)
    with pytest.raises(ContractError):
        validate_join(g, broken)
    with pytest.raises(ContractError):
        JoinAnnotation("hexagonal", j.X1, j.Y1, j.X2, j.Y2, j.labels)
