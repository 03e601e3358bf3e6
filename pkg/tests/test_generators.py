import random

import pytest
from hypothesis import given, strategies as st

from clawcolor import oracle
from clawcolor.colorers.joins import validate_join
from clawcolor.detect import find_claw
from clawcolor.errors import ContractError
from clawcolor.generators import (FAMILY_NAMES, MAX_N, THREE_CLIQUED, Multigraph, antihat_base,
                                  gen_alpha2, gen_hex_join, gen_line_graph, generate, icosahedral_base,
                                  random_coloring, strip_gear, strip_strange)
from clawcolor.graph import Graph, check_coloring, induced, to_mask


def test_icosahedron_parameters():
    g, names = icosahedral_base("G0")
    assert (g.n, g.m) == (12, 30)
    assert all(g.degree(v) == 5 for v in range(12))
    assert oracle.omega(g) == 3 and oracle.independence_number(g) == 3
    g1, _ = icosahedral_base("G1")
    g2, _ = icosahedral_base("G2")
    assert (g1.n, g2.n) == (11, 10)
    assert find_claw(g1) is None and find_claw(g2) is None


def test_icosahedral_matching_rules():
    g2, _ = icosahedral_base("G2", [("v1", "v4")])
    assert g2.m == icosahedral_base("G2")[0].m + 1
    with pytest.raises(ContractError):
        icosahedral_base("G1", [("v1", "v4")])
    with pytest.raises(ContractError):
        icosahedral_base("G2", [("v1", "v5")])
    with pytest.raises(ContractError):
        icosahedral_base("G3")


def test_line_graph_small_cases():
    star, _ = gen_line_graph(Multigraph(4, ((0, 1), (0, 2), (0, 3))))
    assert (star.n, star.m) == (3, 3)
    path, _ = gen_line_graph(Multigraph(4, ((0, 1), (1, 2), (2, 3))))
    assert (path.n, path.m) == (3, 2)
    parallel, _ = gen_line_graph(Multigraph(2, ((0, 1), (0, 1))))
    assert parallel.m == 1
    with pytest.raises(ContractError):
        Multigraph(2, ((1, 1),))


def test_antihat_base_triad():
    g, names = antihat_base(2)
    assert g.n == 8
    idx = {x: i for i, x in enumerate(names)}
    triad = [idx["a0"], idx["b1"], idx["c1"]]
    assert not any(g.has_edge(u, v) for u in triad for v in triad if u < v)
    assert find_claw(g) is None


def test_antihat_variants_and_rules():
    g, names = antihat_base(2, a0b0="edge")
    idx = {x: i for i, x in enumerate(names)}
    assert g.has_edge(idx["a0"], idx["b0"])
    with pytest.raises(ContractError):
        antihat_base(1)
    with pytest.raises(ContractError):
        antihat_base(2, X={"a0"})
    with pytest.raises(ContractError):
        antihat_base(2, X={"c1"})


def test_strip_sizes_at_multiplicity_one():
    gear = strip_gear(random.Random(0), 1, fuzz=0.0, X={"v9", "v10"})
    assert gear.graph.n == 8
    strange = strip_strange(random.Random(0), 1, fuzz=0.0)
    assert strange.graph.n == 7
    assert find_claw(gear.graph) is None and find_claw(strange.graph) is None


def test_hex_join_with_empty_term_is_identity():
    g, names = antihat_base(2)
    A = to_mask(i for i, x in enumerate(names) if x[0] == "a")
    B = to_mask(i for i, x in enumerate(names) if x[0] == "b")
    C = to_mask(i for i, x in enumerate(names) if x[0] == "c")
    h, cliques = gen_hex_join(0, (g, A, B, C), None)
    assert h == g and cliques == (A, B, C)
    h, _ = gen_hex_join(0, (g, A, B, C), (Graph.from_edges(0, []), 0, 0, 0))
    assert h == g


def test_alpha2_has_no_triad():
    for seed in range(20):
        assert oracle.independence_number(gen_alpha2(seed)) <= 2


@given(st.integers(0, 10_000), st.integers(0, 6))
def test_random_coloring_respects_palette(seed, extra):
    g = gen_alpha2(seed, n=8)
    k = oracle.chromatic_number(g)[0]
    c = random_coloring(g, k + extra, random.Random(seed))
    assert check_coloring(g, c)[0] and max(c.colors) < k + extra
    if k > 1:
        assert random_coloring(g, k - 1, random.Random(seed)) is None


@pytest.mark.parametrize("family", FAMILY_NAMES)
def test_families_are_claw_free_bounded_and_deterministic(family):
    for seed in range(12):
        inst = generate(family, seed)
        assert inst.graph.n <= MAX_N
        assert find_claw(inst.graph) is None
        again = generate(family, seed)
        assert again.graph == inst.graph
        assert again.annotation_json() == inst.annotation_json()
        if inst.join is not None:
            validate_join(inst.graph, inst.join)
        if family in THREE_CLIQUED:
            A, B, C = inst.cliques
            assert A | B | C == inst.graph.full
            for K in (A, B, C):
                assert oracle.omega(induced(inst.graph, K)[0]) == bin(K).count("1")


def test_generate_aliases():
    assert generate("icosahedral", 2, which="G1").family == "icosahedral-G1"
    assert generate("composite", 2, kind="gear").family == "composite-gear"
    with pytest.raises(ContractError):
        generate("no-such-family", 0)
