import pytest

from clawcolor import oracle
from clawcolor.colorers.icosahedral import color_icosahedral
from clawcolor.colorers.thickening import ThickeningSpec, realize
from clawcolor.colorers.triads import peel_good_triads
from clawcolor.errors import BudgetExceeded, ContractError
from clawcolor.generators import gen_alpha2, gen_antihat, gen_icosahedral, icosahedral_base
from clawcolor.graph import Graph, check_coloring


def test_icosahedron_gets_four_colors():
    base, names = icosahedral_base("G0")
    spec = ThickeningSpec(base, (1,) * 12, family="icosahedral-G0", names=tuple(names))
    c = color_icosahedral(spec, base)
    assert check_coloring(base, c)[0]
    assert c.k == 4
    assert oracle.gamma(base) == 5


@pytest.mark.parametrize("which", ["G0", "G1", "G2"])
def test_icosahedral_thickenings_within_gamma_local(which):
    for seed in range(15):
        spec, g = gen_icosahedral(seed, which)
        log = []
        c = color_icosahedral(spec, g, log=log)
        assert check_coloring(g, c)[0]
        assert c.k <= oracle.gamma_local(g)
        assert any("round" in line for line in log)


def test_icosahedral_rejects_other_families():
    base, names = icosahedral_base("G0")
    spec = ThickeningSpec(base, (1,) * 12, family="antihat", names=tuple(names))
    with pytest.raises(ContractError):
        color_icosahedral(spec, base)


def test_icosahedral_rejects_mismatched_graph():
    spec, g = gen_icosahedral(0, "G1")
    other, _ = realize(gen_icosahedral(1, "G1")[0])
    if other == g:
        pytest.skip("seeds collide")
    with pytest.raises(ContractError):
        color_icosahedral(spec, other)


def test_antihat_peeling_within_gamma_local():
    peeled = 0
    for seed in range(30):
        _, g, _ = gen_antihat(seed)
        c = peel_good_triads(g)
        if c is None:
            continue
        peeled += 1
        assert check_coloring(g, c)[0]
        assert c.k <= oracle.gamma_local(g)
    assert peeled >= 20


def test_peeling_without_triads_matches_chi():
    for seed in range(20):
        g = gen_alpha2(seed, n=10)
        c = peel_good_triads(g)
        assert check_coloring(g, c)[0]
        assert c.k == oracle.chromatic_number(g)[0]


def test_peeling_logs_triads():
    _, g, _ = gen_antihat(3)
    log = []
    peel_good_triads(g, log=log)
    assert log


def test_peeling_budget():
    _, g, _ = gen_antihat(3)
    with pytest.raises(BudgetExceeded):
        peel_good_triads(g, budget=0)


def test_peeling_empty_graph():
    assert peel_good_triads(Graph.from_edges(0, [])).k == 0
