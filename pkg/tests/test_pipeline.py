import pytest
from hypothesis import given

from clawcolor import oracle
from clawcolor.colorers.pipeline import color_claw_free, find_clique_cutset
from clawcolor.detect import find_claw
from clawcolor.errors import BudgetExceeded, ContractError
from clawcolor.generators import FAMILY_NAMES, generate, icosahedral_base
from clawcolor.graph import Graph, check_coloring, remove_vertices

from .conftest import graphs, line_graphs


def _cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_five_cycle():
    c = color_claw_free(_cycle(5))
    assert check_coloring(_cycle(5), c)[0] and c.k == 3


def test_icosahedron_unhinted_and_hinted(icosahedron):
    assert color_claw_free(icosahedron).k == 4
    inst = generate("icosahedral-G0", 0)
    c = color_claw_free(inst.graph, inst.hints())
    assert check_coloring(inst.graph, c)[0]
    assert c.k <= oracle.gamma(inst.graph)


def test_claw_is_rejected():
    with pytest.raises(ContractError):
        color_claw_free(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))


def test_zero_budget():
    inst = generate("antihat", 0)
    with pytest.raises(BudgetExceeded):
        color_claw_free(inst.graph, budget=0.0)


def test_empty_and_edgeless():
    assert color_claw_free(Graph.from_edges(0, [])).k == 0
    assert color_claw_free(Graph.from_edges(3, [])).k == 1


def test_log_names_route():
    inst = generate("composite-gear", 1)
    log = []
    color_claw_free(inst.graph, inst.hints(), log=log)
    assert log


def test_clique_cutset_splits():
    # two triangles sharing an edge plus a pendant on each side
    g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 5)])
    K = find_clique_cutset(g)
    assert K is not None
    rest, _ = remove_vertices(g, K)
    assert rest.n and find_claw(g) is None


@pytest.mark.parametrize("family", FAMILY_NAMES)
def test_every_family_within_gamma(family):
    for seed in range(8):
        inst = generate(family, seed)
        g = inst.graph
        for hints in (inst.hints(), None):
            c = color_claw_free(g, hints)
            assert check_coloring(g, c)[0]
            assert c.k <= oracle.gamma(g)


@given(line_graphs())
def test_line_graphs_within_gamma(g):
    c = color_claw_free(g)
    assert check_coloring(g, c)[0]
    assert c.k <= oracle.gamma(g)


@given(graphs(max_n=9))
def test_claw_free_random_graphs(g):
    if find_claw(g) is not None:
        with pytest.raises(ContractError):
            color_claw_free(g)
        return
    c = color_claw_free(g)
    assert check_coloring(g, c)[0]
    assert oracle.chromatic_number(g)[0] <= c.k <= oracle.gamma(g)
