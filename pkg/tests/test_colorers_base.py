import math

import pytest
from hypothesis import given, strategies as st

from clawcolor import oracle
from clawcolor.colorers.base import (CIRCULAR, LINEAR, IntervalRepresentation, color_alpha2,
                                     color_circular_interval, color_linear_interval)
from clawcolor.errors import ContractError
from clawcolor.generators import gen_alpha2, gen_interval
from clawcolor.graph import Graph, check_coloring, complement


@given(st.integers(0, 100_000))
def test_alpha2_is_optimal(seed):
    g = gen_alpha2(seed)
    c = color_alpha2(g)
    assert check_coloring(g, c)[0]
    assert c.k == oracle.chromatic_number(g)[0] == g.n - len(oracle.max_matching(complement(g)))


def test_alpha2_rejects_triads():
    with pytest.raises(ContractError):
        color_alpha2(Graph(3, [0, 0, 0]))


def test_c5_alpha2():
    assert color_alpha2(Graph.cycle(5)).k == 3


@given(st.integers(0, 100_000), st.integers(1, 16))
def test_linear_interval_uses_omega(seed, n):
    g, rep = gen_interval(seed, n, LINEAR)
    c = color_linear_interval(rep, g)
    assert check_coloring(g, c)[0]
    assert c.k == oracle.omega(g) == oracle.chromatic_number(g)[0]


@given(st.integers(0, 100_000), st.integers(1, 14))
def test_circular_interval_rounds_up(seed, n):
    g, rep = gen_interval(seed, n, CIRCULAR)
    c = color_circular_interval(rep, g)
    assert check_coloring(g, c)[0]
    assert c.k == oracle.chromatic_number(g)[0] == math.ceil(oracle.fractional_chromatic(g))


def test_linear_covering_everything_is_complete():
    rep = IntervalRepresentation(LINEAR, (2, 0, 1, 3), ((0, 3),))
    assert rep.graph() == Graph.complete(4)


def test_c5_as_circular_interval():
    rep = IntervalRepresentation(CIRCULAR, tuple(range(5)), tuple((i, (i + 1) % 5) for i in range(5)))
    assert rep.graph() == Graph.cycle(5)
    assert color_circular_interval(rep, rep.graph()).k == 3
    assert not rep.is_long() or rep.n >= 5


def test_representation_checks():
    with pytest.raises(ContractError):
        IntervalRepresentation(LINEAR, (0, 1), ((1, 0),))
    with pytest.raises(ContractError):
        IntervalRepresentation(LINEAR, (0, 0), ())
    rep = IntervalRepresentation(LINEAR, (0, 1), ((0, 1),))
    with pytest.raises(ContractError):
        rep.validate(Graph(2, [0, 0]))
    assert IntervalRepresentation.from_json(rep.to_json()) == rep
