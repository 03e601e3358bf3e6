"""Acceptance criteria; each test prints one CRITERION line and asserts it."""
import math
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

from clawcolor import oracle
from clawcolor.colorers.base import color_alpha2, color_circular_interval
from clawcolor.colorers.extend import extend, join_threshold
from clawcolor.colorers.icosahedral import color_icosahedral
from clawcolor.colorers.joins import KINDS
from clawcolor.colorers.pipeline import color_claw_free
from clawcolor.colorers.thickening import ThickeningSpec
from clawcolor.detect import find_claw
from clawcolor.generators import (FAMILY_NAMES, THREE_CLIQUED, gen_alpha2, gen_icosahedral,
                                  gen_strip_composite, generate, icosahedral_base, random_coloring)
from clawcolor.graph import check_coloring, complement, induced, to_mask
from clawcolor.harness import CampaignConfig, run_campaign
from clawcolor.reduce import lift_through_trace, make_skeletal

from .conftest import record

SEEDS = 50


@pytest.fixture(scope="module")
def campaign(tmp_path_factory):
    out = tmp_path_factory.mktemp("campaign")
    cfg = CampaignConfig(seeds=(0, SEEDS), out_dir=str(out), audit_triads=True, workers=1)
    t0 = time.perf_counter()
    summary = run_campaign(cfg)
    return cfg, summary, time.perf_counter() - t0


def test_criterion_1_global_bound(campaign):
    _, summary, elapsed = campaign
    recs = summary["records"]
    families = {r["family"] for r in recs}
    bad = []
    for r in recs:
        rep = r.get("report")
        v = rep["verdicts"] if rep else {}
        if ("error" in r or rep["n"] > 18 or rep["chi_exact"] is None or rep["chi_exact"] > rep["gamma"]
                or not v.get("proper") or not v.get("colors_le_gamma") or not v.get("claw_free")):
            bad.append((r["family"], r["seed"]))
    ok = len(recs) >= 1000 and families == set(FAMILY_NAMES) and not bad and elapsed < 600
    record(1, ok, f"{len(recs)} instances over {len(families)} families, {len(bad)} violations, "
                  f"worst slack {summary['worst_slack']}, {elapsed:.1f}s")
    assert ok, bad[:5]


def test_criterion_2_local_bound():
    count, bad = 0, []
    for family in THREE_CLIQUED:
        for seed in range(45):
            inst = generate(family, seed)
            g = inst.graph
            A, B, C = inst.cliques
            assert A | B | C == g.full and not (A & B or B & C or A & C)
            gl = oracle.gamma_local(g)
            chi = oracle.chromatic_number(g)[0]
            c = color_claw_free(g, inst.hints())
            count += 1
            if chi > gl or c.k > gl or not check_coloring(g, c)[0]:
                bad.append((family, seed, chi, c.k, gl))
    ok = count >= 300 and not bad
    record(2, ok, f"{count} three-cliqued instances, {len(bad)} exceeding the local bound")
    assert ok, bad[:5]


def _three_cliqued(g):
    return oracle.chromatic_number(complement(g))[0] <= 3


def test_criterion_3_skeletal_reduction():
    families = ("thickening", "icosahedral-G2", "antihat", "antiprismatic", "ttc5", "ttc6")
    count, reduced, bad = 0, 0, []
    for family in families:
        for seed in range(120):
            params = {"fuzz": 0.9} if family == "thickening" else {}
            inst = generate(family, seed, max_n=16, **params)
            if inst.thickening is None or not inst.thickening.fuzzy:
                continue
            g = inst.graph
            sk, trace = make_skeletal(g)
            count += 1
            reduced += len(trace) > 0
            chi, base = oracle.chromatic_number(sk)
            lifted = lift_through_trace(g, trace, base)
            fails = []
            if oracle.chromatic_number(g)[0] != chi:
                fails.append("chi")
            if find_claw(sk) is not None:
                fails.append("claw")
            if _three_cliqued(g) and not _three_cliqued(sk):
                fails.append("three-cliqued")
            if not check_coloring(g, lifted)[0] or lifted.k != base.k:
                fails.append("lift")
            if fails:
                bad.append((family, seed, fails))
    ok = count >= 500 and not bad
    record(3, ok, f"{count} fuzzy thickenings (n<=16, {reduced} nonskeletal), {len(bad)} failures")
    assert ok, bad[:5]


def test_criterion_4_alpha2():
    count, bad = 0, []
    for seed in range(300):
        g = gen_alpha2(seed)
        assert g.n <= 14 and oracle.independence_number(g) <= 2
        c = color_alpha2(g)
        chi = oracle.chromatic_number(g)[0]
        formula = g.n - len(oracle.max_matching(complement(g)))
        count += 1
        if not (check_coloring(g, c)[0] and c.k == chi == formula):
            bad.append((seed, c.k, chi, formula))
    ok = count >= 300 and not bad
    record(4, ok, f"{count} complements of triangle-free graphs, {len(bad)} disagreements")
    assert ok, bad[:5]


def test_criterion_5_circular_round_up():
    count, bad = 0, []
    for seed in range(200):
        inst = generate("circular-interval", seed, max_n=16)
        g, rep = inst.graph, inst.interval
        c = color_circular_interval(rep, g)
        chi = oracle.chromatic_number(g)[0]
        chi_f = oracle.fractional_chromatic(g, cap=16)
        count += 1
        if not (check_coloring(g, c)[0] and c.k == chi == math.ceil(chi_f)):
            bad.append((seed, c.k, chi, chi_f))
    ok = count >= 200 and not bad
    record(5, ok, f"{count} circular interval graphs (n<=16), {len(bad)} disagreements")
    assert ok, bad[:5]


def test_criterion_6_good_triads(campaign):
    _, summary, _ = campaign
    checked = summary["good_triads_checked"]
    unsound = [(r["family"], r["seed"]) for r in summary["records"]
               if r.get("report") and not r["report"]["verdicts"].get("good_triads_sound", False)]
    ok = checked > 0 and not unsound
    record(6, ok, f"{checked} good triads re-verified, {len(unsound)} instances with a failure")
    assert ok, unsound[:5]


def test_criterion_7_icosahedral():
    base, names = icosahedral_base("G0")
    spec = ThickeningSpec(base, (1,) * 12, family="icosahedral-G0", names=tuple(names))
    c0 = color_icosahedral(spec, base)
    exact = check_coloring(base, c0)[0] and c0.k == 4 and oracle.gamma(base) == 5
    count, bad = 0, []
    for which in ("G0", "G1", "G2"):
        for seed in range(40):
            spec, g = gen_icosahedral(seed, which)
            c = color_icosahedral(spec, g)
            count += 1
            if not check_coloring(g, c)[0] or c.k > oracle.gamma_local(g):
                bad.append((which, seed))
    ok = exact and count >= 100 and not bad
    record(7, ok, f"icosahedron {c0.k} colors vs gamma {oracle.gamma(base)}; {count} thickenings, {len(bad)} failures")
    assert ok, bad[:5]


def test_criterion_8_extensions():
    lines, ok = [], True
    for kind in KINDS:
        done, bad, seed = 0, [], 0
        while done < 100 and seed < 400:
            g, j = gen_strip_composite(seed, kind, max_n=18)
            l = join_threshold(g, j)
            G1, index = induced(g, g.full & ~to_mask(j.V2))
            c1 = random_coloring(G1, l, random.Random(seed))
            seed += 1
            if c1 is None:
                continue
            done += 1
            try:
                c = extend(g, j, c1, l)
            except Exception as exc:
                bad.append((seed - 1, type(exc).__name__))
                continue
            agrees = all(c[old] == c1[new] for old, new in index.items())
            if not (agrees and check_coloring(g, c)[0] and max(c.colors) < l):
                bad.append((seed - 1, "result"))
        ok &= done >= 100 and not bad
        lines.append(f"{kind} {done - len(bad)}/{done}")
    record(8, ok, "; ".join(lines))
    assert ok


def test_criterion_9_bound_chain(campaign):
    _, summary, _ = campaign
    full, bad = 0, []
    for r in summary["records"]:
        rep = r.get("report")
        if rep is None or rep["chi_f"] is None:
            continue
        full += 1
        chain = [rep["omega"], Fraction(rep["chi_f"]), rep["gamma_local"], rep["gamma"], rep["max_degree"] + 1]
        if not (all(a <= b for a, b in zip(chain, chain[1:])) and rep["verdicts"]["bound_chain"]):
            bad.append((r["family"], r["seed"]))
    ok = full > 0 and not bad
    record(9, ok, f"{full} instances with every quantity computed, {len(bad)} chain violations")
    assert ok, bad[:5]


def test_criterion_10_determinism(campaign, tmp_path):
    cfg, _, _ = campaign
    first = cfg.out_dir
    again = CampaignConfig(seeds=cfg.seeds, out_dir=str(tmp_path), audit_triads=True, workers=2)
    run_campaign(again)
    a, b = Path(first), Path(tmp_path)
    fa = sorted(p.relative_to(a) for p in a.rglob("*") if p.is_file())
    fb = sorted(p.relative_to(b) for p in b.rglob("*") if p.is_file())
    diff = [str(p) for p in fa if (a / p).read_bytes() != (b / p).read_bytes()] if fa == fb else ["file lists"]
    ok = len(fa) > 1000 and not diff
    record(10, ok, f"{len(fa)} files compared across two runs (1 and 2 workers), {len(diff)} differing")
    assert ok, diff[:5]
