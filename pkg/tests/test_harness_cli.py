import json
from fractions import Fraction

import pytest

from clawcolor.cli import main, parse_duration
from clawcolor.colorers.pipeline import color_claw_free
from clawcolor.harness import (BoundReport, CampaignConfig, audit_good_triads, read_coloring, read_graph,
                               read_hints, run_campaign, verify_bounds, write_bundle)
from clawcolor.generators import generate
from clawcolor.graph import Coloring, Graph


def _cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_verify_five_cycle():
    g = _cycle(5)
    r = verify_bounds(g, color_claw_free(g))
    assert r.ok
    assert (r.omega, r.chi_exact, r.chi_f, r.gamma, r.colors_used) == (2, 3, Fraction(5, 2), 3, 3)


def test_verify_icosahedron(icosahedron):
    r = verify_bounds(icosahedron, color_claw_free(icosahedron), audit_triads=True)
    assert r.ok and r.chi_exact == 4 and r.gamma == 5 and r.chi_f == 4


def test_verify_flags_bad_coloring():
    g = _cycle(5)
    r = verify_bounds(g, Coloring((0, 0, 1, 0, 1)))
    assert not r.ok and not r.verdicts["proper"]
    assert r.violating_edge is not None
    assert not verify_bounds(g, Coloring((0, 1))).verdicts["proper"]


def test_verify_flags_claw():
    r = verify_bounds(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert not r.verdicts["claw_free"]


def test_caps_skip_exact_parameters():
    r = verify_bounds(_cycle(7), chi_cap=5, chi_f_cap=5)
    assert r.chi_exact is None and r.chi_f is None and "chi_le_gamma" not in r.verdicts


def test_report_json_round_trip():
    r = verify_bounds(_cycle(5), Coloring((0, 1, 0, 1, 2)))
    assert BoundReport.from_json(json.loads(json.dumps(r.to_json()))) == r


def test_triad_audit_on_antihat():
    checked, failures = audit_good_triads(generate("antihat", 2).graph)
    assert checked >= 1 and not failures


def test_bundle_round_trip(tmp_path):
    inst = generate("composite-strange", 5)
    c = color_claw_free(inst.graph, inst.hints())
    write_bundle(tmp_path, inst.graph, inst.annotation_json(), c, verify_bounds(inst.graph, c))
    assert {p.name for p in tmp_path.iterdir()} == {"graph.col", "annotation.json", "coloring.json", "report.json"}
    assert read_graph(tmp_path / "graph.col") == inst.graph
    assert read_coloring(tmp_path / "coloring.json") == c
    assert read_hints(tmp_path / "annotation.json")["join"] == inst.join


def test_small_campaign_is_deterministic(tmp_path):
    cfg = CampaignConfig(families=[("antihat", {}), ("composite-gear", {})], seeds=(0, 4),
                         out_dir=str(tmp_path / "a"))
    s1 = run_campaign(cfg)
    cfg.out_dir = str(tmp_path / "b")
    cfg.workers = 2
    s2 = run_campaign(cfg)
    assert s1["ok"] and s1["instances"] == 8
    files = sorted(p.relative_to(tmp_path / "a") for p in (tmp_path / "a").rglob("*") if p.is_file())
    assert len(files) == 1 + 8 * 4
    for rel in files:
        assert (tmp_path / "a" / rel).read_bytes() == (tmp_path / "b" / rel).read_bytes()
    assert s1["records"] == s2["records"]


def test_parse_duration():
    assert parse_duration("5s") == 5.0
    assert parse_duration("250ms") == 0.25
    assert parse_duration("2m") == 120.0
    assert parse_duration("3") == 3.0


def test_cli_round_trip(tmp_path, capsys):
    out = tmp_path / "b"
    assert main(["gen", "--family", "icosahedral", "--which", "G1", "--seed", "3", "--out", str(out)]) == 0
    assert main(["color", str(out / "graph.col"), "--hints", str(out / "annotation.json"), "--budget", "5s"]) == 0
    assert main(["verify", str(out / "graph.col"), str(out / "coloring.json")]) == 0
    assert main(["reduce", str(out / "graph.col")]) == 0
    assert (out / "skeletal.col").exists() and (out / "trace.json").exists()
    text = capsys.readouterr().out
    assert "proper: PASS" in text


def test_cli_join_and_campaign(tmp_path, capsys):
    out = tmp_path / "c"
    assert main(["gen", "--family", "composite", "--kind", "pseudo-line", "--seed", "1", "--out", str(out)]) == 0
    join = json.loads((out / "annotation.json").read_text())["join"]
    (out / "join.json").write_text(json.dumps(join))
    assert main(["color", str(out / "graph.col"), "--join", str(out / "join.json")]) == 0
    capsys.readouterr()
    assert main(["campaign", "--families", "alpha2", "ttc5", "--seeds", "3", "--out", str(tmp_path / "k")]) == 0
    assert json.loads(capsys.readouterr().out)["instances"] == 6


def test_cli_reports_errors(tmp_path, capsys):
    bad = tmp_path / "claw.col"
    bad.write_text("p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n")
    assert main(["color", str(bad)]) == 2
    assert "ContractError" in capsys.readouterr().err
    junk = tmp_path / "junk.col"
    junk.write_text("p edge x\n")
    assert main(["color", str(junk)]) == 2
    assert main(["verify", str(tmp_path / "missing.col"), str(bad)]) == 2
    with pytest.raises(SystemExit):
        main(["gen", "--family", "antihat"])
