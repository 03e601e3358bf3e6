"""Bound reports, instance bundles and seeded campaigns."""
from __future__ import annotations

import json
import os
import shutil
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import oracle
from .colorers.pipeline import color_claw_free
from .detect import find_claw, find_good_triad, find_triad
from .errors import ClawColorError
from .generators import FAMILY_NAMES, Instance, generate
from .graph import Coloring, Graph, check_coloring, emit_dimacs, parse_dimacs, remove_vertices
from .reduce import make_skeletal

CHI_CAP = 20
CHI_F_CAP = 16
WORKERS_ENV = "CLAWCOLOR_WORKERS"


@dataclass
class BoundReport:
    n: int
    m: int
    max_degree: int
    omega: int
    alpha: int
    gamma: int
    gamma_local: int
    chi_exact: int | None = None
    chi_f: Fraction | None = None
    colors_used: int | None = None
    violating_edge: tuple | None = None
    good_triads_checked: int | None = None
    verdicts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        d = asdict(self)
        d["chi_f"] = None if self.chi_f is None else str(self.chi_f)
        d["violating_edge"] = None if self.violating_edge is None else list(self.violating_edge)
        d["ok"] = self.ok
        return d

    @classmethod
    def from_json(cls, d: dict) -> "BoundReport":
        d = {k: v for k, v in d.items() if k != "ok"}
        if d.get("chi_f") is not None:
            d["chi_f"] = Fraction(d["chi_f"])
        if d.get("violating_edge") is not None:
            d["violating_edge"] = tuple(d["violating_edge"])
        return cls(**d)


def audit_good_triads(g: Graph) -> tuple[int, list]:
    """Replay triad peeling and check every returned triad.

    Each certificate must verify and removing the triad must lower the local
    bound by at least one. Returns (triads checked, failures).
    """
    checked, failures = 0, []
    h, _ = make_skeletal(g)
    while h.n and find_triad(h) is not None:
        cert = find_good_triad(h)
        if cert is None:
            break
        checked += 1
        rest, _ = remove_vertices(h, cert.triad)
        before, after = oracle.gamma_local(h), oracle.gamma_local(rest)
        if not cert.verify(h) or after > before - 1:
            failures.append({"triad": list(cert.triad), "gamma_local": [before, after]})
        h, _ = make_skeletal(rest)
    return checked, failures


def verify_bounds(g: Graph, c: Coloring | None = None, chi_cap: int = CHI_CAP,
                  chi_f_cap: int = CHI_F_CAP, audit_triads: bool = False) -> BoundReport:
    """Every in-cap parameter of g, the bound chain and, if given, an audit of c."""
    delta = g.max_degree() if g.n else 0
    w = oracle.omega(g)
    r = BoundReport(n=g.n, m=g.m, max_degree=delta, omega=w, alpha=oracle.independence_number(g),
                    gamma=oracle.gamma(g), gamma_local=oracle.gamma_local(g))
    v = r.verdicts
    v["claw_free"] = find_claw(g) is None
    if g.n <= chi_cap:
        r.chi_exact = oracle.chromatic_number(g)[0]
        v["chi_le_gamma"] = r.chi_exact <= r.gamma
        v["chi_le_gamma_local"] = r.chi_exact <= r.gamma_local
    if g.n <= chi_f_cap:
        r.chi_f = oracle.fractional_chromatic(g, cap=chi_f_cap)
    chain = [Fraction(w)]
    if r.chi_f is not None:
        chain.append(r.chi_f)
    chain += [Fraction(r.gamma_local), Fraction(r.gamma), Fraction(delta + 1 if g.n else 0)]
    v["bound_chain"] = all(a <= b for a, b in zip(chain, chain[1:]))
    if r.chi_exact is not None and r.chi_f is not None:
        v["chi_f_le_chi"] = r.chi_f <= r.chi_exact
    if c is not None:
        if len(c) != g.n:
            v["proper"] = False
        else:
            ok, edge = check_coloring(g, c)
            v["proper"] = ok
            r.violating_edge = edge
        r.colors_used = len(set(c.colors))
        v["colors_le_gamma"] = r.colors_used <= r.gamma
    if audit_triads:
        checked, failures = audit_good_triads(g)
        r.good_triads_checked = checked
        v["good_triads_sound"] = not failures
    return r


# ------------------------------------------------------------------ bundles

def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def write_bundle(directory: Path, g: Graph, annotation: dict | None = None, coloring: Coloring | None = None,
                 report: BoundReport | None = None) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "graph.col").write_text(emit_dimacs(g))
    if annotation is not None:
        (directory / "annotation.json").write_text(_dump(annotation))
    if coloring is not None:
        (directory / "coloring.json").write_text(_dump(list(coloring.colors)))
    if report is not None:
        (directory / "report.json").write_text(_dump(report.to_json()))
    return directory


def read_graph(path) -> Graph:
    return parse_dimacs(Path(path).read_text())


def read_coloring(path) -> Coloring:
    return Coloring(tuple(json.loads(Path(path).read_text())))


def read_hints(path) -> dict:
    """Hints from an annotation file; a bare join annotation is accepted too."""
    d = json.loads(Path(path).read_text())
    if "X1" in d and "kind" in d:
        d = {"join": d}
    return Instance.hints_from_json(d)


# ------------------------------------------------------------------ campaigns

@dataclass
class CampaignConfig:
    """``families`` holds (family name, params) pairs; seeds run over ``range(*seeds)``."""

    families: list = field(default_factory=lambda: [(f, {}) for f in FAMILY_NAMES])
    seeds: tuple = (0, 50)
    out_dir: str | None = None
    chi_cap: int = CHI_CAP
    chi_f_cap: int = CHI_F_CAP
    audit_triads: bool = False
    workers: int | None = None

    def tasks(self) -> list:
        return [(fam, dict(params), seed) for fam, params in self.families for seed in range(*self.seeds)]


def _slug(family: str, params: dict) -> str:
    extra = "".join(f"_{k}-{params[k]}" for k in sorted(params))
    return family + extra


def _run_one(cfg: CampaignConfig, family: str, params: dict, seed: int) -> dict:
    rec: dict = {"family": family, "params": params, "seed": seed}
    try:
        inst = generate(family, seed, **params)
    except ClawColorError as exc:
        rec.update(stage="generate", error=f"{type(exc).__name__}: {exc}")
        return rec
    g = inst.graph
    rec["n"] = g.n
    coloring = None
    try:
        coloring = color_claw_free(g, inst.hints())
    except ClawColorError as exc:
        rec.update(stage="color", error=f"{type(exc).__name__}: {exc}")
    report = verify_bounds(g, coloring, cfg.chi_cap, cfg.chi_f_cap, cfg.audit_triads)
    rec["report"] = report.to_json()
    rec["ok"] = report.ok and coloring is not None
    if cfg.out_dir is not None:
        bundle = Path(cfg.out_dir) / _slug(family, params) / f"seed-{seed:05d}"
        write_bundle(bundle, g, inst.annotation_json(), coloring, report)
        if not rec["ok"]:
            target = Path(cfg.out_dir) / "violations" / f"{_slug(family, params)}-seed-{seed:05d}"
            if target.exists():
                shutil.rmtree(target)
            shutil.copytree(bundle, target)
    return rec


def _run_star(args):
    return _run_one(*args)


def run_campaign(cfg: CampaignConfig) -> dict:
    """Generate, color and audit every (family, seed); the summary is deterministic."""
    tasks = cfg.tasks()
    workers = cfg.workers if cfg.workers is not None else int(os.environ.get(WORKERS_ENV, "1"))
    args = [(cfg, fam, params, seed) for fam, params, seed in tasks]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_star, args, chunksize=max(1, len(args) // (4 * workers))))
    else:
        records = [_run_star(a) for a in args]
    summary = summarize(records)
    if cfg.out_dir is not None:
        Path(cfg.out_dir).mkdir(parents=True, exist_ok=True)
        (Path(cfg.out_dir) / "summary.json").write_text(_dump(summary))
    summary["records"] = records
    return summary


def summarize(records: list) -> dict:
    counts: dict = {}
    failures, violations = [], []
    worst = None
    triads = 0
    for rec in records:
        key = _slug(rec["family"], rec["params"])
        counts[key] = counts.get(key, 0) + 1
        if "error" in rec:
            failures.append({k: rec[k] for k in ("family", "params", "seed", "stage", "error")})
        rep = rec.get("report")
        if rep is None:
            continue
        bad = sorted(k for k, ok in rep["verdicts"].items() if not ok)
        if bad:
            violations.append({"family": rec["family"], "params": rec["params"], "seed": rec["seed"],
                               "failed": bad})
        if rep.get("chi_exact") is not None:
            slack = rep["gamma"] - rep["chi_exact"]
            worst = slack if worst is None else min(worst, slack)
        triads += rep.get("good_triads_checked") or 0
    return {
        "instances": len(records),
        "counts": counts,
        "failures": failures,
        "violations": violations,
        "worst_slack": worst,
        "good_triads_checked": triads,
        "ok": not failures and not violations,
    }
