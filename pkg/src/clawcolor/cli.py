"""Command line entry point: gen, color, reduce, verify and campaign."""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .colorers.pipeline import color_claw_free
from .errors import ClawColorError
from .generators import FAMILY_NAMES, generate
from .graph import emit_dimacs
from .harness import (CHI_CAP, CHI_F_CAP, CampaignConfig, _dump, read_coloring, read_graph,
                      read_hints, run_campaign, verify_bounds, write_bundle)
from .reduce import make_skeletal


def parse_duration(text: str) -> float:
    """'5s', '500ms', '2m' or a bare number of seconds."""
    m = re.fullmatch(r"\s*([0-9]*\.?[0-9]+)\s*(ms|s|m)?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"bad duration {text!r}")
    value = float(m.group(1))
    return value * {"ms": 1e-3, "s": 1.0, "m": 60.0, None: 1.0}[m.group(2)]


def _param(text: str):
    key, _, raw = text.partition("=")
    if not key or not _:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def _print_report(report) -> None:
    for name, ok in sorted(report.verdicts.items()):
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
    fields = ("n", "m", "max_degree", "omega", "gamma_local", "gamma", "chi_exact", "colors_used")
    print(" ".join(f"{k}={getattr(report, k)}" for k in fields))


def cmd_gen(args) -> int:
    params = dict(args.param or [])
    if args.which:
        params["which"] = args.which
    if args.kind:
        params["kind"] = args.kind
    inst = generate(args.family, args.seed, **params)
    out = Path(args.out) if args.out else Path("bundles") / f"{inst.family}-seed-{args.seed:05d}"
    write_bundle(out, inst.graph, inst.annotation_json())
    print(out)
    return 0


def cmd_color(args) -> int:
    g = read_graph(args.graph)
    hints = {}
    for path in (args.hints, args.join):
        if path:
            hints.update(read_hints(path))
    log: list = []
    c = color_claw_free(g, hints, budget=args.budget, log=log)
    report = verify_bounds(g, c, args.chi_cap, args.chi_f_cap)
    out = Path(args.out) if args.out else Path(args.graph).parent
    out.mkdir(parents=True, exist_ok=True)
    (out / "coloring.json").write_text(_dump(list(c.colors)))
    (out / "report.json").write_text(_dump(report.to_json()))
    if args.verbose:
        for line in log:
            print(f"# {line}")
    _print_report(report)
    return 0 if report.ok else 1


def cmd_reduce(args) -> int:
    g = read_graph(args.graph)
    sk, trace = make_skeletal(g)
    out = Path(args.out) if args.out else Path(args.graph).parent
    out.mkdir(parents=True, exist_ok=True)
    (out / "skeletal.col").write_text(emit_dimacs(sk))
    (out / "trace.json").write_text(_dump(trace.to_json()))
    print(f"{len(trace)} reduction step(s); removed {g.m - sk.m} edge(s)")
    return 0


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    c = read_coloring(args.coloring)
    report = verify_bounds(g, c, args.chi_cap, args.chi_f_cap)
    if args.out:
        Path(args.out).write_text(_dump(report.to_json()))
    _print_report(report)
    return 0 if report.ok else 1


def cmd_campaign(args) -> int:
    families = [(f, {}) for f in (args.families or FAMILY_NAMES)]
    cfg = CampaignConfig(families=families, seeds=(args.seed_start, args.seed_start + args.seeds),
                         out_dir=args.out, chi_cap=args.chi_cap, chi_f_cap=args.chi_f_cap,
                         audit_triads=args.audit_triads, workers=args.workers)
    summary = run_campaign(cfg)
    summary.pop("records")
    print(json.dumps(summary, sort_keys=True, indent=1))
    return 0 if summary["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clawcolor", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance bundle")
    g.add_argument("--family", required=True, help="one of " + ", ".join(FAMILY_NAMES) + "; or 'icosahedral' / 'composite' with --which / --kind")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--which", choices=["G0", "G1", "G2"])
    g.add_argument("--kind", help="strip kind for composites")
    g.add_argument("--param", action="append", type=_param, help="extra generator parameter key=value")
    g.add_argument("--out", help="bundle directory")
    g.set_defaults(func=cmd_gen)

    def caps(sp):
        sp.add_argument("--chi-cap", type=int, default=CHI_CAP)
        sp.add_argument("--chi-f-cap", type=int, default=CHI_F_CAP)

    c = sub.add_parser("color", help="color a DIMACS graph")
    c.add_argument("graph")
    c.add_argument("--join", help="annotation file carrying a join annotation")
    c.add_argument("--hints", help="annotation file with any structure hints")
    c.add_argument("--budget", type=parse_duration, default=None, help="time limit, e.g. 5s")
    c.add_argument("--out", help="directory for coloring.json and report.json")
    c.add_argument("-v", "--verbose", action="store_true")
    caps(c)
    c.set_defaults(func=cmd_color)

    r = sub.add_parser("reduce", help="reduce a graph to a skeletal one")
    r.add_argument("graph")
    r.add_argument("--out")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", help="audit a coloring against the bounds")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.add_argument("--out", help="write report.json here")
    caps(v)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("campaign", help="run a seeded campaign")
    k.add_argument("--families", nargs="*", choices=FAMILY_NAMES)
    k.add_argument("--seeds", type=int, default=50, help="number of seeds per family")
    k.add_argument("--seed-start", type=int, default=0)
    k.add_argument("--out")
    k.add_argument("--workers", type=int, default=None, help="defaults to $CLAWCOLOR_WORKERS or 1")
    k.add_argument("--audit-triads", action="store_true")
    caps(k)
    k.set_defaults(func=cmd_campaign)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClawColorError as exc:
        mod = type(exc).__module__.split(".")[0]
        print(f"{mod}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"clawcolor: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
