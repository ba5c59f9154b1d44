"""Command-line entry point: ``injchrom {chi-i,gen,family,check,fixtures}``.

Exit codes: 0 no violations, 1 violations found, 2 operational error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .codec import Graph6Error, to_graph6_str
from .conjectures import BOUNDS, BoundError
from .families import FamilyError, FamilySpec, FixtureError, build, family_names, fixture_dir, load_manifest
from .graphcore import GraphError
from .harness import HarnessError, RunConfig, chi_i_records, fetch_fixture, report, run_check, verify_fixtures
from .smallgen import GenSpec, GenSpecError, generate

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def _cmd_chi_i(args) -> int:
    if args.input and args.input != "-":
        src = open(args.input, "rb")
    else:
        src = sys.stdin.buffer
    errors: list[str] = []
    out, close = _open_out(args.output)
    try:
        for rec in chi_i_records(src, strict=args.strict, budget=args.node_budget, errors=errors):
            out.write(rec + "\n")
            out.flush()
    except Graph6Error as e:
        print(f"injchrom: {e}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        if close:
            out.close()
        if src is not sys.stdin.buffer:
            src.close()
    for msg in errors:
        print(f"injchrom: skipped {msg}", file=sys.stderr)
    return EXIT_OK


def _gen_spec(args) -> GenSpec:
    return GenSpec(order=args.order, min_degree=args.min_degree, max_edges=args.max_edges,
                   connected=not args.disconnected, planar=args.planar, allow_large=args.allow_large)


def _cmd_gen(args) -> int:
    spec = _gen_spec(args)
    part = None
    if args.part:
        i, w = args.part
        part = (i, w)
    out, close = _open_out(args.output)
    count = 0
    try:
        for g in generate(spec, part=part):
            out.write(to_graph6_str(g) + "\n")
            count += 1
    finally:
        if close:
            out.close()
    print(f"injchrom: {count} graphs", file=sys.stderr)
    return EXIT_OK


def _cmd_family(args) -> int:
    mg = build(FamilySpec(args.name, tuple(args.params)))
    out, close = _open_out(args.output)
    try:
        out.write(to_graph6_str(mg.graph) + "\n")
    finally:
        if close:
            out.close()
    if args.marks:
        print(json.dumps(mg.marks, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def _cmd_check(args) -> int:
    cfg = RunConfig(
        min_degree=args.min_degree,
        girth_min=args.girth_min,
        connectivity_min=args.connectivity_min,
        planar=args.planar,
        bound=None if args.bound == "none" else args.bound,
        output_dir=args.output,
        workers=args.workers,
        node_budget=args.node_budget,
        strict=args.strict,
    )
    if args.input is not None:
        cfg.input_path = args.input
    if args.gen_order is not None:
        cfg.gen = GenSpec(order=args.gen_order, min_degree=args.min_degree, max_edges=args.max_edges,
                          connected=True, planar=args.planar, allow_large=args.allow_large)
    if args.family is not None:
        name, *params = args.family
        cfg.families = [FamilySpec(name, tuple(p.split(","))) for p in params] if params else [FamilySpec(name)]
    res = run_check(cfg)
    sys.stdout.write(report(res.table, "csv").decode())
    print(json.dumps(res.summary, sort_keys=True), file=sys.stderr)
    return res.exit_code


def _cmd_fixtures(args) -> int:
    d = Path(args.dir) if args.dir else fixture_dir()
    if args.action == "list":
        manifest = load_manifest(d)
        for name, e in sorted(manifest["fixtures"].items()):
            tag = " (substitute)" if e.get("substitute") else ""
            print(f"{name}\thog={e.get('hog_id')}\tn={e['n']}\tm={e['m']}\tdelta={e['max_degree']}\tchi_i={e['chi_i']}{tag}")
        return EXIT_OK
    if args.action == "verify":
        problems = verify_fixtures(d)
        bad = 0
        for name, probs in problems.items():
            print(f"{name}\t{'ok' if not probs else '; '.join(probs)}")
            bad += bool(probs)
        return EXIT_ERROR if bad else EXIT_OK
    if args.id is None:
        raise HarnessError("fetch needs a house-of-graphs id")
    line = fetch_fixture(args.id, network=args.network, directory=d, url_template=args.url)
    print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="injchrom", description="Exact injective chromatic numbers and bound checks.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("chi-i", help="print 'n delta girth chi_i' for each graph6 line")
    c.add_argument("input", nargs="?", help="graph6 file (default stdin)")
    c.add_argument("--strict", action="store_true", help="exit 2 on the first malformed line")
    c.add_argument("--node-budget", type=int, default=None)
    c.add_argument("--output", default=None)
    c.set_defaults(func=_cmd_chi_i)

    g = sub.add_parser("gen", help="emit non-isomorphic graphs as graph6")
    g.add_argument("order", type=int)
    g.add_argument("--min-degree", type=int, default=0)
    g.add_argument("--max-edges", type=int, default=None)
    g.add_argument("--planar", action="store_true")
    g.add_argument("--disconnected", action="store_true", help="also emit disconnected graphs")
    g.add_argument("--allow-large", action="store_true", help="lift the order limit")
    g.add_argument("--part", type=int, nargs=2, metavar=("INDEX", "COUNT"))
    g.add_argument("--output", default=None)
    g.set_defaults(func=_cmd_gen)

    f = sub.add_parser("family", help="emit one family member as graph6")
    f.add_argument("name", choices=family_names())
    f.add_argument("params", nargs="*")
    f.add_argument("--marks", action="store_true", help="print the vertex marks as JSON on stderr")
    f.add_argument("--output", default=None)
    f.set_defaults(func=_cmd_family)

    k = sub.add_parser("check", help="classify a stream against a bound and tabulate attainers")
    src = k.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="graph6 file ('-' for stdin)")
    src.add_argument("--gen-order", type=int, help="use the internal generator at this order")
    src.add_argument("--family", nargs="+", metavar="NAME_OR_PARAMS",
                     help="family name followed by comma-separated parameter tuples, e.g. prism 3 4 5")
    k.add_argument("--bound", choices=sorted(BOUNDS) + ["none"], default="luzar")
    k.add_argument("--min-degree", type=int, default=0)
    k.add_argument("--max-edges", type=int, default=None, help="edge cap for the internal generator")
    k.add_argument("--girth-min", type=int, default=0)
    k.add_argument("--connectivity-min", type=int, default=0)
    k.add_argument("--planar", action="store_true")
    k.add_argument("--allow-large", action="store_true")
    k.add_argument("--workers", type=int, default=1)
    k.add_argument("--node-budget", type=int, default=None)
    k.add_argument("--strict", action="store_true")
    k.add_argument("--output", default=None, help="directory for table, summary and violation log")
    k.set_defaults(func=_cmd_check)

    x = sub.add_parser("fixtures", help="list, verify or fetch fixtures")
    x.add_argument("action", choices=["list", "verify", "fetch"])
    x.add_argument("id", nargs="?", type=int)
    x.add_argument("--network", action="store_true", help="allow downloading")
    x.add_argument("--url", default=None, help="URL template with {id}")
    x.add_argument("--dir", default=None, help="fixture directory")
    x.set_defaults(func=_cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    try:
        return args.func(args)
    except (HarnessError, GenSpecError, FamilyError, FixtureError, BoundError, GraphError, Graph6Error, OSError) as e:
        print(f"injchrom: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
