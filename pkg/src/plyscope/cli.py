"""Command-line front end: ply computation, verification, layouts,
minimization, the benchmark harness, the empty-ply test, and the local
exploration service."""

from __future__ import annotations

import argparse
import json
import sys

from .bench import CSV_HEADER, run_bench, to_csv
from .corpus import CorpusSpec
from .formats import ParseError, load_auto, read_gml, write_gml
from .layout import (
    LayoutConfig,
    RefineConfig,
    layout_circular,
    layout_organic,
    layout_random,
    minimize,
)
from .model import StructuralError, density, drawing_to_json
from .oracle import OracleCapError, empty_ply, oracle_ply
from .sweep import compute_ply

_LAYOUT_FNS = {
    "random": layout_random,
    "circular": layout_circular,
    "organic": layout_organic,
}


def _read_file(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _load_configs(path: str | None, seed: int) -> tuple[LayoutConfig, RefineConfig]:
    layout_kwargs: dict = {}
    refine_kwargs: dict = {}
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        layout_kwargs = dict(obj.get("layout", {}))
        refine_kwargs = dict(obj.get("refine", {}))
    layout_kwargs.setdefault("seed", seed)
    refine_kwargs.setdefault("seed", seed)
    return LayoutConfig(**layout_kwargs), RefineConfig(**refine_kwargs)


def cmd_compute(args) -> int:
    try:
        data = _read_file(args.path)
        graph, drawing, _ = read_gml(data)
    except (OSError, ParseError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    trace = sys.stderr if args.verbose else None
    report = compute_ply(graph, drawing, trace=trace)
    out = report.to_json()
    if args.verify:
        try:
            oracle, probe = oracle_ply(graph, drawing)
            out["oracle"] = {"ply": oracle, "witness": {"x": probe.x, "y": probe.y}}
            out["agrees"] = oracle == report.ply
        except OracleCapError as exc:
            out["oracle"] = {"refused": str(exc)}
    if args.format == "csv":
        print(CSV_HEADER)
        d = density(graph) if graph.n else 0.0
        print(
            f"{args.path},{graph.n},{graph.m},{d:.6g},file,{report.ply},"
            f"{report.events},{report.postponed},{report.dropped},{report.elapsed_ms:.4f}"
        )
    else:
        print(json.dumps(out))
    return 0


def cmd_layout(args) -> int:
    if args.algorithm not in _LAYOUT_FNS:
        print(f"error: unknown algorithm {args.algorithm!r}", file=sys.stderr)
        return 2
    try:
        data = _read_file(args.path)
        loaded = load_auto(data)
    except (OSError, ParseError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    layout_config, _ = _load_configs(args.config, args.seed)
    drawing = _LAYOUT_FNS[args.algorithm](loaded.graph, layout_config)
    out = write_gml(loaded.graph, drawing, loaded.original_ids)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(out)
    else:
        sys.stdout.buffer.write(out)
    report = compute_ply(loaded.graph, drawing)
    print(json.dumps({"ply": report.ply, "layout": args.algorithm}), file=sys.stderr)
    return 0


def cmd_minimize(args) -> int:
    try:
        data = _read_file(args.path)
        loaded = load_auto(data)
    except (OSError, ParseError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    layout_config, refine_config = _load_configs(args.config, args.seed)
    result = minimize(loaded.graph, layout_config, refine_config)
    out = write_gml(loaded.graph, result.drawing, loaded.original_ids)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(out)
    print("iteration,ply")
    for it, ply in result.trajectory:
        print(f"{it},{ply}")
    print(
        json.dumps({"best_ply": result.ply, "fallback": result.fallback}),
        file=sys.stderr,
    )
    return 0


def cmd_bench(args) -> int:
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            spec = CorpusSpec.from_json(json.load(fh))
    else:
        spec = CorpusSpec(
            generator=args.generator,
            n_min=args.n_min,
            n_max=args.n_max,
            density_min=args.density_min,
            density_max=args.density_max,
            count=args.count,
            seed=args.seed,
        )
    layout_config, _ = _load_configs(args.config, args.seed)
    layouts = tuple(args.layouts.split(","))
    records, averages = run_bench(spec, layouts, layout_config)
    csv = to_csv(records, averages)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def cmd_emptyply(args) -> int:
    try:
        data = _read_file(args.path)
        graph, drawing, _ = read_gml(data)
    except (OSError, ParseError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    verdict = empty_ply(graph, drawing)
    print(
        json.dumps(
            {"empty": verdict.empty, "violations": [list(p) for p in verdict.violations]}
        )
    )
    return 0


def cmd_export_json(args) -> int:
    try:
        data = _read_file(args.path)
        graph, drawing, _ = read_gml(data)
    except (OSError, ParseError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(drawing_to_json(graph, drawing)))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plyscope", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="ply of a GML drawing")
    c.add_argument("path")
    c.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("-v", "--verbose", action="store_true", help="event trace on stderr")
    c.set_defaults(fn=cmd_compute)

    l = sub.add_parser("layout", help="lay out a graph and write GML")
    l.add_argument("path", help="GraphML or GML input")
    l.add_argument("algorithm", help="random | circular | organic")
    l.add_argument("--seed", type=int, default=0)
    l.add_argument("--config", help="JSON config file")
    l.add_argument("--out", help="output GML path (default stdout)")
    l.set_defaults(fn=cmd_layout)

    m = sub.add_parser("minimize", help="ply minimization workflow")
    m.add_argument("path")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--config", help="JSON config file")
    m.add_argument("--out", help="output GML path")
    m.set_defaults(fn=cmd_minimize)

    b = sub.add_parser("bench", help="benchmark harness over generated corpora")
    b.add_argument("--spec", help="corpus spec JSON file")
    b.add_argument("--generator", default="random-gnm")
    b.add_argument("--n-min", type=int, default=10)
    b.add_argument("--n-max", type=int, default=100)
    b.add_argument("--density-min", type=float, default=0.9)
    b.add_argument("--density-max", type=float, default=1.8)
    b.add_argument("--count", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--config", help="JSON config file")
    b.add_argument("--layouts", default="organic,circular,random")
    b.add_argument("--out", help="CSV output path (default stdout)")
    b.set_defaults(fn=cmd_bench)

    e = sub.add_parser("emptyply", help="empty-ply test for a GML drawing")
    e.add_argument("path")
    e.set_defaults(fn=cmd_emptyply)

    j = sub.add_parser("json", help="viewer JSON export of a GML drawing")
    j.add_argument("path")
    j.set_defaults(fn=cmd_export_json)

    s = sub.add_parser("serve", help="start the local exploration service")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=7878)
    s.set_defaults(fn=cmd_serve)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
