#!/usr/bin/env python3
"""Desk-scale experiment runner: layout comparisons, density sweeps,
caterpillar timings, and the minimization workflow, written as CSVs into
results/ for further analysis.

Usage:
    python3 scripts/run_experiments.py [--out results] [--quick]
"""

import argparse
import pathlib
import statistics
import sys
import time

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from plyscope import compute_ply
from plyscope.bench import run_bench, to_csv
from plyscope.corpus import CorpusSpec, caterpillar, random_gnm
from plyscope.layout import LayoutConfig, RefineConfig, layout_organic, minimize


def sparse_layout_table(out: pathlib.Path, count: int) -> None:
    """Mean ply/time/events per layout on a sparse corpus (10..100 vertices,
    density 0.9..1.8)."""
    spec = CorpusSpec(n_min=10, n_max=100, density_min=0.9, density_max=1.8,
                      count=count, seed=2024)
    records, averages = run_bench(spec)
    (out / "sparse_layouts.csv").write_text(to_csv(records, averages))
    for avg in averages:
        print(f"  {avg.layout:<9} ply {avg.ply:>3}  time {avg.time_ms:7.2f} ms  events {avg.events}")


def density_sweep(out: pathlib.Path, count: int) -> None:
    """n=100 graphs across densities 1.5..40: where circular overtakes
    organic."""
    rows = ["density,layout,ply,events,postponed,time_ms"]
    rng = np.random.default_rng(77)
    densities = np.linspace(1.5, 40.0, count)
    from plyscope.layout import layout_circular, layout_random

    for dens in densities:
        g = random_gnm(100, round(dens * 100), rng)
        for name, fn in (("organic", layout_organic), ("circular", layout_circular),
                         ("random", layout_random)):
            d = fn(g, LayoutConfig(seed=int(dens * 10)))
            t0 = time.perf_counter()
            r = compute_ply(g, d)
            ms = (time.perf_counter() - t0) * 1000
            rows.append(f"{dens:.2f},{name},{r.ply},{r.events},{r.postponed},{ms:.3f}")
    (out / "density_sweep.csv").write_text("\n".join(rows) + "\n")
    print(f"  density sweep: {len(densities)} densities x 3 layouts")


def caterpillar_timings(out: pathlib.Path) -> None:
    """Organic caterpillar drawings, 250..450 vertices: sweep time medians."""
    rows = ["n,ply,events,median_ms"]
    rng = np.random.default_rng(31)
    for n in (250, 300, 350, 400, 450):
        g = caterpillar(n, rng)
        d = layout_organic(g, LayoutConfig(seed=n))
        times = []
        report = None
        for _ in range(10):
            t0 = time.perf_counter()
            report = compute_ply(g, d)
            times.append((time.perf_counter() - t0) * 1000)
        med = statistics.median(times)
        rows.append(f"{n},{report.ply},{report.events},{med:.3f}")
        print(f"  caterpillar n={n}: ply {report.ply}, {med:.2f} ms")
    (out / "caterpillar_timing.csv").write_text("\n".join(rows) + "\n")


def minimization_comparison(out: pathlib.Path, count: int) -> None:
    """Organic ply vs the minimization workflow on the sparse corpus."""
    spec = CorpusSpec(n_min=10, n_max=100, density_min=0.9, density_max=1.8,
                      count=count, seed=2024)
    rows = ["name,n,m,organic_ply,minimized_ply,fallback"]
    organic_sum = best_sum = 0
    from plyscope.corpus import generate

    for i, (name, g) in enumerate(generate(spec)):
        lc = LayoutConfig(seed=i)
        rc = RefineConfig(iteration_budget=250, eval_period=25, seed=i)
        organic_ply = compute_ply(g, layout_organic(g, lc)).ply
        res = minimize(g, lc, rc)
        organic_sum += organic_ply
        best_sum += res.ply
        rows.append(f"{name},{g.n},{g.m},{organic_ply},{res.ply},{int(res.fallback)}")
    (out / "minimization.csv").write_text("\n".join(rows) + "\n")
    print(f"  minimization: mean organic {organic_sum/count:.2f} -> {best_sum/count:.2f}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results")
    ap.add_argument("--quick", action="store_true", help="small corpora for a fast pass")
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    count = 10 if args.quick else 30

    print("sparse layout comparison")
    sparse_layout_table(out, count)
    print("density sweep")
    density_sweep(out, 8 if args.quick else 16)
    print("caterpillar timings")
    caterpillar_timings(out)
    print("minimization workflow")
    minimization_comparison(out, count)
    print(f"CSVs written to {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
