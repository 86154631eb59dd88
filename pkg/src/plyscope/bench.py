"""Benchmark harness: lay out generated corpora, time the sweep, and emit
per-run records plus per-layout averages as CSV."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .corpus import CorpusSpec, generate
from .layout import LayoutConfig, layout_circular, layout_organic, layout_random
from .model import Graph, density
from .sweep import compute_ply

CSV_HEADER = "name,n,m,density,layout,ply,events,postponed,dropped,time_ms"

_LAYOUTS = {
    "random": layout_random,
    "circular": layout_circular,
    "organic": layout_organic,
}


@dataclass(frozen=True)
class BenchRecord:
    name: str
    n: int
    m: int
    density: float
    layout: str
    ply: int
    events: int
    postponed: int
    dropped: int
    time_ms: float

    def csv_row(self) -> str:
        return (
            f"{self.name},{self.n},{self.m},{self.density:.6g},{self.layout},"
            f"{self.ply},{self.events},{self.postponed},{self.dropped},"
            f"{self.time_ms:.4f}"
        )


def run_one(name: str, graph: Graph, layout: str, config: LayoutConfig) -> BenchRecord:
    if layout not in _LAYOUTS:
        raise ValueError(f"unknown layout {layout!r}")
    drawing = _LAYOUTS[layout](graph, config)
    t0 = time.perf_counter()
    report = compute_ply(graph, drawing)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return BenchRecord(
        name=name,
        n=graph.n,
        m=graph.m,
        density=density(graph) if graph.n else 0.0,
        layout=layout,
        ply=report.ply,
        events=report.events,
        postponed=report.postponed,
        dropped=report.dropped,
        time_ms=elapsed,
    )


def run_bench(
    spec: CorpusSpec,
    layouts: tuple[str, ...] = ("organic", "circular", "random"),
    layout_config: LayoutConfig | None = None,
) -> tuple[list[BenchRecord], list[BenchRecord]]:
    """All (graph, layout) records plus one mean record per layout."""
    base = layout_config or LayoutConfig()
    records = []
    for i, (name, graph) in enumerate(generate(spec)):
        cfg = LayoutConfig(
            algorithm=base.algorithm,
            width=base.width,
            height=base.height,
            seed=base.seed + i,
            circular_radius=base.circular_radius,
            organic_iterations=base.organic_iterations,
            cooling=base.cooling,
            ideal_edge_length=base.ideal_edge_length,
        )
        for layout in layouts:
            records.append(run_one(name, graph, layout, cfg))
    averages = []
    for layout in layouts:
        rows = [r for r in records if r.layout == layout]
        if not rows:
            continue
        averages.append(
            BenchRecord(
                name=f"mean:{layout}",
                n=round(statistics.mean(r.n for r in rows)),
                m=round(statistics.mean(r.m for r in rows)),
                density=statistics.mean(r.density for r in rows),
                layout=layout,
                ply=round(statistics.mean(r.ply for r in rows)),
                events=round(statistics.mean(r.events for r in rows)),
                postponed=round(statistics.mean(r.postponed for r in rows)),
                dropped=round(statistics.mean(r.dropped for r in rows)),
                time_ms=statistics.mean(r.time_ms for r in rows),
            )
        )
    return records, averages


def to_csv(records: list[BenchRecord], averages: list[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    lines += [r.csv_row() for r in records]
    lines += [r.csv_row() for r in averages]
    return "\n".join(lines) + "\n"
