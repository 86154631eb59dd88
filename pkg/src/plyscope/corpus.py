"""Deterministic corpus generation for the benchmark harness: uniform
G(n,m) random graphs, caterpillars, and planar triangulation subgraphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import Delaunay

from .model import Graph

GENERATORS = ("random-gnm", "caterpillar", "planar-triangulation-subgraph")


@dataclass(frozen=True)
class CorpusSpec:
    generator: str = "random-gnm"
    n_min: int = 10
    n_max: int = 100
    density_min: float = 0.9
    density_max: float = 1.8
    count: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("empty n range")
        if self.density_max < self.density_min:
            raise ValueError("empty density range")
        if self.count < 1:
            raise ValueError("count must be >= 1")

    @staticmethod
    def from_json(obj: dict) -> "CorpusSpec":
        return CorpusSpec(
            generator=obj.get("generator", "random-gnm"),
            n_min=int(obj.get("n_min", 10)),
            n_max=int(obj.get("n_max", 100)),
            density_min=float(obj.get("density_min", 0.9)),
            density_max=float(obj.get("density_max", 1.8)),
            count=int(obj.get("count", 10)),
            seed=int(obj.get("seed", 0)),
        )


def random_gnm(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Uniform simple graph with exactly min(m, C(n,2)) edges."""
    maxm = n * (n - 1) // 2
    m = min(m, maxm)
    edges: set[tuple[int, int]] = set()
    while len(edges) < m:
        u = int(rng.integers(n))
        v = int(rng.integers(n))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(edges)))


def caterpillar(n: int, rng: np.random.Generator) -> Graph:
    """Path spine of random length in [n/3, n/2] with the remaining
    vertices attached as legs uniformly along the spine."""
    if n == 1:
        return Graph(1, ())
    lo = max(2, n // 3)
    hi = max(lo, n // 2)
    spine = int(rng.integers(lo, hi + 1))
    spine = min(spine, n)
    edges = [(i, i + 1) for i in range(spine - 1)]
    for leg in range(spine, n):
        host = int(rng.integers(spine))
        edges.append((min(host, leg), max(host, leg)))
    return Graph(n, tuple(sorted(edges)))


def planar_subgraph(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Delaunay triangulation of random points, subsampled to ~m edges."""
    if n < 3:
        return random_gnm(n, m, rng)
    pts = rng.uniform(0.0, 1000.0, size=(n, 2))
    tri = Delaunay(pts)
    edges = set()
    for simplex in tri.simplices:
        a, b, c = (int(x) for x in simplex)
        edges.add((min(a, b), max(a, b)))
        edges.add((min(b, c), max(b, c)))
        edges.add((min(a, c), max(a, c)))
    ordered = sorted(edges)
    if m < len(ordered):
        keep = rng.choice(len(ordered), size=m, replace=False)
        ordered = [ordered[i] for i in sorted(keep)]
    return Graph(n, tuple(ordered))


def generate(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    """The corpus for a spec; bit-reproducible from (spec, seed)."""
    out = []
    root = np.random.SeedSequence(spec.seed)
    children = root.spawn(spec.count)
    for i, ss in enumerate(children):
        rng = np.random.default_rng(ss)
        n = int(rng.integers(spec.n_min, spec.n_max + 1))
        dens = float(rng.uniform(spec.density_min, spec.density_max))
        m = max(0, round(dens * n))
        if spec.generator == "random-gnm":
            g = random_gnm(n, m, rng)
        elif spec.generator == "caterpillar":
            g = caterpillar(n, rng)
        else:
            g = planar_subgraph(n, m, rng)
        out.append((f"{spec.generator}-{i:03d}-n{g.n}", g))
    return out
