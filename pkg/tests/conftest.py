import math
import random

import pytest

from plyscope import Drawing, Graph


@pytest.fixture
def k3_equilateral():
    """Equilateral triangle of side 2: the classic ply-1 drawing."""
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    d = Drawing(((0.0, 0.0), (2.0, 0.0), (1.0, math.sqrt(3.0))))
    return g, d


@pytest.fixture
def overlap_path():
    """Path u(2,0)-v(0,0)-w(-1,0): disks of v and w overlap, ply 2."""
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    d = Drawing(((2.0, 0.0), (0.0, 0.0), (-1.0, 0.0)))
    return g, d


def random_instance(seed, n_lo=2, n_hi=40, density_hi=4.0, box=1000.0):
    rng = random.Random(seed)
    n = rng.randint(n_lo, n_hi)
    m = rng.randint(0, min(n * (n - 1) // 2, int(density_hi * n)))
    edges = set()
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    g = Graph.from_edges(n, edges)
    d = Drawing(tuple((rng.uniform(0, box), rng.uniform(0, box)) for _ in range(n)))
    return g, d


def gml_text(positions, edges, labels=None):
    lines = ["graph ["]
    for i, (x, y) in enumerate(positions):
        lines.append("  node [")
        lines.append(f"    id {i}")
        if labels and labels[i] is not None:
            lines.append(f'    label "{labels[i]}"')
        lines.append(f"    graphics [ x {x!r} y {y!r} ]")
        lines.append("  ]")
    for u, v in edges:
        lines.append(f"  edge [ source {u} target {v} ]")
    lines.append("]")
    return "\n".join(lines).encode()
