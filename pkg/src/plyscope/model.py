"""Graph and drawing data model: ply disks, density, JSON export.

Coordinates are plain 64-bit floats end to end; the open-disk overlap
semantics used throughout the package is controlled by the absolute
tolerance ``EPS``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Absolute tolerance for all open-disk / strict-containment comparisons.
# Tangent disks (|d - (r1+r2)| <= EPS) do NOT overlap.
EPS = 1e-9


class StructuralError(ValueError):
    """Graph/drawing inputs that violate structural preconditions."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Edges are stored as sorted (u, v) tuples with u < v; no self-loops,
    no duplicates.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str | None, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise StructuralError("vertex count must be >= 0")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise StructuralError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise StructuralError(f"edge ({u},{v}) references unknown vertex")
            if u > v:
                raise StructuralError(f"edge ({u},{v}) not normalized (need u < v)")
            if (u, v) in seen:
                raise StructuralError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if self.labels and len(self.labels) != self.n:
            raise StructuralError("labels must cover every vertex or be empty")

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "Graph":
        """Normalize an edge iterable (orders endpoints, drops duplicates)."""
        norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
        return Graph(n, tuple(norm), tuple(labels) if labels else ())

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if v in (u, w))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class Drawing:
    """Per-vertex 2D positions for a straight-line drawing."""

    positions: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        for i, (x, y) in enumerate(self.positions):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise StructuralError(f"non-finite coordinate at vertex {i}: ({x}, {y})")

    @staticmethod
    def from_map(n: int, pos: dict[int, tuple[float, float]]) -> "Drawing":
        missing = [v for v in range(n) if v not in pos]
        if missing:
            raise StructuralError(f"missing position for vertex {missing[0]}")
        return Drawing(tuple((float(pos[v][0]), float(pos[v][1])) for v in range(n)))

    def __len__(self) -> int:
        return len(self.positions)

    def moved(self, v: int, x: float, y: float) -> "Drawing":
        pts = list(self.positions)
        pts[v] = (float(x), float(y))
        return Drawing(tuple(pts))


@dataclass(frozen=True)
class PlyDisk:
    """Open disk centered on a vertex; radius is half its longest incident edge."""

    owner: int
    cx: float
    cy: float
    r: float


def derive_disks(graph: Graph, drawing: Drawing) -> list[PlyDisk]:
    """One ply disk per vertex; isolated vertices get radius 0."""
    if len(drawing) != graph.n:
        raise StructuralError(
            f"drawing covers {len(drawing)} vertices, graph has {graph.n}"
        )
    longest = [0.0] * graph.n
    pos = drawing.positions
    for u, v in graph.edges:
        dx = pos[u][0] - pos[v][0]
        dy = pos[u][1] - pos[v][1]
        d = math.hypot(dx, dy)
        if d > longest[u]:
            longest[u] = d
        if d > longest[v]:
            longest[v] = d
    return [
        PlyDisk(v, pos[v][0], pos[v][1], longest[v] / 2.0) for v in range(graph.n)
    ]


def density(graph: Graph) -> float:
    """|E| / |V|; the sparsity measure used for corpora and reports."""
    if graph.n == 0:
        raise StructuralError("density undefined for empty vertex set")
    return graph.m / graph.n


def drawing_to_json(graph: Graph, drawing: Drawing) -> dict:
    """Wire format consumed by the viewer: vertex positions plus edge list."""
    return {
        "vertices": [
            {"id": v, "x": drawing.positions[v][0], "y": drawing.positions[v][1]}
            for v in range(graph.n)
        ],
        "edges": [[u, v] for u, v in graph.edges],
    }
