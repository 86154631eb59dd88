"""Layout generators and the ply-aware refinement workflow.

Three start layouts (random, circular, organic/Fruchterman-Reingold), a
refinement embedder that augments the spring forces with disk-overlap
repulsion and keep-best hill climbing on the ply number, the stiff
equal-edge-length mode, and the minimization pipeline with its circular
fallback for dense graphs.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .model import Drawing, Graph
from .sweep import PlyReport, compute_ply


@dataclass(frozen=True)
class LayoutConfig:
    algorithm: str = "organic"  # random | circular | organic
    width: float = 1000.0
    height: float = 1000.0
    seed: int = 0
    circular_radius: float = 400.0
    organic_iterations: int = 500
    cooling: float = 0.97
    ideal_edge_length: float = 50.0

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.circular_radius <= 0:
            raise ValueError("box and radius must be positive")
        if self.organic_iterations < 0:
            raise ValueError("iterations must be >= 0")


@dataclass(frozen=True)
class RefineConfig:
    budget_ms: float = 5000.0
    iteration_budget: int | None = None  # test mode: replaces the wall clock
    overlap_weight: float = 1.0
    attract_weight: float = 1.0
    repulse_weight: float = 1.0
    eval_period: int = 25
    step: float = 8.0
    step_decay: float = 0.995
    target_length: float = 50.0
    stiffness: float = 0.9
    seed: int = 0

    def __post_init__(self):
        if self.budget_ms <= 0:
            raise ValueError("budget must be positive")
        if self.eval_period < 1:
            raise ValueError("eval period must be >= 1")
        if min(self.overlap_weight, self.attract_weight, self.repulse_weight) < 0:
            raise ValueError("weights must be >= 0")


@dataclass(frozen=True)
class MinimizeResult:
    drawing: Drawing
    ply: int
    trajectory: tuple[tuple[int, int], ...]  # (iteration, ply at evaluation)
    fallback: bool
    converged: bool | None = None
    max_deviation: float | None = None


def _as_array(drawing: Drawing) -> np.ndarray:
    return np.array(drawing.positions, dtype=float).reshape(len(drawing), 2)


def _as_drawing(pos: np.ndarray) -> Drawing:
    return Drawing(tuple((float(x), float(y)) for x, y in pos))


def _edge_arrays(graph: Graph) -> tuple[np.ndarray, np.ndarray]:
    if graph.m == 0:
        return np.zeros(0, dtype=int), np.zeros(0, dtype=int)
    e = np.array(graph.edges, dtype=int)
    return e[:, 0], e[:, 1]


def layout_random(graph: Graph, config: LayoutConfig) -> Drawing:
    rng = np.random.default_rng(config.seed)
    pos = rng.uniform((0.0, 0.0), (config.width, config.height), size=(graph.n, 2))
    return _as_drawing(pos)


def layout_circular(graph: Graph, config: LayoutConfig) -> Drawing:
    if graph.n < 1:
        return Drawing(())
    r = config.circular_radius
    cx, cy = config.width / 2, config.height / 2
    pts = []
    for i in range(graph.n):
        a = 2.0 * math.pi * i / graph.n
        pts.append((cx + r * math.cos(a), cy + r * math.sin(a)))
    return Drawing(tuple(pts))


def _fr_forces(pos, eu, ev, k, attract=1.0, repulse=1.0):
    """Classic Fruchterman-Reingold displacement field: k^2/d repulsion for
    all pairs, d^2/k attraction along edges."""
    delta = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt((delta * delta).sum(axis=2))
    np.fill_diagonal(dist, 1.0)
    dist = np.maximum(dist, 1e-9)
    rep = repulse * (k * k) / (dist * dist)
    np.fill_diagonal(rep, 0.0)
    disp = (delta * rep[:, :, None]).sum(axis=1)
    if len(eu):
        dvec = pos[eu] - pos[ev]
        d = np.maximum(np.sqrt((dvec * dvec).sum(axis=1)), 1e-9)
        f = attract * d / k  # multiplied by dvec gives the d^2/k pull
        pull = dvec * f[:, None]
        np.add.at(disp, eu, -pull)
        np.add.at(disp, ev, pull)
    return disp


def _cap_step(disp, t):
    norm = np.maximum(np.sqrt((disp * disp).sum(axis=1)), 1e-12)
    scale = np.minimum(norm, t) / norm
    return disp * scale[:, None]


def layout_organic(graph: Graph, config: LayoutConfig) -> Drawing:
    """Spring embedder after Fruchterman and Reingold, seeded from the
    random layout so the whole pipeline reproduces from one seed."""
    if graph.n == 0:
        return Drawing(())
    pos = _as_array(layout_random(graph, config))
    if graph.n == 1:
        return _as_drawing(pos)
    eu, ev = _edge_arrays(graph)
    k = config.ideal_edge_length
    t = max(config.width, config.height) / 10.0
    for _ in range(config.organic_iterations):
        disp = _fr_forces(pos, eu, ev, k)
        pos += _cap_step(disp, t)
        t = max(t * config.cooling, k / 100.0)
    return _as_drawing(pos)


def _radii(graph_eu, graph_ev, pos, n):
    r = np.zeros(n)
    if len(graph_eu):
        dvec = pos[graph_eu] - pos[graph_ev]
        d = np.sqrt((dvec * dvec).sum(axis=1))
        np.maximum.at(r, graph_eu, d)
        np.maximum.at(r, graph_ev, d)
    return r / 2.0


def _overlap_force(pos, radii, w_o, boost):
    """Push apart every pair of overlapping ply disks; vertices in current
    max-ply witness regions push twice as hard."""
    delta = pos[:, None, :] - pos[None, :, :]
    dist = np.sqrt((delta * delta).sum(axis=2))
    np.fill_diagonal(dist, np.inf)
    rsum = radii[:, None] + radii[None, :]
    pen = rsum - dist
    mask = pen > 0
    if not mask.any():
        return np.zeros_like(pos)
    mag = np.where(mask, w_o * pen, 0.0)
    mag = mag * np.maximum(boost[:, None], boost[None, :])
    dist = np.where(np.isinf(dist), 1.0, np.maximum(dist, 1e-9))
    f = (delta / dist[:, :, None]) * mag[:, :, None]
    return f.sum(axis=1)


def _witness_boost(report: PlyReport, pos, radii) -> np.ndarray:
    boost = np.ones(len(pos))
    if not report.regions:
        return boost
    pts = np.array([reg.point for reg in report.regions])
    d2 = (pos[:, None, 0] - pts[None, :, 0]) ** 2 + (pos[:, None, 1] - pts[None, :, 1]) ** 2
    inside = (d2 < (radii[:, None] ** 2)).any(axis=1)
    boost[inside] = 2.0
    return boost


def refine_ply(
    graph: Graph,
    drawing: Drawing,
    config: RefineConfig,
    *,
    on_eval=None,
) -> MinimizeResult:
    """Spring iteration with disk-overlap repulsion and keep-best ply
    hill climbing. Every eval_period iterations the ply is recomputed and
    the best drawing seen is retained; stops at the time (or iteration)
    budget. on_eval(iteration, ply, drawing) may return False to stop."""
    if graph.n == 0:
        return MinimizeResult(drawing, 0, ((0, 0),), False)
    report = compute_ply(graph, drawing)
    best_ply = report.ply
    best_pos = _as_array(drawing)
    trajectory = [(0, report.ply)]
    if on_eval is not None and on_eval(0, report.ply, drawing) is False:
        return MinimizeResult(drawing, best_ply, tuple(trajectory), False)

    eu, ev = _edge_arrays(graph)
    pos = best_pos.copy()
    k = config.target_length
    radii = _radii(eu, ev, pos, graph.n)
    boost = _witness_boost(report, pos, radii)
    t = config.step
    deadline = time.perf_counter() + config.budget_ms / 1000.0
    it = 0
    while True:
        if config.iteration_budget is not None:
            if it >= config.iteration_budget:
                break
        elif time.perf_counter() >= deadline:
            break
        it += 1
        radii = _radii(eu, ev, pos, graph.n)
        disp = _fr_forces(pos, eu, ev, k, config.attract_weight, config.repulse_weight)
        disp += _overlap_force(pos, radii, config.overlap_weight, boost)
        pos += _cap_step(disp, t)
        t = max(t * config.step_decay, 0.05)
        if it % config.eval_period == 0:
            d = _as_drawing(pos)
            rep = compute_ply(graph, d)
            trajectory.append((it, rep.ply))
            if rep.ply < best_ply:
                best_ply = rep.ply
                best_pos = pos.copy()
            boost = _witness_boost(rep, pos, radii)
            if on_eval is not None and on_eval(it, rep.ply, d) is False:
                break
    return MinimizeResult(_as_drawing(best_pos), best_ply, tuple(trajectory), False)


def equal_edge_mode(graph: Graph, drawing: Drawing, config: RefineConfig) -> MinimizeResult:
    """Stiff springs to one common edge length plus minimum-distance
    repulsion between non-adjacent vertices; a converged run certifies the
    embedding admits a ply-1 drawing. Later iterations project edge lengths
    directly, so feasible configurations reach machine precision."""
    n = graph.n
    el = config.target_length
    if n == 0:
        return MinimizeResult(drawing, 0, ((0, 0),), False, converged=True, max_deviation=0.0)
    pos = _as_array(drawing)
    eu, ev = _edge_arrays(graph)
    adj = np.zeros((n, n), dtype=bool)
    if len(eu):
        adj[eu, ev] = adj[ev, eu] = True
    np.fill_diagonal(adj, True)

    limit = config.iteration_budget if config.iteration_budget is not None else 4000
    calm = 0
    converged = False
    for it in range(limit):
        move = np.zeros_like(pos)
        if len(eu):
            dvec = pos[eu] - pos[ev]
            d = np.maximum(np.sqrt((dvec * dvec).sum(axis=1)), 1e-12)
            # projection step: move both endpoints to meet the target length
            corr = config.stiffness * 0.5 * (d - el) / d
            shift = dvec * corr[:, None]
            np.add.at(move, eu, -shift)
            np.add.at(move, ev, shift)
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta * delta).sum(axis=2))
        short = (~adj) & (dist < el)
        if short.any():
            dd = np.maximum(dist, 1e-12)
            mag = np.where(short, config.stiffness * 0.5 * (el - dist) / dd, 0.0)
            move += (delta * mag[:, :, None]).sum(axis=1)
        pos += move
        step = float(np.sqrt((move * move).sum(axis=1)).max()) if n else 0.0
        calm = calm + 1 if step < 1e-6 * el else 0
        if calm >= 50:
            break

    if len(eu):
        dvec = pos[eu] - pos[ev]
        d = np.sqrt((dvec * dvec).sum(axis=1))
        max_dev = float(np.abs(d - el).max())
    else:
        max_dev = 0.0
    # a stalled system with unequal edges (conflicting projections cancel
    # out) is a failed test, not a converged one
    converged = calm >= 50 and max_dev < 1e-6 * el
    result = _as_drawing(pos)
    ply = compute_ply(graph, result).ply
    return MinimizeResult(
        result,
        ply,
        ((0, ply),),
        False,
        converged=converged,
        max_deviation=max_dev,
    )


def minimize(
    graph: Graph,
    layout_config: LayoutConfig | None = None,
    refine_config: RefineConfig | None = None,
) -> MinimizeResult:
    """Organic start, overlap-aware refinement, and the circular fallback
    whenever the refined ply still exceeds ceil(|V|/2). Returns the
    ply-minimal drawing seen anywhere in the pipeline."""
    lc = layout_config or LayoutConfig()
    rc = refine_config or RefineConfig(seed=lc.seed)
    if graph.n == 0:
        return MinimizeResult(Drawing(()), 0, ((0, 0),), False)
    organic = layout_organic(graph, lc)
    refined = refine_ply(graph, organic, rc)
    if refined.ply > math.ceil(graph.n / 2):
        circ = layout_circular(graph, lc)
        circ_ply = compute_ply(graph, circ).ply
        trajectory = refined.trajectory + ((refined.trajectory[-1][0] + 1, circ_ply),)
        if circ_ply <= refined.ply:
            return MinimizeResult(circ, circ_ply, trajectory, True)
        return MinimizeResult(refined.drawing, refined.ply, trajectory, True)
    return refined
