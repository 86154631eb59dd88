"""Brute-force ply oracles: exact arrangement-depth maximum for small
instances, the empty-ply predicate, and a grid probe.

Everything here is deliberately independent of the sweep implementation:
candidate points come straight from the closed-form circle-pair geometry,
and depth is counted directly. Intended for verification and testing, so
clarity beats speed; numpy keeps it usable up to a couple hundred vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import EPS, Drawing, Graph, derive_disks

DEFAULT_CAP = 200


class OracleCapError(ValueError):
    """Instance too large for the O(n^3) candidate oracle."""


@dataclass(frozen=True)
class DepthProbe:
    x: float
    y: float
    depth: int


@dataclass(frozen=True)
class EmptyPlyVerdict:
    empty: bool
    violations: tuple[tuple[int, int], ...]  # (container vertex, contained vertex)


def _disk_arrays(graph: Graph, drawing: Drawing):
    """Positive-radius disks as (centers, radii); radius-0 disks never
    contain anything under open semantics, so they are dropped here."""
    disks = derive_disks(graph, drawing)
    cx = np.array([d.cx for d in disks if d.r > 0.0])
    cy = np.array([d.cy for d in disks if d.r > 0.0])
    r = np.array([d.r for d in disks if d.r > 0.0])
    return np.column_stack([cx, cy]) if len(r) else np.zeros((0, 2)), r


def _strict_depth(points: np.ndarray, centers: np.ndarray, radii: np.ndarray) -> np.ndarray:
    """Count of open disks strictly (eps-strictly) containing each point."""
    if len(points) == 0 or len(radii) == 0:
        return np.zeros(len(points), dtype=int)
    d2 = (points[:, None, 0] - centers[None, :, 0]) ** 2 + (
        points[:, None, 1] - centers[None, :, 1]
    ) ** 2
    lim = radii - EPS
    return (d2 < lim[None, :] ** 2).sum(axis=1)


def oracle_ply(
    graph: Graph, drawing: Drawing, cap: int = DEFAULT_CAP
) -> tuple[int, DepthProbe]:
    """Maximum open-disk depth via exhaustive candidate evaluation.

    Candidates: every disk center; every proper circle-pair crossing point
    (nudged half an epsilon toward the pair's center midpoint, and counted
    together with the two disks whose boundaries meet there, since the
    deepest quadrant at such a vertex lies inside both); and the midpoint
    of each lens along the center line. For arrangements of open disks in
    general position the deepest face either contains a center or has such
    a boundary vertex, so the maximum over candidates is the exact ply.
    """
    if graph.n > cap:
        raise OracleCapError(
            f"oracle limited to {cap} vertices (got {graph.n}); raise cap explicitly"
        )
    centers, radii = _disk_arrays(graph, drawing)
    k = len(radii)

    best_depth = 0
    best_pt = (0.0, 0.0)

    if k:
        depths = _strict_depth(centers, centers, radii)
        i = int(depths.argmax())
        best_depth = int(depths[i])
        best_pt = (float(centers[i, 0]), float(centers[i, 1]))

    if k >= 2:
        ii, jj = np.triu_indices(k, 1)
        dx = centers[jj, 0] - centers[ii, 0]
        dy = centers[jj, 1] - centers[ii, 1]
        d = np.hypot(dx, dy)
        r1, r2 = radii[ii], radii[jj]
        # proper crossing: strictly overlapping, neither containing the other
        cross = (d > np.abs(r1 - r2) + EPS) & (d < r1 + r2 - EPS) & (d > 0)
        if cross.any():
            ii, jj = ii[cross], jj[cross]
            dx, dy, d = dx[cross], dy[cross], d[cross]
            r1, r2 = r1[cross], r2[cross]
            ux, uy = dx / d, dy / d
            a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
            h = np.sqrt(np.maximum(r1 * r1 - a * a, 0.0))
            bx = centers[ii, 0] + a * ux
            by = centers[ii, 1] + a * uy
            mx = (centers[ii, 0] + centers[jj, 0]) / 2
            my = (centers[ii, 1] + centers[jj, 1]) / 2

            pts = []
            owners = []
            for sign in (1.0, -1.0):
                px = bx - sign * h * uy
                py = by + sign * h * ux
                # nudge toward the midpoint of the two centers
                nx, ny = mx - px, my - py
                norm = np.hypot(nx, ny)
                norm[norm == 0] = 1.0
                pts.append(
                    np.column_stack([px + (EPS / 2) * nx / norm, py + (EPS / 2) * ny / norm])
                )
                owners.append(np.column_stack([ii, jj]))
            # lens midpoint on the center line: segment [d - r2, r1] from c1
            t = (d - r2 + r1) / 2
            pts.append(np.column_stack([centers[ii, 0] + t * ux, centers[ii, 1] + t * uy]))
            owners.append(np.column_stack([ii, jj]))

            cand = np.vstack(pts)
            own = np.vstack(owners)
            depth_all = _strict_depth(cand, centers, radii)
            # count the two defining disks by construction; remove whatever
            # the strict predicate decided about them at the sampled point
            d2a = (cand[:, 0] - centers[own[:, 0], 0]) ** 2 + (
                cand[:, 1] - centers[own[:, 0], 1]
            ) ** 2
            d2b = (cand[:, 0] - centers[own[:, 1], 0]) ** 2 + (
                cand[:, 1] - centers[own[:, 1], 1]
            ) ** 2
            in_a = d2a < (radii[own[:, 0]] - EPS) ** 2
            in_b = d2b < (radii[own[:, 1]] - EPS) ** 2
            depth = depth_all - in_a.astype(int) - in_b.astype(int) + 2
            i = int(depth.argmax())
            if int(depth[i]) > best_depth:
                best_depth = int(depth[i])
                best_pt = (float(cand[i, 0]), float(cand[i, 1]))

    if graph.n > 0 and best_depth < 1:
        # degenerate-disk convention: a vertex's own (possibly radius-0)
        # disk covers its center, so any non-empty graph has ply >= 1
        best_depth = 1
        best_pt = drawing.positions[0]
    return best_depth, DepthProbe(best_pt[0], best_pt[1], best_depth)


def empty_ply(graph: Graph, drawing: Drawing) -> EmptyPlyVerdict:
    """No vertex strictly inside any other vertex's ply disk.

    Boundary placement does not count as containment, mirroring the
    open-disk overlap semantics.
    """
    disks = derive_disks(graph, drawing)
    pos = np.array(drawing.positions, dtype=float).reshape(graph.n, 2)
    violations = []
    for dsk in disks:
        if dsk.r <= 0.0:
            continue
        d2 = (pos[:, 0] - dsk.cx) ** 2 + (pos[:, 1] - dsk.cy) ** 2
        inside = np.nonzero(d2 < (dsk.r - EPS) ** 2)[0]
        for u in inside:
            if int(u) != dsk.owner:
                violations.append((dsk.owner, int(u)))
    violations.sort()
    return EmptyPlyVerdict(not violations, tuple(violations))


def grid_probe(
    graph: Graph, drawing: Drawing, resolution: int
) -> tuple[int, tuple[float, float]]:
    """Max eps-strict depth over a resolution x resolution grid spanning the
    disks' bounding box. A sampling lower bound: may undercount thin lenses."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    centers, radii = _disk_arrays(graph, drawing)
    if len(radii) == 0:
        if graph.n == 0:
            return 0, (0.0, 0.0)
        return 0, drawing.positions[0]
    x0 = float((centers[:, 0] - radii).min())
    x1 = float((centers[:, 0] + radii).max())
    y0 = float((centers[:, 1] - radii).min())
    y1 = float((centers[:, 1] + radii).max())
    xs = np.linspace(x0, x1, resolution)
    ys = np.linspace(y0, y1, resolution)

    best = -1
    best_pt = (xs[0], ys[0])
    # row-chunked to keep the (chunk*resolution, ndisks) matrix bounded
    chunk = max(1, int(4_000_000 / (resolution * max(1, len(radii)))))
    for lo in range(0, resolution, chunk):
        sub = ys[lo : lo + chunk]
        gx, gy = np.meshgrid(xs, sub, indexing="xy")
        pts = np.column_stack([gx.ravel(), gy.ravel()])
        depth = _strict_depth(pts, centers, radii)
        i = int(depth.argmax())
        if int(depth[i]) > best:
            best = int(depth[i])
            best_pt = (float(pts[i, 0]), float(pts[i, 1]))
    return best, best_pt
