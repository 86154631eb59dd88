import io
import math

import pytest
from hypothesis import given, settings, strategies as st

from plyscope import Drawing, Graph, compute_ply, oracle_ply
from plyscope.model import PlyDisk
from plyscope.sweep import circle_pair_intersections

from conftest import random_instance

SQRT3_HALF = 0.8660254037844386  # sqrt(3)/2, from the closed form


def test_k3_equilateral_is_ply_one(k3_equilateral):
    g, d = k3_equilateral
    r = compute_ply(g, d, debug_recount=True)
    assert r.ply == 1


def test_k3_has_three_single_disk_regions(k3_equilateral):
    g, d = k3_equilateral
    r = compute_ply(g, d)
    assert len(r.regions) == 3
    disks = [((0.0, 0.0), 1.0), ((2.0, 0.0), 1.0), ((1.0, math.sqrt(3.0)), 1.0)]
    for reg in r.regions:
        inside = [c for c, rad in disks if math.dist(reg.point, c) < rad]
        assert len(inside) == 1


def test_overlapping_path_is_ply_two(overlap_path):
    g, d = overlap_path
    r = compute_ply(g, d, debug_recount=True)
    assert r.ply == 2


def test_star_matches_oracle():
    leaves = 6
    g = Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    pts = [(0.0, 0.0)]
    for i in range(leaves):
        a = 2 * math.pi * i / leaves
        pts.append((2 * math.cos(a), 2 * math.sin(a)))
    d = Drawing(tuple(pts))
    r = compute_ply(g, d, debug_recount=True)
    o, _ = oracle_ply(g, d)
    assert r.ply == o


def test_edgeless_graph_is_ply_one():
    g = Graph.from_edges(3, [])
    d = Drawing(((0.0, 0.0), (5.0, 5.0), (9.0, 1.0)))
    r = compute_ply(g, d)
    assert r.ply == 1
    assert r.degenerate_floor
    assert len(r.regions) == 3


def test_empty_graph_is_ply_zero():
    r = compute_ply(Graph(0, ()), Drawing(()))
    assert r.ply == 0 and r.regions == ()


def test_two_disk_lens_region_point_inside_lens():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    d = Drawing(((0.0, 0.0), (0.0, 2.0), (1.0, 0.0), (1.0, 2.0)))
    r = compute_ply(g, d)
    assert r.ply == 2
    assert len(r.regions) == 2  # one lens per pair
    for reg in r.regions:
        hits = sum(
            1
            for c in [(0.0, 0.0), (1.0, 0.0), (0.0, 2.0), (1.0, 2.0)]
            if math.dist(reg.point, c) < 1.0
        )
        assert hits == 2  # representative point lies inside a lens


def test_disjoint_disks_one_region_each():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    d = Drawing(((0.0, 0.0), (2.0, 0.0), (100.0, 0.0), (102.0, 0.0)))
    r = compute_ply(g, d)
    assert r.ply == 1
    assert len(r.regions) == 4


def test_nested_start_ply():
    # small disk strictly inside a big one: depth 2 where they stack
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    d = Drawing(((0.0, 0.0), (20.0, 0.0), (0.0, 1.0), (0.0, 3.0)))
    r = compute_ply(g, d, debug_recount=True)
    o, _ = oracle_ply(g, d)
    assert r.ply == o == 2


def test_coincident_vertices():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    d = Drawing(((0.0, 0.0), (2.0, 0.0), (0.0, 0.0), (2.0, 0.0)))
    r = compute_ply(g, d, debug_recount=True)
    o, _ = oracle_ply(g, d)
    assert r.ply == o == 2


# --------------------------------------------------- pair intersections ----


def test_tangent_disks_no_events():
    d1 = PlyDisk(0, 0.0, 0.0, 1.0)
    d2 = PlyDisk(1, 2.0, 0.0, 1.0)
    assert circle_pair_intersections(d1, d2, -10.0) == []


def test_unit_disks_crossing_points():
    d1 = PlyDisk(0, 0.0, 0.0, 1.0)
    d2 = PlyDisk(1, 1.0, 0.0, 1.0)
    pts = circle_pair_intersections(d1, d2, -10.0)
    assert len(pts) == 2
    ys = sorted(p.y for p in pts)
    assert ys == pytest.approx([-SQRT3_HALF, SQRT3_HALF])
    assert all(p.x == pytest.approx(0.5) for p in pts)
    top = max(pts, key=lambda p: p.y)
    assert top.upper == (0, 1) and top.lower == (1, 1)  # A's top above before


def test_containment_no_events():
    d1 = PlyDisk(0, 0.0, 0.0, 1.0)
    d2 = PlyDisk(1, 0.1, 0.0, 0.5)
    assert circle_pair_intersections(d1, d2, -10.0) == []


def test_x_now_filters_past_crossings():
    d1 = PlyDisk(0, 0.0, 0.0, 1.0)
    d2 = PlyDisk(1, 1.0, 0.0, 1.0)
    assert circle_pair_intersections(d1, d2, 0.6) == []


def test_zero_radius_no_events():
    d1 = PlyDisk(0, 0.0, 0.0, 0.0)
    d2 = PlyDisk(1, 0.0, 0.0, 1.0)
    assert circle_pair_intersections(d1, d2, -10.0) == []


# ------------------------------------------------------------- counters ----


def test_event_lower_bound_and_breakdown(overlap_path):
    g, d = overlap_path
    r = compute_ply(g, d)
    positive = 3  # all three vertices have incident edges
    assert r.starts + r.ends == 2 * positive
    assert r.events == r.starts + r.ends + r.intersections
    assert r.events >= 2 * positive


def test_clean_run_has_no_postponements():
    g, d = random_instance(4242, n_lo=20, n_hi=30)
    r = compute_ply(g, d)
    assert r.postponed == 0 and r.dropped == 0
    assert not r.low_confidence


def test_circular_symmetry_triggers_postponements():
    # symmetric circular layouts share many event x-coordinates and are
    # the canonical trigger for the postponement protocol
    n = 10
    g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    pts = [
        (100 * math.cos(2 * math.pi * i / n), 100 * math.sin(2 * math.pi * i / n))
        for i in range(n)
    ]
    r = compute_ply(g, Drawing(tuple(pts)))
    o, _ = oracle_ply(g, Drawing(tuple(pts)))
    assert r.ply == o
    assert r.postponed > 0
    assert r.ply <= math.ceil(n / 2)


def test_determinism():
    g, d = random_instance(77, n_lo=20, n_hi=30)
    r1 = compute_ply(g, d)
    r2 = compute_ply(g, d)
    # identical up to wall-clock time
    assert (r1.ply, r1.regions, r1.events, r1.starts, r1.ends, r1.intersections,
            r1.postponed, r1.dropped) == (
        r2.ply, r2.regions, r2.events, r2.starts, r2.ends, r2.intersections,
        r2.postponed, r2.dropped)


def test_trace_emits_one_line_per_event(overlap_path):
    g, d = overlap_path
    buf = io.StringIO()
    r = compute_ply(g, d, trace=buf)
    lines = [ln for ln in buf.getvalue().splitlines() if ln]
    assert len(lines) == r.events
    assert all(("start" in ln or "end" in ln or "cross" in ln) for ln in lines)


def test_report_json_shape(k3_equilateral):
    g, d = k3_equilateral
    obj = compute_ply(g, d).to_json()
    assert obj["ply"] == 1
    assert set(obj["counters"]) == {
        "events",
        "starts",
        "ends",
        "intersections",
        "postponed",
        "dropped",
    }
    assert all({"x0", "x1", "point"} <= set(reg) for reg in obj["regions"])


# ----------------------------------------------------------- properties ----


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_prefix_sum_law_and_oracle_equivalence(seed):
    g, d = random_instance(seed, n_lo=2, n_hi=25)
    r = compute_ply(g, d, debug_recount=True)  # raises on any recount drift
    assert 0 <= r.ply <= g.n
    if g.n:
        assert r.ply >= 1
        assert len(r.regions) >= 1
    if r.postponed == 0 and r.dropped == 0:
        o, _ = oracle_ply(g, d)
        assert r.ply == o


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_witness_regions_attain_the_ply(seed):
    g, d = random_instance(seed, n_lo=3, n_hi=18, density_hi=2.5)
    r = compute_ply(g, d)
    if r.dropped or r.postponed or r.degenerate_floor:
        return
    from plyscope.model import EPS
    from plyscope import derive_disks

    disks = derive_disks(g, d)
    best = 0
    for reg in r.regions:
        depth = sum(
            1
            for dk in disks
            if dk.r > 0 and math.dist(reg.point, (dk.cx, dk.cy)) < dk.r - EPS
        )
        best = max(best, depth)
    assert best == r.ply
