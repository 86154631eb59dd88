import math

import pytest
from hypothesis import given, strategies as st

from plyscope import Drawing, Graph, StructuralError, density, derive_disks
from plyscope.model import drawing_to_json


def test_single_edge_disks():
    g = Graph.from_edges(2, [(0, 1)])
    d = Drawing(((0.0, 0.0), (4.0, 0.0)))
    disks = derive_disks(g, d)
    assert [dk.r for dk in disks] == [2.0, 2.0]
    assert disks[0].cx == 0.0 and disks[1].cx == 4.0


def test_longest_incident_edge_wins():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    d = Drawing(((2.0, 0.0), (0.0, 0.0), (-1.0, 0.0)))
    disks = derive_disks(g, d)
    assert disks[1].r == max(2.0, 1.0) / 2


def test_isolated_vertex_radius_zero():
    g = Graph.from_edges(1, [])
    d = Drawing(((5.0, 5.0),))
    (dk,) = derive_disks(g, d)
    assert dk.r == 0.0 and (dk.cx, dk.cy) == (5.0, 5.0)


def test_missing_position_names_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(StructuralError, match="2"):
        derive_disks(g, Drawing(((0.0, 0.0), (1.0, 0.0))))


def test_density_values():
    g = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert density(g) == pytest.approx(1.5)  # K4
    tree = Graph.from_edges(10, [(i, i + 1) for i in range(9)])
    assert density(tree) == pytest.approx(0.9)


def test_density_needs_vertices():
    with pytest.raises(StructuralError):
        density(Graph(0, ()))


def test_graph_validation():
    with pytest.raises(StructuralError):
        Graph(2, ((0, 0),))  # self loop
    with pytest.raises(StructuralError):
        Graph(2, ((0, 1), (0, 1)))  # duplicate
    with pytest.raises(StructuralError):
        Graph(2, ((0, 5),))  # unknown endpoint


def test_drawing_rejects_non_finite():
    with pytest.raises(StructuralError):
        Drawing(((0.0, float("nan")),))
    with pytest.raises(StructuralError):
        Drawing(((float("inf"), 0.0),))


def test_drawing_moved_is_new_value():
    d = Drawing(((0.0, 0.0), (1.0, 1.0)))
    d2 = d.moved(0, 3.0, 4.0)
    assert d.positions[0] == (0.0, 0.0)
    assert d2.positions[0] == (3.0, 4.0)


@st.composite
def graph_and_drawing(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))) if possible else []
    coord = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, width=64)
    pts = draw(st.lists(st.tuples(coord, coord), min_size=n, max_size=n))
    return Graph.from_edges(n, edges), Drawing(tuple(pts))


@given(graph_and_drawing())
def test_disk_radius_is_half_longest_incident(gd):
    g, d = gd
    disks = derive_disks(g, d)
    assert len(disks) == g.n
    assert sorted(dk.owner for dk in disks) == list(range(g.n))
    for v in range(g.n):
        incident = [
            math.dist(d.positions[u], d.positions[w])
            for u, w in g.edges
            if v in (u, w)
        ]
        expected = max(incident) / 2 if incident else 0.0
        assert disks[v].r == expected  # max and halving are exact in binary fp
        assert (disks[v].cx, disks[v].cy) == d.positions[v]


def test_drawing_to_json_shape():
    g = Graph.from_edges(2, [(0, 1)])
    d = Drawing(((0.5, 1.5), (2.5, 3.5)))
    obj = drawing_to_json(g, d)
    assert obj == {
        "vertices": [{"id": 0, "x": 0.5, "y": 1.5}, {"id": 1, "x": 2.5, "y": 3.5}],
        "edges": [[0, 1]],
    }
