import contextlib
import io
import json
import math

import pytest

from plyscope.cli import main

from conftest import gml_text


@pytest.fixture
def k3_gml(tmp_path):
    s3 = math.sqrt(3.0)
    p = tmp_path / "k3.gml"
    p.write_bytes(gml_text([(0.0, 0.0), (2.0, 0.0), (1.0, s3)], [(0, 1), (1, 2), (0, 2)]))
    return p


def run_cli(*args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        rc = main([str(a) for a in args])
    return rc, out.getvalue()


def test_compute_k3(k3_gml):
    rc, out = run_cli("compute", k3_gml)
    assert rc == 0
    obj = json.loads(out)
    assert obj["ply"] == 1
    assert obj["counters"]["events"] == 6


def test_compute_verify_agrees(k3_gml):
    rc, out = run_cli("compute", k3_gml, "--verify")
    obj = json.loads(out)
    assert rc == 0 and obj["agrees"] is True
    assert obj["oracle"]["ply"] == 1


def test_compute_tangent_disks_ply_one(tmp_path):
    p = tmp_path / "tangent.gml"
    p.write_bytes(gml_text([(0.0, 0.0), (2.0, 0.0), (4.0, 0.0)], [(0, 1), (1, 2)]))
    rc, out = run_cli("compute", p)
    assert json.loads(out)["ply"] == 1  # open-disk semantics


def test_compute_csv_format(k3_gml):
    rc, out = run_cli("compute", k3_gml, "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "name,n,m,density,layout,ply,events,postponed,dropped,time_ms"
    assert lines[1].split(",")[5] == "1"


def test_compute_parse_failure_exit_2(tmp_path):
    p = tmp_path / "broken.gml"
    p.write_text("graph [ node [ id 3 ] ]")
    rc, _ = run_cli("compute", p)
    assert rc == 2


def test_layout_deterministic_bytes(k3_gml, tmp_path):
    o1, o2 = tmp_path / "a.gml", tmp_path / "b.gml"
    assert run_cli("layout", k3_gml, "random", "--seed", 7, "--out", o1)[0] == 0
    assert run_cli("layout", k3_gml, "random", "--seed", 7, "--out", o2)[0] == 0
    assert o1.read_bytes() == o2.read_bytes()


def test_layout_unknown_algorithm(k3_gml):
    rc, _ = run_cli("layout", k3_gml, "zigzag")
    assert rc == 2


def test_layout_from_structural_graphml(tmp_path):
    p = tmp_path / "g.graphml"
    p.write_bytes(
        b"""<graphml xmlns="http://graphml.graphdrawing.org/xmlns"><graph>
        <node id="0"/><node id="1"/><node id="2"/><node id="3"/>
        <edge source="0" target="1"/><edge source="1" target="2"/>
        <edge source="2" target="3"/><edge source="3" target="0"/>
        </graph></graphml>"""
    )
    out_path = tmp_path / "circ.gml"
    rc, _ = run_cli("layout", p, "circular", "--out", out_path)
    assert rc == 0
    rc2, out2 = run_cli("compute", out_path)
    assert rc2 == 0
    assert json.loads(out2)["ply"] <= math.ceil(4 / 2)


def test_minimize_prints_trajectory(tmp_path, k3_gml):
    cfgp = tmp_path / "cfg.json"
    cfgp.write_text(
        json.dumps(
            {
                "layout": {"organic_iterations": 60},
                "refine": {"iteration_budget": 40, "eval_period": 20},
            }
        )
    )
    out_path = tmp_path / "min.gml"
    rc, out = run_cli("minimize", k3_gml, "--config", cfgp, "--out", out_path)
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "iteration,ply"
    assert len(lines) >= 2
    rc2, out2 = run_cli("compute", out_path)
    best = min(int(ln.split(",")[1]) for ln in lines[1:])
    assert json.loads(out2)["ply"] == best


def test_minimize_empty_graph(tmp_path):
    p = tmp_path / "empty.gml"
    p.write_bytes(b"graph []")
    rc, out = run_cli("minimize", p)
    assert rc == 0
    assert out.strip().splitlines()[1] == "0,0"


def test_bench_csv(tmp_path):
    out_path = tmp_path / "bench.csv"
    rc, _ = run_cli(
        "bench",
        "--generator",
        "caterpillar",
        "--n-min",
        10,
        "--n-max",
        14,
        "--count",
        2,
        "--layouts",
        "circular,random",
        "--out",
        out_path,
    )
    assert rc == 0
    lines = out_path.read_text().strip().splitlines()
    assert lines[0] == "name,n,m,density,layout,ply,events,postponed,dropped,time_ms"
    assert len(lines) == 1 + 4 + 2  # rows + per-layout means


def test_bench_spec_file(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"generator": "random-gnm", "n_min": 8, "n_max": 10, "count": 1, "seed": 3}))
    rc, out = run_cli("bench", "--spec", spec, "--layouts", "random")
    assert rc == 0
    assert len(out.strip().splitlines()) == 3


def test_emptyply_verdicts(tmp_path):
    ok = tmp_path / "ok.gml"
    ok.write_bytes(gml_text([(0.0, 0.0), (10.0, 0.0)], [(0, 1)]))
    rc, out = run_cli("emptyply", ok)
    assert rc == 0 and json.loads(out) == {"empty": True, "violations": []}

    bad = tmp_path / "bad.gml"
    bad.write_bytes(gml_text([(4.0, 0.0), (0.0, 0.0), (1.0, 0.0)], [(0, 1), (1, 2)]))
    rc, out = run_cli("emptyply", bad)
    assert rc == 0
    obj = json.loads(out)
    assert obj["empty"] is False and [1, 2] in obj["violations"]

    edgeless = tmp_path / "edgeless.gml"
    edgeless.write_bytes(gml_text([(0.0, 0.0), (1.0, 1.0)], []))
    rc, out = run_cli("emptyply", edgeless)
    assert json.loads(out)["empty"] is True


def test_json_export(k3_gml):
    rc, out = run_cli("json", k3_gml)
    obj = json.loads(out)
    assert rc == 0
    assert obj["edges"] == [[0, 1], [0, 2], [1, 2]]
    assert obj["vertices"][0] == {"id": 0, "x": 0.0, "y": 0.0}
