import csv
import io
import json

import pytest

from adjcross.cli import run
from adjcross.corpus import fixtures
from adjcross.fileio import dump_drawing


@pytest.fixture
def fixture_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.drawing"
        path.write_text(dump_drawing(fixtures.build(name)))
        return str(path)

    return write


def output(capsys):
    return json.loads(capsys.readouterr().out)


def test_validate_ok_and_adjacent_cross(fixture_file, capsys):
    assert run(["validate", fixture_file("k5-convex")]) == 0
    assert output(capsys)["ok"]
    assert run(["validate", fixture_file("bad-adjacent-cross")]) == 1
    codes = [v["code"] for v in output(capsys)["violations"]]
    assert codes == ["ADJACENT_CROSS"]


def test_malformed_input_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.drawing"
    bad.write_text('{"n": 3, "edges": [[0, 1]], "rotations": [[0], [0], [99]]}')
    assert run(["validate", str(bad)]) == 2
    assert "rotations[2][0]" in capsys.readouterr().err
    bad.write_text("not json")
    assert run(["faces", str(bad)]) == 2


def test_faces_census(fixture_file, capsys):
    assert run(["faces", fixture_file("k5-convex")]) == 0
    out = output(capsys)
    assert (out["vertices"], out["edges"], out["faces"]) == (10, 20, 12)
    assert {p["name"]: p["count"] for p in out["profiles"]} == {
        "1-triangle": 5,
        "2-triangle": 5,
        "0-pentagon": 1,
        "5-pentagon": 1,
    }


def test_classify(fixture_file, capsys):
    assert run(["classify", fixture_file("config-II")]) == 0
    out = output(capsys)
    assert out["adjacency_crossing"] and not out["weakly_fan_planar"]
    assert out["witnesses"]["CONFIG_II"][0]["inside_count"] == 1


def test_discharge_straight_line_k5(fixture_file, tmp_path, capsys):
    trace = tmp_path / "k5.csv"
    assert run(["discharge", fixture_file("k5-convex"), "--straight-line", "--trace", str(trace)]) == 0
    sl = output(capsys)["verification"]["straight_line"]
    assert sl["outer_check"] == "1.6*5-4 = 4/1 >= 4/5: True"
    assert sl["bound_check"] == "10 <= 5*5-11 = 14: True"
    rows = list(csv.reader(trace.open()))
    assert rows[0] == ["step", "source", "target", "conduit", "amount"]
    assert sum(1 for r in rows[1:] if r[0] == "2") == 5
    assert {r[4] for r in rows[1:] if r[0] == "4"} == {"1/5"}


def test_straight_line_needs_an_outer_face(tmp_path, capsys):
    path = tmp_path / "triangle.drawing"
    path.write_text('{"n": 3, "edges": [[0, 1], [1, 2], [2, 0]], "rotations": [[0, 2], [1, 0], [2, 1]]}')
    assert run(["discharge", str(path), "--straight-line"]) == 1
    assert output(capsys)["error"] == "NO_OUTER_FACE"


def test_gen_pipes_into_discharge(monkeypatch, capsys):
    assert run(["gen", "--family", "pentagram-dodecahedron"]) == 0
    text = capsys.readouterr().out
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    assert run(["discharge", "-"]) == 0
    out = output(capsys)
    assert {c for f in out["ledger"]["faces"] for c in f["charges"][-1:]} == {"0/1"}
    assert out["verification"]["bound"]["check"] == "90 <= 5*20-10 = 90: True"


def test_gen_random_is_deterministic(capsys):
    argv = ["gen", "--family", "random-geometric", "--n", "8", "--m", "14", "--seed", "1"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first
    assert run(["gen", "--family", "random-geometric"]) == 2


def test_ingest_geom(tmp_path, capsys):
    geom = tmp_path / "k5.json"
    geom.write_text('{"points": [[0,0],[4,0],[5,3],[2,5],[-1,3]], "edges": '
                    '[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}')
    out = tmp_path / "k5.drawing"
    assert run(["ingest-geom", str(geom), "-o", str(out)]) == 0
    assert out.read_text() == dump_drawing(fixtures.build("k5-convex"))
    geom.write_text('{"points": [[0,0],[1,0],[2,0]], "edges": [[0,1],[1,2],[0,2]]}')
    assert run(["ingest-geom", str(geom)]) == 1
    assert not output(capsys)["ok"]


def test_bound_and_audit(fixture_file, capsys):
    assert run(["bound", fixture_file("pentagram-dodecahedron")]) == 0
    assert output(capsys)["tight"]
    assert run(["audit", fixture_file("pentagram-dodecahedron")]) == 0
    report = output(capsys)
    assert report["passed"] and report["applicable"]


def test_not_sphere_exits_3(tmp_path, capsys):
    k4 = fixtures.build("k5-convex").restricted([0, 1, 2, 4, 5, 7])[0]
    doc = json.loads(dump_drawing(k4))
    doc["rotations"][0].reverse()
    path = tmp_path / "twisted.drawing"
    path.write_text(json.dumps(doc))
    assert run(["validate", str(path)]) == 3
    assert "NOT_SPHERE" in [v["code"] for v in output(capsys)["violations"]]
    assert run(["faces", str(path)]) == 3
