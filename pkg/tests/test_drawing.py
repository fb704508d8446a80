import pytest
from conftest import geometric_inputs
from hypothesis import given

from adjcross.drawing import Crossing, StructureError, build_drawing, validate
from adjcross.geometry import ingest

TRIANGLE = {"n": 3, "edges": [[0, 1], [1, 2], [2, 0]], "rotations": [[0, 2], [1, 0], [2, 1]]}


def two_by_two(records):
    """Four vertices, edges (0,2) and (1,3), with the given crossing records."""
    return build_drawing(
        {"n": 4, "edges": [[0, 2], [1, 3]], "rotations": [[0], [1], [0], [1]], "crossings": records}
    )


def test_triangle_builds_without_crossings():
    d = build_drawing(TRIANGLE)
    assert d.num_edges == 3 and d.num_crossings == 0
    report = validate(d)
    assert report.ok
    assert report.stats["min_degree"] == 2


def test_k5_has_five_crossing_records(k5):
    assert k5.num_edges == 10
    assert k5.num_crossings == 5
    assert validate(k5).ok


@pytest.mark.parametrize(
    "doc, field",
    [
        ({**TRIANGLE, "rotations": [[0, 99], [1, 0], [2, 1]]}, "rotations[0][1]"),
        ({**TRIANGLE, "edges": [[0, 1], [1, 7], [2, 0]]}, "edges[1][1]"),
        ({**TRIANGLE, "rotations": [[0], [1, 0], [2, 1]]}, "rotations[0]"),
        ({"edges": []}, "n"),
        ({**TRIANGLE, "crossings": [{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0}]}, "crossings[0].sign"),
        ({**TRIANGLE, "crossings": [{"e": 0, "pos_e": -1, "f": 1, "pos_f": 0, "sign": 1}]}, "crossings[0]"),
    ],
)
def test_structural_errors_name_the_field(doc, field):
    with pytest.raises(StructureError) as err:
        build_drawing(doc)
    assert err.value.field == field


def test_adjacent_crossing_is_reported():
    d = build_drawing(
        {
            "n": 3,
            "edges": [[0, 1], [1, 2]],
            "rotations": [[0], [0, 1], [1]],
            "crossings": [{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1}],
        }
    )
    assert "ADJACENT_CROSS" in validate(d).codes()


def test_double_crossing_is_reported():
    d = two_by_two(
        [
            {"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1},
            {"e": 0, "pos_e": 1, "f": 1, "pos_f": 1, "sign": -1},
        ]
    )
    assert "MULTI_CROSS" in validate(d).codes()


def test_bad_signs_and_gaps():
    d = two_by_two([{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 2}])
    assert "SIGN_INCONSISTENT" in validate(d).codes()
    d = two_by_two([{"e": 0, "pos_e": 1, "f": 1, "pos_f": 0, "sign": 1}])
    assert "POSITION_GAP" in validate(d).codes()
    d = two_by_two(
        [
            {"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1},
            {"e": 1, "pos_e": 0, "f": 0, "pos_f": 0, "sign": 1},
        ]
    )
    assert "SIGN_INCONSISTENT" in validate(d).codes()


def test_loops_parallels_and_self_crossings():
    d = build_drawing({"n": 2, "edges": [[0, 1], [1, 0]], "rotations": [[0, 1], [0, 1]]})
    assert "PARALLEL" in validate(d).codes()
    d = build_drawing({"n": 1, "edges": [[0, 0]], "rotations": [[0, 0]]})
    assert "LOOP" in validate(d).codes()
    d = build_drawing(
        {
            "n": 2,
            "edges": [[0, 1]],
            "rotations": [[0], [0]],
            "crossings": [{"e": 0, "pos_e": 0, "f": 0, "pos_f": 1, "sign": 1}],
        }
    )
    assert "SELF_CROSS" in validate(d).codes()


def test_sign_is_antisymmetric():
    d = two_by_two([{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1}])
    assert d.sign(0, 1) == 1 and d.sign(1, 0) == -1
    c = Crossing(1, 0, 0, 0, 1)
    assert c.normalized() == Crossing(0, 0, 1, 0, -1)


def test_restriction_renumbers_positions(k5):
    # edges 0-2 and 1-3 cross; keep them plus edge 0-1
    keep = [k5.edges.index((0, 2)), k5.edges.index((1, 3)), k5.edges.index((0, 1))]
    sub, kept, verts = k5.restricted(keep)
    assert sub.num_edges == 3 and sub.num_crossings == 1
    assert validate(sub).ok
    c = sub.crossings[0]
    assert c.pos_e == 0 and c.pos_f == 0


@given(geometric_inputs())
def test_ingested_drawings_are_simple(g):
    d, _ = ingest(g)
    assert validate(d).ok
    for c in d.crossings:
        assert d.sign(c.e, c.f) == -d.sign(c.f, c.e)
