from dataclasses import replace

import pytest
from conftest import geometric_inputs
from hypothesis import given

from adjcross.corpus import fixtures
from adjcross.drawing import build_drawing
from adjcross.geometry import ingest
from adjcross.patterns import (
    CONFIG_I,
    CONFIG_II,
    CONFIG_III,
    TRIANGLE_CROSSING,
    classify,
    detect_config_I,
    detect_config_II_by_signs,
    detect_config_II_III_by_region,
    detect_triangle_crossings,
)
from adjcross.planemap import build_plane_map


def opposite_fan():
    """Edge 0 = (0,1) crossed by (2,4) and (3,4), which pass it in opposite directions.

    Edge 1 runs upward to apex 4; edge 2 starts above edge 0, comes down
    through it and loops around vertex 1 back to the apex.
    """
    return build_drawing(
        {
            "n": 5,
            "edges": [[0, 1], [2, 4], [3, 4]],
            "rotations": [[0], [0], [1], [2], [1, 2]],
            "crossings": [
                {"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": -1},
                {"e": 0, "pos_e": 1, "f": 2, "pos_f": 0, "sign": 1},
            ],
        }
    )


def single_crossing():
    return build_drawing(
        {
            "n": 4,
            "edges": [[0, 2], [1, 3]],
            "rotations": [[0], [1], [0], [1]],
            "crossings": [{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1}],
        }
    )


def flags(report):
    return (
        report.adjacency_crossing,
        report.fan_crossing,
        report.weakly_fan_planar,
        report.strongly_fan_planar,
    )


def test_k5_is_in_every_class(k5):
    assert detect_config_I(k5) == []
    assert detect_config_II_by_signs(k5) == []
    assert detect_config_II_III_by_region(k5) == []
    assert detect_triangle_crossings(k5) == []
    assert flags(classify(k5)) == (True, True, True, True)


def test_triangle_has_no_witnesses(tri):
    assert flags(classify(tri)) == (True, True, True, True)


def test_config_I_fixture():
    d = fixtures.build("config-I")
    (w,) = detect_config_I(d)
    assert w.kind == CONFIG_I and w.triple == (0, 1, 2)
    assert flags(classify(d)) == (False, False, False, False)


def test_opposite_fan_is_configuration_II():
    d = opposite_fan()
    build_plane_map(d)  # a valid sphere drawing
    (by_sign,) = detect_config_II_by_signs(d)
    (by_region,) = detect_config_II_III_by_region(d)
    assert by_sign.triple == by_region.triple == (0, 1, 2)
    assert by_region.kind == CONFIG_II and by_region.inside_count == 1
    assert by_sign.shared == (4,)
    r = classify(d)
    assert r.adjacency_crossing and not r.weakly_fan_planar


def test_config_II_fixture_detectors_agree():
    d = fixtures.build("config-II")
    assert [w.triple for w in detect_config_II_by_signs(d)] == [(0, 1, 2)]
    assert [(w.kind, w.inside_count) for w in detect_config_II_III_by_region(d)] == [(CONFIG_II, 1)]


def test_config_III_fixture():
    d = fixtures.build("config-III")
    assert detect_config_II_by_signs(d) == []
    (w,) = detect_config_II_III_by_region(d)
    assert (w.kind, w.triple, w.inside_count) == (CONFIG_III, (0, 1, 2), 2)
    assert flags(classify(d)) == (True, True, True, False)


def test_config_III_needs_an_outer_face():
    d = fixtures.build("config-III")
    bare = replace(d, outer_face=None)
    (w,) = detect_config_II_III_by_region(bare)
    assert w.kind == CONFIG_III and w.inside_count is None
    assert classify(bare).strongly_fan_planar is None


def test_triangle_crossing_fixture():
    d = fixtures.build("triangle-crossing")
    (w,) = detect_triangle_crossings(d)
    assert w.kind == TRIANGLE_CROSSING and w.edge == 3
    assert sorted(w.crossing_edges) == [0, 1, 2]
    r = classify(d)
    assert r.adjacency_crossing and not r.fan_crossing


def test_single_crossing_has_no_configuration_II():
    d = single_crossing()
    assert detect_config_II_by_signs(d) == []
    assert detect_config_II_III_by_region(d) == []


@pytest.mark.parametrize("name", [n for n in fixtures.names() if n != "bad-adjacent-cross"])
def test_sign_and_region_detectors_agree(name):
    """Also checks the class flags nest on every fixture."""
    d = fixtures.build(name)
    by_sign = [w.triple for w in detect_config_II_by_signs(d)]
    by_region = [w.triple for w in detect_config_II_III_by_region(d) if w.kind == CONFIG_II]
    assert by_sign == by_region
    r = classify(d)
    assert r.strongly_fan_planar is not True or r.weakly_fan_planar
    assert not r.weakly_fan_planar or r.fan_crossing
    assert not r.fan_crossing or r.adjacency_crossing


@given(geometric_inputs())
def test_straight_line_drawings_avoid_II_III_and_triangles(g):
    d, outer = ingest(g)
    if not d.is_map_connected():
        return
    assert detect_config_II_by_signs(d) == []
    assert detect_config_II_III_by_region(d, outer=outer) == []
    assert detect_triangle_crossings(d) == []
    r = classify(d)
    assert r.weakly_fan_planar == r.fan_crossing == r.adjacency_crossing
    assert r.strongly_fan_planar == r.adjacency_crossing


@given(geometric_inputs(max_n=8))
def test_flags_are_nested(g):
    d, outer = ingest(g)
    if not d.is_map_connected():
        return
    r = classify(d, outer=outer)
    if r.strongly_fan_planar:
        assert r.weakly_fan_planar
    if r.weakly_fan_planar:
        assert r.fan_crossing
    if r.fan_crossing:
        assert r.adjacency_crossing
