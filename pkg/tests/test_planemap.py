from collections import Counter

import pytest
from conftest import geometric_inputs
from hypothesis import given

from adjcross.corpus import fixtures
from adjcross.corpus.runner import map_invariants
from adjcross.drawing import build_drawing
from adjcross.geometry import ingest
from adjcross.planemap import PlaneMapError, build_plane_map, check_sphere

A, B, C, D, E = range(5)


def crossing_pair():
    return build_drawing(
        {
            "n": 4,
            "edges": [[0, 2], [1, 3]],
            "rotations": [[0], [1], [0], [1]],
            "crossings": [{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1}],
        }
    )


def k5_edge(k5, u, v):
    return k5.edges.index((min(u, v), max(u, v)))


def test_triangle_counts(tri):
    m = build_plane_map(tri)
    assert (m.num_vertices, m.num_edges, m.num_faces) == (3, 3, 2)
    assert [f.profile for f in m.faces] == [(3, 3), (3, 3)]


def test_two_crossing_edges_give_one_face():
    m = build_plane_map(crossing_pair())
    assert (m.num_vertices, m.num_edges, m.num_faces) == (5, 4, 1)
    assert m.two_connectivity() == [4]


def test_k5_counts_and_census(k5):
    m = build_plane_map(k5)
    assert (m.num_vertices, m.num_edges, m.num_faces) == (10, 20, 12)
    assert m.profile_census() == Counter({(3, 1): 5, (3, 2): 5, (5, 0): 1, (5, 5): 1})
    assert m.two_connectivity() == []


def test_dodecahedral_pentagram_census(dodeca):
    m = build_plane_map(dodeca)
    assert m.num_faces == 132
    assert m.profile_census() == Counter({(3, 2): 60, (3, 1): 60, (5, 0): 12})
    assert (m.num_vertices, m.num_edges) == (80, 210)


def test_triangle_edge_neighbors(tri):
    m = build_plane_map(tri)
    for s in range(m.num_edges):
        assert m.edge_neighbor(0, s) == 1


def test_k5_edge_neighbors(k5):
    m = build_plane_map(k5)
    pentagon = next(f.id for f in m.faces if f.profile == (5, 0))
    ones = {f.id for f in m.faces if f.profile == (3, 1)}
    be = k5_edge(k5, B, E)
    middle = m.edge_offset[be] + 1  # the piece of BE between its two crossings
    sides = [m.face_of[2 * middle], m.face_of[2 * middle + 1]]
    assert pentagon in sides
    one = next(f for f in sides if f in ones)
    assert m.edge_neighbor(one, middle) == pentagon
    around = {m.edge_neighbor(pentagon, h >> 1) for h in m.faces[pentagon].darts}
    assert around == ones


def test_k5_vertex_neighbors(k5):
    m = build_plane_map(k5)
    pentagon = next(f for f in m.faces if f.profile == (5, 0))
    twos = {f.id for f in m.faces if f.profile == (3, 2)}
    opposite = {m.vertex_neighbor(pentagon.id, x) for x in pentagon.vertices}
    assert opposite == twos
    for f in twos:
        (x,) = [v for v in m.faces[f].vertices if m.is_crossing(v)]
        assert m.vertex_neighbor(f, x) == pentagon.id


def test_vertex_neighbor_needs_a_crossing(tri):
    m = build_plane_map(tri)
    with pytest.raises(ValueError):
        m.vertex_neighbor(0, 0)


def test_path_has_a_cut_vertex():
    m = build_plane_map(fixtures.build("path3"))
    assert m.two_connectivity() == [1]
    assert not m.is_two_connected


def test_sub_map_keeps_one_crossing(k5):
    m = build_plane_map(k5)
    keep = {k5_edge(k5, A, C), k5_edge(k5, B, E), k5_edge(k5, A, B)}
    sub = m.sub_map(keep)
    assert sub.drawing.num_edges == 3
    assert sub.drawing.num_crossings == 1
    (c,) = sub.drawing.crossings
    assert {sub.kept_edges[c.e], sub.kept_edges[c.f]} == {k5_edge(k5, A, C), k5_edge(k5, B, E)}
    # AC, BE and AB bound one triangle region, the rest is one region
    assert len(sub.regions) == 2


def test_sub_map_identity_and_empty(k5):
    m = build_plane_map(k5)
    full = m.sub_map(range(k5.num_edges))
    assert full.plane_map.profile_census() == m.profile_census()
    assert len(full.regions) == m.num_faces
    assert all(full.correspondence[f] == full.region_of[f] for f in range(m.num_faces))
    empty = m.sub_map(())
    assert len(empty.regions) == 1 and empty.plane_map is None


def test_twisted_rotation_is_not_a_sphere():
    # K4 with one rotation reversed is a valid combinatorial drawing on the torus, not the sphere
    k4 = fixtures.build("k5-convex").restricted([0, 1, 2, 4, 5, 7])[0]
    doc = {
        "n": 4,
        "edges": [list(e) for e in k4.edges],
        "rotations": [list(reversed(r)) if v == 0 else list(r) for v, r in enumerate(k4.rotations)],
        "crossings": [c._asdict() for c in k4.crossings],
    }
    twisted = build_drawing(doc)
    with pytest.raises(PlaneMapError) as err:
        build_plane_map(twisted)
    assert err.value.code == "NOT_SPHERE"
    assert [v.code for v in check_sphere(twisted)] == ["NOT_SPHERE"]


def test_disconnected_drawing_is_rejected():
    d = build_drawing({"n": 4, "edges": [[0, 1], [2, 3]], "rotations": [[0], [0], [1], [1]]})
    with pytest.raises(PlaneMapError) as err:
        build_plane_map(d)
    assert err.value.code == "DISCONNECTED"


def test_face_keys_are_canonical(k5):
    m = build_plane_map(k5)
    assert all(m.face_by_key(f.key).id == f.id for f in m.faces)
    assert len({f.key for f in m.faces}) == m.num_faces


@given(geometric_inputs())
def test_map_invariants_hold(g):
    d, _ = ingest(g)
    if not d.is_map_connected():
        with pytest.raises(PlaneMapError):
            build_plane_map(d)
        return
    m = build_plane_map(d)
    assert all(map_invariants(m).values())
    for x in range(d.n, m.num_vertices):
        assert m.degree(x) == 4
    assert sum(f.size for f in m.faces) == 2 * m.num_edges
