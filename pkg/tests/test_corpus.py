import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from adjcross.corpus import fixtures
from adjcross.corpus.audit import audit, bound_audit
from adjcross.corpus.generators import (
    GenerationError,
    gen_adjacency_crossing_geometric,
    gen_pentagram_family,
    gen_pentagram_variant,
    gen_random_geometric,
    pentagon,
    plane_drawing,
)
from adjcross.corpus.runner import Instance, evaluate, standard_corpus
from adjcross.fileio import dump_drawing
from adjcross.geometry import general_position_check, ingest
from adjcross.patterns import classify, detect_config_I
from adjcross.planemap import build_plane_map


def test_dodecahedral_pentagram_counts(dodeca):
    assert (dodeca.n, dodeca.num_edges, dodeca.num_crossings) == (20, 90, 60)
    assert min(dodeca.degrees) == max(dodeca.degrees) == 9
    r = classify(dodeca)
    assert (r.adjacency_crossing, r.fan_crossing, r.weakly_fan_planar, r.strongly_fan_planar) == (True,) * 4


def test_single_pentagon_matches_convex_k5(k5):
    base = pentagon()
    m = build_plane_map(base)
    outer = m.faces[1].key
    d = gen_pentagram_family(base, skip_faces={outer})
    assert build_plane_map(d).profile_census() == build_plane_map(k5).profile_census()


def test_square_face_is_rejected():
    with pytest.raises(GenerationError):
        gen_pentagram_family(plane_drawing(nx.cycle_graph(4)))


def test_random_geometric_contract():
    g = gen_random_geometric(8, 14, seed=1)
    assert g.n == 8 and len(g.segments) == 14
    assert general_position_check(g).ok
    assert gen_random_geometric(8, 14, seed=1) == g
    tri = gen_random_geometric(3, 3, seed=5)
    d, _ = ingest(tri)
    assert d.num_crossings == 0
    assert build_plane_map(d).profile_census() == {(3, 3): 2}


@given(st.integers(3, 12), st.integers(0, 10**6))
def test_greedy_generator_is_adjacency_crossing(n, seed):
    g = gen_adjacency_crossing_geometric(n, seed)
    assert general_position_check(g).ok
    d, _ = ingest(g)
    assert detect_config_I(d) == []
    assert bound_audit(d)["straight_line_holds"]


@pytest.mark.parametrize("seed", range(5))
def test_pentagram_variants_keep_min_degree(seed):
    d = gen_pentagram_variant(seed, omit_rate=0.4)
    assert min(d.degrees) >= 6
    assert d.num_edges < 90
    assert detect_config_I(d) == []


def test_bound_audit_examples(dodeca, k5, tri):
    b = bound_audit(dodeca)
    assert (b["edges"], b["limit"], b["holds"], b["tight"]) == (90, 90, True, True)
    b = bound_audit(k5)
    assert (b["edges"], b["straight_line_limit"], b["straight_line_holds"]) == (10, 14, True)
    b = bound_audit(tri)
    assert (b["edges"], b["limit"], b["holds"]) == (3, 5, True)


def test_audit_dodecahedral_pentagram(dodeca):
    report = audit(dodeca)
    assert report.applicable and report.passed
    assert report.check("step4-fifth").examined == 60
    assert report.check("final-nonnegative").examined == 132


def test_audit_k5(k5):
    report = audit(k5)
    assert report.applicable and report.passed
    assert report.check("ch2-table").examined == 12
    assert report.check("pentagon-wedge-edge-neighbors").examined > 0
    assert report.check("final-nonnegative").examined == 0  # minimum degree 4


def test_audit_hexagram():
    report = audit(fixtures.build("hexagram"))
    assert report.passed and report.check("hexagon-wedge-edge-neighbors").examined == 6


@pytest.mark.parametrize("name, reason", [("config-I", "not adjacency-crossing"), ("path3", "plane map is not 2-connected")])
def test_audit_scope(name, reason):
    report = audit(fixtures.build(name))
    assert not report.applicable and report.reason == reason


def test_audit_report_serializes(k5):
    import json

    data = json.loads(audit(k5).to_json())
    assert data["passed"] and {c["name"] for c in data["checks"]} >= {"ch2-table", "step4-nonnegative"}


@pytest.mark.parametrize("name", fixtures.names())
def test_shipped_fixture_files_are_current(name):
    assert dump_drawing(fixtures.load(name)) == dump_drawing(fixtures.build(name))


def test_small_corpus_runs_clean():
    results = [evaluate(i) for i in standard_corpus(random_count=30, variants=2)]
    for r in results:
        if not (r.valid and r.connected):
            continue
        assert r.conserved and all(r.invariants.values())
        assert not r.ch2_violations and not r.audit_failures
        if r.oracle_agrees is not None:
            assert r.oracle_agrees


def test_evaluate_skips_invalid():
    r = evaluate(Instance("bad", fixtures.build("bad-adjacent-cross")))
    assert not r.valid and r.totals == []
