"""Evaluate instances end to end and collect everything the corpus checks need."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from ..discharging import discharge, verify
from ..drawing import Drawing, validate
from ..geometry import GeometricInput, ingest
from ..patterns import (
    CONFIG_II,
    classify,
    detect_config_II_by_signs,
)
from ..planemap import PlaneMap, build_plane_map
from . import fixtures
from .audit import audit, bound_audit
from .generators import (
    gen_adjacency_crossing_geometric,
    gen_pentagram_variant,
    gen_random_geometric,
)
from .oracle import geometric_face_profiles

__all__ = ["Instance", "InstanceResult", "evaluate", "map_invariants", "run", "standard_corpus"]


@dataclass(frozen=True)
class Instance:
    name: str
    drawing: Drawing
    geometry: GeometricInput | None = None


@dataclass
class InstanceResult:
    name: str
    n: int
    edges: int
    valid: bool
    connected: bool
    straight_line: bool
    adjacency_crossing: bool | None = None
    two_connected: bool | None = None
    min_degree: int | None = None
    totals: list[Fraction] = field(default_factory=list)
    conserved: bool | None = None
    ch2_violations: list[int] = field(default_factory=list)
    negative_final: list[int] = field(default_factory=list)
    bound: dict | None = None
    witness_counts: dict[str, int] = field(default_factory=dict)
    signs_agree_with_regions: bool | None = None
    invariants: dict[str, bool] = field(default_factory=dict)
    oracle_agrees: bool | None = None
    audit_applicable: bool | None = None
    audit_failures: list[tuple[str, dict]] = field(default_factory=list)
    profiles: Counter = field(default_factory=Counter)


def map_invariants(m: PlaneMap) -> dict[str, bool]:
    """Counting identities every plane map must satisfy, recomputed from scratch."""
    V, E, F = m.num_vertices, m.num_edges, len(m.faces)
    degree = Counter()
    for s in range(E):
        degree[m.origin[2 * s]] += 1
        degree[m.origin[2 * s + 1]] += 1
    sizes = sum(len(f.darts) for f in m.faces)
    originals = sum(len(f.original_vertices) for f in m.faces)
    return {
        "euler": V - E + F == 2,
        "crossing_degree_4": all(degree[x] == 4 for x in range(m.n, V)),
        "face_sizes": sizes == 2 * E,
        "original_incidences": originals == 2 * E - 4 * (V - m.n),
    }


def _ch2_violations(m: PlaneMap, ch2: list[Fraction]) -> list[int]:
    exact = {(3, 1): Fraction(0), (3, 2): Fraction(1, 5), (4, 0): Fraction(0)}
    lower = {(4, 1): Fraction(-1, 5), (5, 0): Fraction(-1), (6, 0): Fraction(-2, 5)}
    bad = []
    for f in m.faces:
        q = ch2[f.id]
        if f.profile in exact:
            ok = q == exact[f.profile]
        else:
            ok = q >= lower.get(f.profile, Fraction(0))
        if not ok:
            bad.append(f.id)
    return bad


def evaluate(inst: Instance, with_audit: bool = True) -> InstanceResult:
    d = inst.drawing
    valid = validate(d).ok
    res = InstanceResult(inst.name, d.n, d.num_edges, valid, d.is_map_connected(), d.straight_line)
    if not (valid and res.connected):
        return res
    m = build_plane_map(d)
    res.profiles = m.profile_census()
    res.invariants = map_invariants(m)
    report = classify(d, m)
    res.adjacency_crossing = report.adjacency_crossing
    res.witness_counts = {k: len(v) for k, v in report.witnesses.items()}
    by_signs = {w.triple for w in detect_config_II_by_signs(d)}
    by_regions = {w.triple for w in report.witnesses[CONFIG_II]}
    res.signs_agree_with_regions = by_signs == by_regions
    res.two_connected = m.is_two_connected
    res.min_degree = min(d.degrees)

    ledger = discharge(m)
    res.totals = [ledger.total(i) for i in range(ledger.steps_done + 1)]
    res.conserved = all(t == 4 * d.n - 8 for t in res.totals)
    if ledger.steps_done == 5 and res.adjacency_crossing:
        res.ch2_violations = _ch2_violations(m, ledger.faces[2])
    res.negative_final = [f for f, q in enumerate(ledger.final()) if q < 0]
    res.bound = bound_audit(d)
    verify(ledger, d, adjacency_crossing=res.adjacency_crossing)

    if inst.geometry is not None:
        res.oracle_agrees = geometric_face_profiles(inst.geometry) == res.profiles
    if with_audit:
        rep = audit(d, m, ledger)
        res.audit_applicable = rep.applicable
        res.audit_failures = rep.failures()
    return res


def _geometric_instance(name: str, g: GeometricInput) -> Instance:
    d, _ = ingest(g)
    return Instance(name, d, g)


def standard_corpus(random_count: int = 1000, variants: int = 20, seed: int = 0) -> Iterator[Instance]:
    """Fixtures, pentagram variants and ``random_count`` random straight-line drawings.

    Random instances alternate between uniformly random segment sets and
    greedily grown adjacency-crossing ones, all with ``n <= 12``.
    """
    for name in fixtures.names():
        yield Instance(name, fixtures.build(name), fixtures.geometry(name))
    for k in range(variants):
        yield Instance(f"pentagram-variant-{seed + k}", gen_pentagram_variant(seed + k, 0.1 + 0.1 * (k % 4)))
    for k in range(random_count):
        s = seed + k
        n = 3 + s % 10
        if k % 2:
            g = gen_adjacency_crossing_geometric(n, s)
            yield _geometric_instance(f"greedy-{n}-{s}", g)
        else:
            pairs = n * (n - 1) // 2
            mcount = min(pairs, max(n - 1, (s * 7919) % (2 * n + 1)))
            g = gen_random_geometric(n, mcount, s)
            yield _geometric_instance(f"random-{n}-{mcount}-{s}", g)


def run(instances: Iterable[Instance], workers: int = 1, with_audit: bool = True) -> list[InstanceResult]:
    """Evaluate every instance; results come back in input order."""
    items = list(instances)
    if workers <= 1:
        return [evaluate(i, with_audit) for i in items]
    with ProcessPoolExecutor(workers) as pool:
        return list(pool.map(evaluate, items, [with_audit] * len(items), chunksize=16))
