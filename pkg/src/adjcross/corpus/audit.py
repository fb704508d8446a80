"""Per-instance checks of the structural facts the discharging relies on.

Every check is scoped by detecting its hypotheses on the instance; when
they never hold the check passes vacuously.  A failure carries the face,
edge and vertex ids needed to find it.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from ..discharging import ChargeLedger, DischargingError, discharge, fmt, wedge_neighbor
from ..drawing import Drawing, validate
from ..patterns import detect_config_I
from ..planemap import PlaneMap, build_plane_map

__all__ = ["AuditReport", "CheckResult", "audit", "bound_audit"]

TENTH = Fraction(1, 10)
FIFTH = Fraction(1, 5)
TWO_FIFTHS = Fraction(2, 5)


@dataclass
class CheckResult:
    name: str
    claim: str
    examined: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def hit(self, ok: bool, **witness) -> None:
        self.examined += 1
        if not ok:
            self.failures.append(witness)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "examined": self.examined,
            "passed": self.passed,
            "failures": self.failures,
        }


@dataclass
class AuditReport:
    applicable: bool
    reason: str | None
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def failures(self) -> list[tuple[str, dict]]:
        return [(c.name, w) for c in self.checks for w in c.failures]

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "reason": self.reason,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def bound_audit(d: Drawing) -> dict:
    """Edge-count bounds from the counts alone, without any discharging."""
    n, e = d.n, d.num_edges
    out = {
        "n": n,
        "edges": e,
        "limit": 5 * n - 10,
        "holds": e <= 5 * n - 10,
        "tight": e == 5 * n - 10,
    }
    if d.straight_line and n >= 3:
        out["straight_line_limit"] = 5 * n - 11
        out["straight_line_holds"] = e <= 5 * n - 11
    return out


# ----------------------------------------------------------------------------


class _Face:
    """Boundary data of a face in the ``v_i, e_i, A_i, B_i`` naming.

    ``e_i`` is the ``i``-th dart of the walk, from ``v_{i-1}`` to ``v_i``;
    ``A_i`` is the endpoint of its edge lying beyond ``v_{i-1}``.
    """

    def __init__(self, m: PlaneMap, fid: int):
        face = m.faces[fid]
        self.id = fid
        self.darts = face.darts
        self.k = len(self.darts)
        self.v = [m.head(h) for h in self.darts]
        self.edge = [m.parent[h >> 1] for h in self.darts]
        self.A = []
        self.B = []
        for h, p in zip(self.darts, self.edge):
            u, w = m.drawing.edges[p]
            a, b = (u, w) if h % 2 == 0 else (w, u)
            self.A.append(a)
            self.B.append(b)

    def pair(self, i: int) -> set[int]:
        i %= self.k
        return {self.A[i], self.B[i]}


def audit(
    d: Drawing,
    m: PlaneMap | None = None,
    ledger: ChargeLedger | None = None,
) -> AuditReport:
    """Run every applicable check on one instance."""
    report = validate(d)
    if not report.ok:
        return AuditReport(False, "invalid drawing: " + ", ".join(sorted(report.codes())))
    if detect_config_I(d):
        return AuditReport(False, "not adjacency-crossing")
    m = m or build_plane_map(d)
    if not m.is_two_connected:
        return AuditReport(False, "plane map is not 2-connected")
    ledger = ledger or discharge(m)
    if ledger.steps_done != 5:
        return AuditReport(False, "ledger incomplete")
    return AuditReport(True, None, _run_checks(d, m, ledger))


def _run_checks(d: Drawing, m: PlaneMap, L: ChargeLedger) -> list[CheckResult]:
    ch1, ch2, ch3, ch4, ch5 = (L.faces[i] for i in range(1, 6))
    profile = [f.profile for f in m.faces]
    deg = d.degrees
    checks: list[CheckResult] = []

    def new(name: str, claim: str) -> CheckResult:
        c = CheckResult(name, claim)
        checks.append(c)
        return c

    # which 1-triangle receives through which edge of which face
    by_rung: dict[tuple[int, int], list[int]] = defaultdict(list)
    c = new("one-wedge-neighbor", "each face edge serves at most one 1-triangle; its face has size >= 5 or is a 4-face with an original vertex")
    for f in m.faces:
        if f.profile != (3, 1):
            continue
        try:
            w = L.wedges.get(f.id) or wedge_neighbor(m, f.id)
        except DischargingError as exc:
            c.hit(False, triangle=f.id, error=str(exc))
            continue
        by_rung[(w.terminal, w.last_rung)].append(f.id)
        size, orig = profile[w.terminal]
        c.hit(size >= 5 or (size == 4 and orig >= 1), triangle=f.id, face=w.terminal, profile=[size, orig])
    for (face, s), ts in by_rung.items():
        c.hit(len(ts) == 1, face=face, edge=m.edge_label(s), triangles=ts)
    tri_at = {key: ts[0] for key, ts in by_rung.items()}

    sends2: dict[int, set[int]] = defaultdict(set)
    for t in L.transfers:
        if t.step == 2:
            sends2[t.source].add(L.wedges[t.target].last_rung)

    c = new("step1-charges", "after step 1 every vertex holds 0.4 deg and only 1-triangles are negative, at -0.4")
    for a in range(d.n):
        c.hit(L.vertices[1][a] == TWO_FIFTHS * deg[a], vertex=a, charge=fmt(L.vertices[1][a]))
    for f in m.faces:
        if f.profile == (3, 1):
            c.hit(ch1[f.id] == -TWO_FIFTHS, face=f.id, charge=fmt(ch1[f.id]))
        else:
            c.hit(ch1[f.id] >= 0, face=f.id, profile=list(f.profile), charge=fmt(ch1[f.id]))

    c = new("ch2-table", "charges after step 2 match the per-profile values and bounds")
    exact = {(3, 1): Fraction(0), (3, 2): FIFTH, (4, 0): Fraction(0)}
    lower = {(4, 1): -FIFTH, (5, 0): Fraction(-1), (6, 0): -TWO_FIFTHS}
    for f in m.faces:
        q, (size, orig) = ch2[f.id], f.profile
        if orig == size:
            ok = q == Fraction(8, 5) * size - 4
        elif orig == 0:
            ok = q >= Fraction(3, 5) * size - 4
        else:
            ok = q >= Fraction(3, 5) * size + orig - Fraction(18, 5)
        if f.profile in exact:
            ok = ok and q == exact[f.profile]
        elif f.profile in lower:
            ok = ok and q >= lower[f.profile]
        else:
            ok = ok and q >= 0
        c.hit(ok, face=f.id, profile=list(f.profile), charge=fmt(q))

    c_dis = new("AB-disjoint", "consecutive edges of a 0-pentagon or 0-hexagon lie on edges with no common endpoint")
    c_com = new("AB-common-vertex", "edges two apart on a 0-pentagon or 0-hexagon lie on edges sharing an endpoint")
    c_apex = new("wedge-apex", "a 1-triangle served through e_i has apex A_{i+1} = B_{i-1}")
    c_a4b2 = new("pentagon-apex-identity", "a 0-pentagon serving 1-triangles at e_i and e_{i+1} has A_{i-1} = B_{i+2}")
    c_pen = new("pentagon-wedge-edge-neighbors", "a 0-pentagon serving 1-triangles at e_i and e_{i+1} has them as edge-neighbors there")
    c_hex = new("hexagon-wedge-edge-neighbors", "a 0-hexagon serving a 1-triangle at every edge has them as edge-neighbors")
    for f in m.faces:
        if f.profile not in ((5, 0), (6, 0)):
            continue
        F = _Face(m, f.id)
        k = F.k
        t = [tri_at.get((f.id, F.darts[i] >> 1)) for i in range(k)]
        for i in range(k):
            c_dis.hit(not (F.pair(i) & F.pair(i + 1)), face=f.id, i=i, edges=[F.edge[i], F.edge[(i + 1) % k]])
            c_com.hit(bool(F.pair(i) & F.pair(i + 2)), face=f.id, i=i, edges=[F.edge[i], F.edge[(i + 2) % k]])
            if t[i] is not None:
                apex = L.wedges[t[i]].apex
                c_apex.hit(
                    apex == F.A[(i + 1) % k] == F.B[(i - 1) % k],
                    face=f.id, i=i, triangle=t[i], apex=apex,
                )
        if k == 5:
            for i in range(5):
                j = (i + 1) % 5
                if t[i] is None or t[j] is None:
                    continue
                c_a4b2.hit(F.A[(i - 1) % 5] == F.B[(i + 2) % 5], face=f.id, i=i)
                for x in (i, j):
                    c_pen.hit(
                        m.edge_neighbor(f.id, F.darts[x] >> 1) == t[x],
                        face=f.id, i=x, triangle=t[x], edge=m.edge_label(F.darts[x] >> 1),
                    )
        elif all(x is not None for x in t):
            for i in range(6):
                c_hex.hit(
                    m.edge_neighbor(f.id, F.darts[i] >> 1) == t[i],
                    face=f.id, i=i, triangle=t[i], edge=m.edge_label(F.darts[i] >> 1),
                )

    step3_in: dict[tuple[int, int, str], Fraction] = defaultdict(Fraction)
    step4_in: dict[tuple[int, int, str], Fraction] = defaultdict(Fraction)
    for t in L.transfers:
        if t.step == 3:
            step3_in[(t.source, t.target, t.conduit)] += t.amount
        elif t.step == 4:
            step4_in[(t.source, t.target, t.conduit)] += t.amount

    c = new("step4-fifth", "a face with negative charge serving 1-triangle edge-neighbors at two consecutive edges gets 0.2 at their common vertex")
    for f in m.faces:
        if ch3[f.id] >= 0:
            continue
        darts = f.darts
        for j in range(len(darts)):
            h1, h2 = darts[j], darts[(j + 1) % len(darts)]
            served = all(h >> 1 in sends2[f.id] and profile[m.edge_neighbor(f.id, h >> 1)] == (3, 1) for h in (h1, h2))
            if not served:
                continue
            v = m.head(h1)
            g = m.vertex_neighbor(f.id, v)
            got = step4_in.get((g, f.id, m.vertex_label(v)), Fraction(0))
            c.hit(got == FIFTH, face=f.id, vertex=m.vertex_label(v), sender=g, amount=fmt(got))

    c = new("step3-tenth", "a negative 1-quadrilateral gets 0.1 across each side at its original vertex, unless the neighbor is a 1-triangle or a negative 1-quadrilateral")
    for f in m.faces:
        if f.profile != (4, 1) or ch2[f.id] >= 0:
            continue
        for h in f.darts:
            if m.origin[h] >= m.n and m.head(h) >= m.n:
                continue
            g = m.edge_neighbor(f.id, h >> 1)
            if profile[g] == (3, 1) or (profile[g] == (4, 1) and ch2[g] < 0):
                continue
            label = m.edge_label(h >> 1)
            got = step3_in.get((g, f.id, label), Fraction(0))
            c.hit(got == TENTH, face=f.id, edge=label, sender=g, amount=fmt(got))

    quads = {f.id: _quad_sides(m, f.id) for f in m.faces if f.profile == (4, 1)}

    c = new("neighboring-1-quadrilaterals", "two 1-quadrilaterals sharing a side at A and serving 1-triangles at x lie on one crossing edge joining their other neighbors of A, with the triangles as edge-neighbors")
    for f1, q1 in quads.items():
        for f2, q2 in quads.items():
            if f2 <= f1 or deg[q1["A"]] < 3:
                continue
            shared = {h >> 1 for h in q1["at_A"]} & {h >> 1 for h in q2["at_A"]}
            for s in shared:
                x = m.origin[2 * s] if m.origin[2 * s] != q1["A"] else m.head(2 * s)
                r1, r2 = q1["at_x"][x], q2["at_x"][x]
                if r1 >> 1 not in sends2[f1] or r2 >> 1 not in sends2[f2]:
                    continue
                c1 = _other_end(d, m.parent[q1["other_at_A"][s] >> 1], q1["A"])
                c2 = _other_end(d, m.parent[q2["other_at_A"][s] >> 1], q2["A"])
                e1, e2 = m.parent[r1 >> 1], m.parent[r2 >> 1]
                t1 = tri_at[(f1, r1 >> 1)]
                t2 = tri_at[(f2, r2 >> 1)]
                ok = e1 == e2 and set(d.edges[e1]) == {c1, c2}
                ok = ok and m.edge_neighbor(f1, r1 >> 1) == t1 and m.edge_neighbor(f2, r2 >> 1) == t2
                c.hit(ok, faces=[f1, f2], shared=m.edge_label(s), crossing=m.vertex_label(x))

    c_mix = new("no-1-triangle-beside-1-quadrilateral", "a 1-quadrilateral serving two 1-triangles never has a 1-triangle on one side at A and a negative 1-quadrilateral on the other")
    c_two = new("paired-neighbors-step4", "a 1-quadrilateral serving two 1-triangles with two 1-triangles, or two negative 1-quadrilaterals, beside it at A is non-negative after step 4")
    for f, q in quads.items():
        if len(sends2[f]) != 2 or deg[q["A"]] < 4:
            continue
        g1, g2 = (m.edge_neighbor(f, h >> 1) for h in q["at_A"])
        tri = [profile[g] == (3, 1) for g in (g1, g2)]
        negq = [profile[g] == (4, 1) and ch2[g] < 0 for g in (g1, g2)]
        c_mix.hit(not ((tri[0] and negq[1]) or (tri[1] and negq[0])), face=f, neighbors=[g1, g2])
        if all(tri) or all(negq):
            c_two.hit(ch4[f] >= 0, face=f, neighbors=[g1, g2], charge=fmt(ch4[f]))

    c = new("step4-nonnegative", "after step 4 only 1-quadrilaterals that were negative after step 2 can be negative")
    for f in m.faces:
        if f.profile == (4, 1) and ch2[f.id] < 0:
            continue
        c.hit(ch4[f.id] >= 0, face=f.id, profile=list(f.profile), charge=fmt(ch4[f.id]))

    c = new("final-nonnegative", "with minimum degree at least 6 every face ends non-negative")
    if d.n and min(deg) >= 6:
        for f in m.faces:
            c.hit(ch5[f.id] >= 0, face=f.id, profile=list(f.profile), charge=fmt(ch5[f.id]))

    return checks


def _other_end(d: Drawing, e: int, a: int) -> int:
    u, v = d.edges[e]
    return v if u == a else u


def _quad_sides(m: PlaneMap, fid: int) -> dict:
    """Sides of a 1-quadrilateral ``A, x, y, z``."""
    darts = m.faces[fid].darts
    i = next(k for k in range(4) if m.origin[darts[k]] < m.n)
    a = m.origin[darts[i]]
    out_a, into_a = darts[i], darts[(i - 1) % 4]
    x, z = m.head(out_a), m.origin[into_a]
    return {
        "A": a,
        "at_A": (out_a, into_a),
        # for each side at A: the other side at A
        "other_at_A": {out_a >> 1: into_a, into_a >> 1: out_a},
        # for each crossing next to A: its side away from A
        "at_x": {x: darts[(i + 1) % 4], z: darts[(i + 2) % 4]},
    }
