"""Charging and the five discharging steps, in exact rational arithmetic.

Every face ``f`` of the plane map starts with ``|f| + |V(f)| - 4`` and
the original vertices with nothing; the total is ``4n - 8``.  The steps
then move charge around:

1. every face gives 2/5 to each original vertex on its boundary;
2. every 1-triangle takes 2/5 from its wedge-neighbor;
3. faces with positive charge give ``min(1/10, ch/|Q|)`` to negatively
   charged 1-quadrilaterals across edges touching an original vertex;
4. faces with positive charge give ``min(1/5, ch/|S|)`` to negatively
   charged vertex-neighbors;
5. faces with positive charge split it evenly among negatively charged
   distant-neighbors.

Each step reads only the charges left by the previous one, so the order
in which faces are visited within a step never matters.  Steps 2-5 need a
2-connected map, where every face boundary is a simple cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .drawing import Drawing
from .planemap import PlaneMap

__all__ = [
    "ChargeLedger",
    "ConservationError",
    "DischargingError",
    "DistantChain",
    "Transfer",
    "VerificationReport",
    "WedgeChain",
    "discharge",
    "distant_share",
    "edge_share",
    "vertex_share",
    "distant_neighbors",
    "initial_charges",
    "step1",
    "step2",
    "step3",
    "step4",
    "step5",
    "verify",
    "wedge_neighbor",
]

VERTEX_SHARE = Fraction(2, 5)
TRIANGLE_SHARE = Fraction(2, 5)
EDGE_CAP = Fraction(1, 10)
VERTEX_CAP = Fraction(1, 5)


class DischargingError(RuntimeError):
    """A chain or precondition failure, which means the map is not what it claims."""


class ConservationError(DischargingError):
    pass


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Transfer:
    step: int
    source: int
    target: int
    target_is_vertex: bool
    conduit: str
    amount: Fraction


@dataclass(frozen=True)
class WedgeChain:
    """Wedge of a 1-triangle.

    ``faces`` are ``f_1 .. f_j`` and ``rungs[i]`` is the map edge between
    ``f_i`` and ``f_{i+1}`` (``rungs[0]`` lies on the triangle itself).
    """

    origin: int
    apex: int
    x_edge: int
    y_edge: int
    faces: tuple[int, ...]
    rungs: tuple[int, ...]

    @property
    def terminal(self) -> int:
        return self.faces[-1]

    @property
    def last_rung(self) -> int:
        return self.rungs[-1]

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class DistantChain:
    """Fan of 1-triangles around ``apex`` leading from ``origin`` to ``terminal``."""

    origin: int
    corner: int
    apex: int
    edge: int
    triangles: tuple[int, ...]
    quads: tuple[int, ...]
    terminal: int

    @property
    def k(self) -> int:
        return len(self.triangles)


def edge_share(charge: Fraction, recipients: int) -> Fraction:
    """Amount a step-3 sender gives each of its ``recipients``."""
    return min(EDGE_CAP, Fraction(charge) / recipients)


def vertex_share(charge: Fraction, recipients: int) -> Fraction:
    """Amount a step-4 sender gives each of its ``recipients``."""
    return min(VERTEX_CAP, Fraction(charge) / recipients)


def distant_share(charge: Fraction, recipients: int) -> Fraction:
    """Amount a step-5 sender gives each of its ``recipients``."""
    return Fraction(charge) / recipients


def _is(m: PlaneMap, f: int, size: int, orig: int) -> bool:
    return m.faces[f].profile == (size, orig)


# ----------------------------------------------------------------------------
# neighbor chains
# ----------------------------------------------------------------------------


def wedge_neighbor(m: PlaneMap, f0: int) -> WedgeChain:
    """Follow the wedge of the 1-triangle ``f0`` to its wedge-neighbor.

    Starting across the side joining the two crossings of ``f0``, step
    across opposite sides of 0-quadrilaterals until reaching a face that
    is not one.
    """
    face = m.faces[f0]
    if face.profile != (3, 1):
        raise ValueError(f"face {f0} is not a 1-triangle")
    darts = face.darts
    i = next(k for k in range(3) if m.origin[darts[k]] < m.n)
    apex = m.origin[darts[i]]
    to_x, rung, from_y = darts[i], darts[(i + 1) % 3], darts[(i + 2) % 3]
    x_edge, y_edge = m.parent[to_x >> 1], m.parent[from_y >> 1]

    faces: list[int] = []
    rungs: list[int] = [rung >> 1]
    seen = {f0}
    h = rung
    for _ in range(m.num_faces + 1):
        g = m.face_of[h ^ 1]
        if g in seen:
            raise DischargingError(f"wedge of face {f0} revisits face {g}")
        seen.add(g)
        faces.append(g)
        if not _is(m, g, 4, 0):
            return WedgeChain(f0, apex, x_edge, y_edge, tuple(faces), tuple(rungs))
        walk = m.faces[g].darts
        h = walk[(walk.index(h ^ 1) + 2) % 4]
        rungs.append(h >> 1)
    raise DischargingError(f"wedge of face {f0} does not terminate")


def distant_neighbors(m: PlaneMap, f0: int) -> list[DistantChain]:
    """All distant-neighbor chains starting at face ``f0``.

    Each crossing ``x1`` on the boundary followed (or preceded) by an
    original vertex ``A`` may start a chain: the faces across ``x1 A`` and
    onwards must be 1-triangles with apex ``A`` until the face beyond the
    side opposite ``A`` is not a 0-quadrilateral.  That face is the
    distant-neighbor.
    """
    walk = m.faces[f0].darts
    L = len(walk)
    out = []
    for i in range(L):
        x1 = m.origin[walk[i]]
        if not m.is_crossing(x1):
            continue
        prev_dart = walk[i - 1]
        starts = []
        # forward: x0 -> x1 -> A along the walk
        if m.head(walk[i]) < m.n:
            starts.append((walk[i], m.head(walk[i]), prev_dart))
        # backward: A -> x1 -> x0
        if m.origin[prev_dart] < m.n:
            starts.append((prev_dart, m.origin[prev_dart], walk[i]))
        for side, apex, other in starts:
            chain = _follow_fan(m, f0, x1, apex, side, m.parent[other >> 1])
            if chain is not None:
                out.append(chain)
    return out


def _follow_fan(m: PlaneMap, f0: int, x1: int, apex: int, side: int, edge: int) -> DistantChain | None:
    triangles: list[int] = []
    quads: list[int] = []
    seen = {f0}
    here = f0
    for _ in range(m.num_faces + 1):
        tri = m.edge_neighbor(here, side >> 1)
        if tri in seen or not _is(m, tri, 3, 1):
            return None
        seen.add(tri)
        triangles.append(tri)
        # sides of the triangle: corner-apex (entered), base opposite apex, apex-next
        darts = m.faces[tri].darts
        base = next(h for h in darts if m.origin[h] != apex and m.head(h) != apex)
        nxt = next(h for h in darts if h >> 1 != side >> 1 and h >> 1 != base >> 1)
        beyond = m.edge_neighbor(tri, base >> 1)
        if not _is(m, beyond, 4, 0):
            return DistantChain(f0, x1, apex, edge, tuple(triangles), tuple(quads), beyond)
        quads.append(beyond)
        here, side = tri, nxt
    raise DischargingError(f"fan from face {f0} does not terminate")


# ----------------------------------------------------------------------------
# ledger
# ----------------------------------------------------------------------------


@dataclass
class ChargeLedger:
    """Per-step face and vertex charges plus the log of every transfer.

    ``faces[i][f]`` is the charge of face ``f`` after step ``i`` and
    ``vertices[i][A]`` that of original vertex ``A``.  ``recipients[(i, f)]``
    is the multiset of ``(target, conduit)`` face ``f`` sent to at step ``i``.
    """

    map: PlaneMap
    faces: list[list[Fraction]] = field(default_factory=list)
    vertices: list[list[Fraction]] = field(default_factory=list)
    transfers: list[Transfer] = field(default_factory=list)
    recipients: dict[tuple[int, int], list[tuple[int, str]]] = field(default_factory=dict)
    wedges: dict[int, WedgeChain] = field(default_factory=dict)
    distant: dict[int, list[DistantChain]] = field(default_factory=dict)

    @property
    def steps_done(self) -> int:
        return len(self.faces) - 1

    @property
    def total_expected(self) -> int:
        return 4 * self.map.n - 8

    def total(self, step: int) -> Fraction:
        return sum(self.faces[step], Fraction(0)) + sum(self.vertices[step], Fraction(0))

    def charge(self, step: int, f: int) -> Fraction:
        return self.faces[step][f]

    def final(self) -> list[Fraction]:
        return self.faces[-1]

    def sent(self, step: int, source: int | None = None, target: int | None = None) -> list[Transfer]:
        return [
            t
            for t in self.transfers
            if t.step == step
            and (source is None or t.source == source)
            and (target is None or (t.target == target and not t.target_is_vertex))
        ]

    def _apply(self, step: int, transfers: list[Transfer]) -> None:
        faces = list(self.faces[-1])
        verts = list(self.vertices[-1])
        for t in transfers:
            if t.amount <= 0:
                raise DischargingError(f"non-positive transfer {t}")
            faces[t.source] -= t.amount
            if t.target_is_vertex:
                verts[t.target] += t.amount
            else:
                faces[t.target] += t.amount
        self.faces.append(faces)
        self.vertices.append(verts)
        self.transfers.extend(transfers)
        if self.total(step) != self.total_expected:
            raise ConservationError(
                f"step {step}: total {fmt(self.total(step))} != {self.total_expected}"
            )

    def transfer_rows(self) -> list[tuple[int, str, str, str, str]]:
        return [
            (t.step, f"F{t.source}", f"V{t.target}" if t.target_is_vertex else f"F{t.target}", t.conduit, fmt(t.amount))
            for t in self.transfers
        ]

    def to_dict(self) -> dict:
        return {
            "steps_done": self.steps_done,
            "faces": [
                {
                    "id": f.id,
                    "key": f.key,
                    "profile": list(f.profile),
                    "charges": [fmt(self.faces[i][f.id]) for i in range(len(self.faces))],
                }
                for f in self.map.faces
            ],
            "vertices": [
                {"id": a, "charges": [fmt(self.vertices[i][a]) for i in range(len(self.vertices))]}
                for a in range(self.map.n)
            ],
        }


def initial_charges(m: PlaneMap) -> ChargeLedger:
    ledger = ChargeLedger(m)
    ledger.faces.append([Fraction(f.size + len(f.original_vertices) - 4) for f in m.faces])
    ledger.vertices.append([Fraction(0)] * m.n)
    if ledger.total(0) != ledger.total_expected:
        raise ConservationError(f"initial total {ledger.total(0)} != {ledger.total_expected}")
    return ledger


def _require(ledger: ChargeLedger, step: int) -> None:
    if ledger.steps_done != step - 1:
        raise DischargingError(f"step {step} needs step {step - 1} done, have {ledger.steps_done}")
    if step >= 2 and not ledger.map.is_two_connected:
        raise DischargingError("steps 2-5 need a 2-connected plane map")


def step1(ledger: ChargeLedger) -> ChargeLedger:
    _require(ledger, 1)
    transfers = [
        Transfer(1, f.id, a, True, f"V{a}", VERTEX_SHARE)
        for f in ledger.map.faces
        for a in f.original_vertices
    ]
    ledger._apply(1, transfers)
    return ledger


def step2(ledger: ChargeLedger) -> ChargeLedger:
    _require(ledger, 2)
    m = ledger.map
    transfers = []
    for f in m.faces:
        if f.profile != (3, 1):
            continue
        chain = wedge_neighbor(m, f.id)
        ledger.wedges[f.id] = chain
        s = chain.last_rung
        if not (m.is_crossing(m.origin[2 * s]) and m.is_crossing(m.origin[2 * s + 1])):
            raise DischargingError(f"face {chain.terminal} would send through an edge at an original vertex")
        transfers.append(Transfer(2, chain.terminal, f.id, False, m.edge_label(s), TRIANGLE_SHARE))
        ledger.recipients.setdefault((2, chain.terminal), []).append((f.id, m.edge_label(s)))
    ledger._apply(2, transfers)
    return ledger


def step3(ledger: ChargeLedger) -> ChargeLedger:
    _require(ledger, 3)
    m = ledger.map
    ch2 = ledger.faces[2]
    transfers = []
    for f in m.faces:
        if ch2[f.id] <= 0:
            continue
        q = []
        for h in f.darts:
            if m.origin[h] >= m.n and m.head(h) >= m.n:
                continue
            g = m.face_of[h ^ 1]
            if _is(m, g, 4, 1) and ch2[g] < 0:
                q.append((g, m.edge_label(h >> 1)))
        if not q:
            continue
        amount = edge_share(ch2[f.id], len(q))
        ledger.recipients[(3, f.id)] = q
        transfers.extend(Transfer(3, f.id, g, False, c, amount) for g, c in q)
    ledger._apply(3, transfers)
    return ledger


def step4(ledger: ChargeLedger) -> ChargeLedger:
    _require(ledger, 4)
    m = ledger.map
    ch3 = ledger.faces[3]
    transfers = []
    for f in m.faces:
        if ch3[f.id] <= 0:
            continue
        s = []
        for x in f.vertices:
            if not m.is_crossing(x):
                continue
            g = m.vertex_neighbor(f.id, x)
            if g is not None and ch3[g] < 0:
                s.append((g, m.vertex_label(x)))
        if not s:
            continue
        amount = vertex_share(ch3[f.id], len(s))
        ledger.recipients[(4, f.id)] = s
        transfers.extend(Transfer(4, f.id, g, False, c, amount) for g, c in s)
    ledger._apply(4, transfers)
    return ledger


def step5(ledger: ChargeLedger) -> ChargeLedger:
    _require(ledger, 5)
    m = ledger.map
    ch4 = ledger.faces[4]
    transfers = []
    for f in m.faces:
        chains = distant_neighbors(m, f.id)
        ledger.distant[f.id] = chains
        if ch4[f.id] <= 0:
            continue
        s = [
            (c.terminal, f"D{m.vertex_label(c.corner)}/V{c.apex}")
            for c in chains
            if ch4[c.terminal] < 0
        ]
        if not s:
            continue
        amount = distant_share(ch4[f.id], len(s))
        ledger.recipients[(5, f.id)] = s
        transfers.extend(Transfer(5, f.id, g, False, c, amount) for g, c in s)
    ledger._apply(5, transfers)
    return ledger


def discharge(m: PlaneMap) -> ChargeLedger:
    """Run every step the map admits: all five if 2-connected, else only step 1."""
    ledger = step1(initial_charges(m))
    if m.is_two_connected:
        for step in (step2, step3, step4, step5):
            step(ledger)
    return ledger


# ----------------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------------


@dataclass
class VerificationReport:
    n: int
    num_edges: int
    preconditions: dict
    cut_vertices: list[int]
    steps_done: int
    conservation: list[dict]
    negative_faces: list[tuple[int, Fraction]]
    nonnegativity_required: bool
    vertex_charges_ok: bool
    bound: dict
    straight_line: dict | None = None

    @property
    def conserved(self) -> bool:
        return all(c["ok"] for c in self.conservation)

    @property
    def nonnegative(self) -> bool:
        return not self.negative_faces

    @property
    def ok(self) -> bool:
        good = self.conserved and self.vertex_charges_ok and self.bound["holds"]
        if self.nonnegativity_required:
            good = good and self.nonnegative
        if self.straight_line is not None:
            good = good and self.straight_line["holds"]
        return good

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "n": self.n,
            "edges": self.num_edges,
            "preconditions": self.preconditions,
            "cut_vertices": self.cut_vertices,
            "steps_done": self.steps_done,
            "conservation": self.conservation,
            "nonnegative": self.nonnegative,
            "nonnegativity_required": self.nonnegativity_required,
            "negative_faces": [{"face": f, "charge": fmt(q)} for f, q in self.negative_faces],
            "vertex_charges_ok": self.vertex_charges_ok,
            "bound": self.bound,
            "straight_line": self.straight_line,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify(
    ledger: ChargeLedger,
    d: Drawing | None = None,
    outer: int | str | None = None,
    adjacency_crossing: bool | None = None,
    straight_line: bool | None = None,
) -> VerificationReport:
    """Check the ledger and evaluate the edge bounds.

    For a straight-line drawing (``straight_line``, defaulting to the
    drawing's flag) with a designated outer face (``outer`` or the
    drawing's own), the outer face's final charge is compared with
    ``1.6|f| - 4 >= 0.8`` and ``|E| <= 5n - 11`` is evaluated as well.
    """
    m = ledger.map
    d = d or m.drawing
    n, edges = d.n, d.num_edges
    if adjacency_crossing is None:
        from .patterns import detect_config_I

        adjacency_crossing = not detect_config_I(d)
    cuts = m.two_connectivity()
    pre = {
        "n_ge_3": n >= 3,
        "n_ge_9": n >= 9,
        "min_degree_ge_6": bool(d.n) and min(d.degrees) >= 6,
        "two_connected": not cuts and m.num_vertices >= 3,
        "adjacency_crossing": adjacency_crossing,
    }
    conservation = [
        {"step": i, "total": fmt(ledger.total(i)), "ok": ledger.total(i) == 4 * n - 8}
        for i in range(len(ledger.faces))
    ]
    final = ledger.final()
    negative = [(f, q) for f, q in enumerate(final) if q < 0]
    vertex_ok = all(
        ledger.vertices[-1][a] == VERTEX_SHARE * d.degrees[a] for a in range(n)
    )
    limit = 5 * n - 10
    bound = {
        "check": f"{edges} <= 5*{n}-10 = {limit}: {edges <= limit}",
        "edges": edges,
        "limit": limit,
        "holds": edges <= limit,
        "tight": edges == limit,
        "vertex_total": fmt(sum(ledger.vertices[-1], Fraction(0))),
        "four_n_minus_8": 4 * n - 8,
    }
    report = VerificationReport(
        n,
        edges,
        pre,
        cuts,
        ledger.steps_done,
        conservation,
        negative,
        all(pre.values()) and ledger.steps_done == 5,
        vertex_ok,
        bound,
    )
    if outer is None:
        outer = d.outer_face
    if straight_line is None:
        straight_line = d.straight_line
    if straight_line and outer is not None:
        fid = m.face_by_key(outer).id if isinstance(outer, str) else outer
        face = m.faces[fid]
        ch = final[fid]
        moved = [t for t in ledger.transfers if t.step >= 2 and (t.source == fid or (t.target == fid and not t.target_is_vertex))]
        expected = Fraction(8, 5) * face.size - 4
        report.straight_line = {
            "outer_face": fid,
            "outer_check": f"1.6*{face.size}-4 = {fmt(expected)} >= 4/5: {expected >= Fraction(4, 5)}",
            "bound_check": f"{edges} <= 5*{n}-11 = {5 * n - 11}: {edges <= 5 * n - 11}",
            "outer_profile": list(face.profile),
            "outer_charge": fmt(ch),
            "only_step1": not moved,
            "identity": fmt(expected),
            "identity_holds": (ch == expected) if face.profile[0] == face.profile[1] else None,
            "outer_ge_0.8": ch >= Fraction(4, 5),
            "edges": edges,
            "limit": 5 * n - 11,
            "holds": edges <= 5 * n - 11,
        }
    return report
