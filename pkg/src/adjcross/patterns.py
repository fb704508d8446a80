"""Forbidden crossing configurations and the class hierarchy they define.

=====================  =======================================
class                  forbidden in the drawing
=====================  =======================================
strongly fan-planar    Configurations I, II and III
weakly fan-planar      Configurations I and II
fan-crossing           Configuration I and triangle-crossings
adjacency-crossing     Configuration I
=====================  =======================================

All detectors enumerate every witness and report them sorted by edge
indices.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations

from .drawing import Drawing
from .planemap import PlaneMap, build_plane_map

CONFIG_I = "CONFIG_I"
CONFIG_II = "CONFIG_II"
CONFIG_III = "CONFIG_III"
TRIANGLE_CROSSING = "TRIANGLE_CROSSING"


@dataclass(frozen=True)
class ConfigWitness:
    kind: str
    edge: int
    crossing_edges: tuple[int, ...]
    shared: tuple[int, ...] = ()
    inside_count: int | None = None
    note: str | None = None

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.edge, *self.crossing_edges[:2])


@dataclass
class ClassReport:
    adjacency_crossing: bool
    fan_crossing: bool
    weakly_fan_planar: bool
    strongly_fan_planar: bool | None
    witnesses: dict[str, list[ConfigWitness]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "adjacency_crossing": self.adjacency_crossing,
            "fan_crossing": self.fan_crossing,
            "weakly_fan_planar": self.weakly_fan_planar,
            "strongly_fan_planar": self.strongly_fan_planar,
            "witnesses": {
                kind: [
                    {k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(w).items()}
                    for w in ws
                ]
                for kind, ws in self.witnesses.items()
            },
        }


def _adjacent_pairs(d: Drawing):
    """``(e, e1, e2, V)`` for edges e1 < e2 crossing e and sharing exactly one endpoint V."""
    for e in range(d.num_edges):
        for a, b in combinations(d.crossing_edges(e), 2):
            common = set(d.edges[a]) & set(d.edges[b])
            if len(common) == 1:
                yield e, a, b, common.pop()


def detect_config_I(d: Drawing) -> list[ConfigWitness]:
    """Edges crossed by two independent edges."""
    out = []
    for e in range(d.num_edges):
        for a, b in combinations(d.crossing_edges(e), 2):
            if not set(d.edges[a]) & set(d.edges[b]):
                out.append(ConfigWitness(CONFIG_I, e, (a, b)))
    return out


def _toward(d: Drawing, e: int, a: int, apex: int) -> int:
    # sign of a crossing e when a is oriented toward the apex
    return d.sign(e, a) * (1 if d.edges[a][1] == apex else -1)


def detect_config_II_by_signs(d: Drawing) -> list[ConfigWitness]:
    """Adjacent crossing edges that pass ``e`` in opposite directions."""
    out = []
    for e, a, b, apex in _adjacent_pairs(d):
        if _toward(d, e, a, apex) != _toward(d, e, b, apex):
            out.append(ConfigWitness(CONFIG_II, e, (a, b), (apex,), 1))
    return out


def _closed_curve(m: PlaneMap, e: int, a: int, b: int, apex: int) -> list[int]:
    """Map edges of the closed curve apex -> (a) -> e -> (b) -> apex."""
    d = m.drawing
    pieces = []
    for g in (a, b):
        c = d.crossing(g, e)
        off, count = m.edge_offset[g], len(d.crossings_on(g))
        if d.edges[g][1] == apex:
            pieces.extend(off + k for k in range(c.pos_e + 1, count + 1))
        else:
            pieces.extend(off + k for k in range(0, c.pos_e + 1))
    pa = d.crossing(e, a).pos_e
    pb = d.crossing(e, b).pos_e
    lo, hi = min(pa, pb), max(pa, pb)
    pieces.extend(m.edge_offset[e] + k for k in range(lo + 1, hi + 1))
    return pieces


def _outer_face_id(m: PlaneMap, outer: int | str | None) -> int | None:
    if outer is None:
        outer = m.drawing.outer_face
    if outer is None:
        return None
    if isinstance(outer, str):
        return m.face_by_key(outer).id
    return outer


def detect_config_II_III_by_region(
    d: Drawing, m: PlaneMap | None = None, outer: int | str | None = None
) -> list[ConfigWitness]:
    """Count endpoints of ``e`` enclosed by the curve that ``e``, e1, e2 bound.

    The curve runs from the shared vertex along e1 to its crossing with
    ``e``, along ``e`` to the crossing with e2 and back along e2.  Faces of
    ``m`` are merged across every other map edge; the endpoints of ``e``
    are located through the faces around them.  One enclosed endpoint is
    Configuration II; two is Configuration III, which needs a designated
    outer face (``outer`` or the drawing's own).  Without one, same-side
    triples are returned as Configuration III candidates with
    ``inside_count=None``.
    """
    if m is None:
        m = build_plane_map(d)
    out_id = _outer_face_id(m, outer)
    out = []
    for e, a, b, apex in _adjacent_pairs(d):
        labels = m.regions(_closed_curve(m, e, a, b, apex))
        count = max(labels) + 1
        u, v = d.edges[e]
        ru = labels[m.face_of[m.rotation[u][0]]]
        rv = labels[m.face_of[m.rotation[v][0]]]
        if count != 2:
            out.append(
                ConfigWitness(CONFIG_III, e, (a, b), (apex,), None, f"curve splits the sphere into {count} regions")
            )
        elif ru != rv:
            out.append(ConfigWitness(CONFIG_II, e, (a, b), (apex,), 1))
        elif out_id is None:
            out.append(ConfigWitness(CONFIG_III, e, (a, b), (apex,), None, "undetermined: no outer face designated"))
        elif labels[out_id] != ru:
            out.append(ConfigWitness(CONFIG_III, e, (a, b), (apex,), 2))
    return out


def detect_triangle_crossings(d: Drawing) -> list[ConfigWitness]:
    """Edges crossed by all three edges of some triangle ``u, v, x``."""
    out = []
    for e in range(d.num_edges):
        by_pair = {frozenset(d.edges[g]): g for g in d.crossing_edges(e)}
        verts = sorted({x for g in d.crossing_edges(e) for x in d.edges[g]})
        for u, v, x in combinations(verts, 3):
            sides = [by_pair.get(frozenset(p)) for p in ((u, v), (v, x), (u, x))]
            if None not in sides:
                out.append(ConfigWitness(TRIANGLE_CROSSING, e, tuple(sides), (u, v, x)))
    return out


def classify(d: Drawing, m: PlaneMap | None = None, outer: int | str | None = None) -> ClassReport:
    """Classify the given drawing; recognition of the abstract graph is not attempted."""
    if m is None:
        m = build_plane_map(d)
    conf1 = detect_config_I(d)
    tri = detect_triangle_crossings(d)
    region = detect_config_II_III_by_region(d, m, outer)
    conf2 = [w for w in region if w.kind == CONFIG_II]
    conf3 = [w for w in region if w.kind == CONFIG_III]
    adjacency = not conf1
    fan = adjacency and not tri
    weakly = adjacency and not conf2
    if not weakly or any(w.inside_count == 2 for w in conf3):
        strongly: bool | None = False
    elif conf3:
        strongly = None
    else:
        strongly = True
    return ClassReport(
        adjacency,
        fan,
        weakly,
        strongly,
        {CONFIG_I: conf1, CONFIG_II: conf2, CONFIG_III: conf3, TRIANGLE_CROSSING: tri},
    )
