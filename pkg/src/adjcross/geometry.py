"""Exact ingestion of straight-line (and polyline) drawings.

Coordinates are :class:`fractions.Fraction`; every predicate is exact.
Degenerate input is rejected rather than perturbed.

Edges may optionally carry interior bend points.  Straight-line input is
the case with no bends; bends are how hand-drawn figures that are not
straight-line realizable get encoded as fixtures.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .drawing import Crossing, Drawing, ValidationReport, Violation
from .planemap import build_plane_map

__all__ = [
    "DegenerateInput",
    "GeometricInput",
    "general_position_check",
    "ingest",
    "make_input",
    "orientation",
]

Point = tuple[Fraction, Fraction]


class DegenerateInput(ValueError):
    """Geometric input violating general position; carries the report."""

    def __init__(self, report: ValidationReport):
        codes = ", ".join(sorted(report.codes()))
        super().__init__(f"DEGENERATE: {codes}")
        self.report = report
        self.code = "DEGENERATE"


@dataclass(frozen=True)
class GeometricInput:
    points: tuple[Point, ...]
    segments: tuple[tuple[int, int], ...]
    bends: tuple[tuple[Point, ...], ...] | None = None

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def straight_line(self) -> bool:
        return not self.bends or not any(self.bends)

    def path(self, i: int) -> list[Point]:
        u, v = self.segments[i]
        inner = list(self.bends[i]) if self.bends else []
        return [self.points[u], *inner, self.points[v]]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("float coordinates are not exact; use int, str or Fraction")
    return Fraction(x)


def make_input(
    points: Iterable[Sequence],
    segments: Iterable[Sequence[int]],
    bends: Iterable[Iterable[Sequence]] | None = None,
) -> GeometricInput:
    """Build a :class:`GeometricInput` from ints, strings or fractions."""
    pts = tuple((_frac(x), _frac(y)) for x, y in points)
    segs = tuple((int(u), int(v)) for u, v in segments)
    bnd = None
    if bends is not None:
        bnd = tuple(tuple((_frac(x), _frac(y)) for x, y in b) for b in bends)
        if len(bnd) != len(segs):
            raise ValueError("bends must list one (possibly empty) path per segment")
    return GeometricInput(pts, segs, bnd)


# ----------------------------------------------------------------------------
# predicates
# ----------------------------------------------------------------------------


def cross(ax, ay, bx, by):
    return ax * by - ay * bx


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 if ``p, q, r`` turn counterclockwise, -1 if clockwise, 0 if collinear."""
    v = cross(q[0] - p[0], q[1] - p[1], r[0] - p[0], r[1] - p[1])
    return (v > 0) - (v < 0)


def _half(dx, dy) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _angle_cmp(a: Point, b: Point) -> int:
    """Compare directions by counterclockwise angle from the positive x axis."""
    ha, hb = _half(*a), _half(*b)
    if ha != hb:
        return ha - hb
    c = cross(a[0], a[1], b[0], b[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


def _on_closed_segment(p: Point, a: Point, b: Point) -> bool:
    if orientation(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _intersect(a: Point, b: Point, c: Point, d: Point):
    """Intersection of closed segments ``ab`` and ``cd``.

    Returns ``None``, ``("point", t, s, P)`` with parameters along each
    segment, or ``("overlap",)`` for a collinear overlap of positive length.
    """
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    qx, qy = c[0] - a[0], c[1] - a[1]
    den = cross(rx, ry, sx, sy)
    if den == 0:
        if cross(qx, qy, rx, ry) != 0:
            return None
        rr = rx * rx + ry * ry
        t0 = (qx * rx + qy * ry) / rr
        t1 = ((d[0] - a[0]) * rx + (d[1] - a[1]) * ry) / rr
        lo, hi = max(min(t0, t1), 0), min(max(t0, t1), 1)
        if lo < hi:
            return ("overlap",)
        if lo == hi:
            p = (a[0] + lo * rx, a[1] + lo * ry)
            s = Fraction(0) if p == c else Fraction(1)
            return ("point", lo, s, p)
        return None
    t = cross(qx, qy, sx, sy) / den
    s = cross(qx, qy, rx, ry) / den
    if 0 <= t <= 1 and 0 <= s <= 1:
        return ("point", t, s, (a[0] + t * rx, a[1] + t * ry))
    return None


# ----------------------------------------------------------------------------
# general position
# ----------------------------------------------------------------------------


def _analyze(g: GeometricInput):
    """Shared pass: violations plus raw crossing events between edges."""
    out: list[Violation] = []
    n = g.n
    seen: dict[Point, int] = {}
    for i, p in enumerate(g.points):
        if p in seen:
            out.append(Violation("DUPLICATE_POINT", (seen[p], i), f"points {seen[p]} and {i} coincide"))
        else:
            seen[p] = i

    pair_seen: dict[frozenset, int] = {}
    for e, (u, v) in enumerate(g.segments):
        if not (0 <= u < n and 0 <= v < n):
            out.append(Violation("INDEX", (e,), f"segment {e} references a missing point"))
            return out, []
        if u == v:
            out.append(Violation("LOOP", (e,), f"segment {e} is a loop"))
            continue
        key = frozenset((u, v))
        if key in pair_seen:
            out.append(Violation("PARALLEL", (pair_seen[key], e), f"segments {pair_seen[key]} and {e} join {u},{v}"))
        else:
            pair_seen[key] = e

    paths = [g.path(e) for e in range(len(g.segments))]
    vertex_at = {p: i for i, p in enumerate(g.points)}

    # vertices lying on non-incident edges, bends hitting vertices
    for e, path in enumerate(paths):
        u, v = g.segments[e]
        for k in range(len(path) - 1):
            a, b = path[k], path[k + 1]
            if a == b:
                out.append(Violation("OVERLAP", (e,), f"edge {e} has a zero-length piece"))
                continue
            for w, p in enumerate(g.points):
                if not _on_closed_segment(p, a, b):
                    continue
                if w in (u, v) and ((k == 0 and p == a) or (k == len(path) - 2 and p == b)):
                    continue
                out.append(Violation("VERTEX_ON_SEGMENT", (w, e), f"point {w} lies on edge {e}"))

    # self-intersections of polylines
    for e, path in enumerate(paths):
        pieces = len(path) - 1
        for k in range(pieces):
            for l in range(k + 1, pieces):
                hit = _intersect(path[k], path[k + 1], path[l], path[l + 1])
                if hit is None:
                    continue
                if hit[0] == "overlap":
                    out.append(Violation("OVERLAP", (e,), f"edge {e} overlaps itself"))
                elif l == k + 1 and hit[1] == 1 and hit[2] == 0:
                    continue
                else:
                    out.append(Violation("SELF_CROSS", (e,), f"edge {e} intersects itself"))

    events = []
    m = len(paths)
    for e in range(m):
        for f in range(e + 1, m):
            for k in range(len(paths[e]) - 1):
                for l in range(len(paths[f]) - 1):
                    hit = _intersect(paths[e][k], paths[e][k + 1], paths[f][l], paths[f][l + 1])
                    if hit is None:
                        continue
                    if hit[0] == "overlap":
                        out.append(Violation("OVERLAP", (e, f), f"edges {e} and {f} overlap"))
                        continue
                    _, t, s, p = hit
                    interior_e = 0 < t < 1
                    interior_f = 0 < s < 1
                    if interior_e and interior_f:
                        events.append((e, (k, t), f, (l, s), p, (paths[e][k], paths[e][k + 1]), (paths[f][l], paths[f][l + 1])))
                        continue
                    w = vertex_at.get(p)
                    if w is not None:
                        # a shared endpoint, or already reported as vertex-on-segment
                        continue
                    out.append(Violation("BEND_DEGENERATE", (e, f), f"edges {e} and {f} meet at a bend point"))

    crossings_per_pair: dict[tuple[int, int], int] = defaultdict(int)
    at_point: dict[Point, list[tuple[int, int]]] = defaultdict(list)
    for ev in events:
        crossings_per_pair[(ev[0], ev[2])] += 1
        at_point[ev[4]].append((ev[0], ev[2]))
    for (e, f), cnt in sorted(crossings_per_pair.items()):
        if cnt > 1:
            out.append(Violation("MULTI_CROSS", (e, f), f"edges {e} and {f} cross {cnt} times"))
        if set(g.segments[e]) & set(g.segments[f]):
            out.append(Violation("ADJACENT_CROSS", (e, f), f"adjacent edges {e} and {f} cross"))
    for p, pairs in sorted(at_point.items()):
        if len(pairs) > 1:
            involved = sorted({x for pr in pairs for x in pr})
            out.append(Violation("CONCURRENT", tuple(involved), f"edges {involved} meet at one crossing point"))

    # stable de-duplication, keeps report deterministic
    uniq = list(dict.fromkeys(out))
    return uniq, events


def _stats(g: GeometricInput, crossings: int | None = None) -> dict:
    deg = [0] * g.n
    for u, v in g.segments:
        if 0 <= u < g.n and 0 <= v < g.n:
            deg[u] += 1
            deg[v] += 1
    out = {"n": g.n, "edges": len(g.segments), "min_degree": min(deg) if deg else None}
    if crossings is not None:
        out["crossings"] = crossings
    return out


def general_position_check(g: GeometricInput) -> ValidationReport:
    """Report every general-position violation of ``g`` exactly."""
    violations, events = _analyze(g)
    return ValidationReport(tuple(violations), _stats(g, len(events)))


# ----------------------------------------------------------------------------
# ingestion
# ----------------------------------------------------------------------------


def _rotations(g: GeometricInput) -> tuple[tuple[int, ...], ...]:
    outgoing: list[list[tuple[Point, int]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.segments):
        path = g.path(e)
        outgoing[u].append(((path[1][0] - path[0][0], path[1][1] - path[0][1]), e))
        outgoing[v].append(((path[-2][0] - path[-1][0], path[-2][1] - path[-1][1]), e))
    rots = []
    for lst in outgoing:
        lst.sort(key=cmp_to_key(lambda a, b: _angle_cmp(a[0], b[0])))
        rots.append(tuple(e for _, e in lst))
    return tuple(rots)


def _outer_face_key(g: GeometricInput, d: Drawing, along: dict) -> str | None:
    """Key of the unbounded face, found at the lexicographically lowest point."""
    if not d.num_edges or not d.is_map_connected():
        return None
    m = build_plane_map(d)
    best = None
    for e in range(len(g.segments)):
        for k, p in enumerate(g.path(e)):
            if best is None or p < best[0]:
                best = (p, e, k)
    p, e, k = best
    path = g.path(e)
    if 0 < k < len(path) - 1:
        # lowest point is a bend: both directions lie in (-pi/2, pi/2] and the
        # unbounded side is left of the walk iff the path turns clockwise
        back = (path[k - 1][0] - p[0], path[k - 1][1] - p[1])
        ahead = (path[k + 1][0] - p[0], path[k + 1][1] - p[1])
        left = cross(back[0], back[1], ahead[0], ahead[1]) > 0
        before = sum(1 for (piece, _t), _ in along.get(e, []) if piece < k)
        s = m.edge_offset[e] + before
        return m.faces[m.face_of[2 * s if left else 2 * s + 1]].key
    vertex = g.segments[e][0] if k == 0 else g.segments[e][1]
    # every direction at the lowest vertex lies in (-pi/2, pi/2]; the
    # unbounded sector follows the steepest one in counterclockwise order
    dirs = [_first_direction(g, x, vertex) for x in d.rotations[vertex]]
    upper = [i for i, v in enumerate(dirs) if _half(*v) == 0]
    i = upper[-1] if upper else len(dirs) - 1
    h = m.rotation[vertex][i]
    return m.faces[m.face_of[h]].key


def _first_direction(g: GeometricInput, e: int, vertex: int) -> Point:
    path = g.path(e)
    if g.segments[e][0] == vertex:
        return (path[1][0] - path[0][0], path[1][1] - path[0][1])
    return (path[-2][0] - path[-1][0], path[-2][1] - path[-1][1])


def ingest(g: GeometricInput, compute_outer: bool = True) -> tuple[Drawing, str | None]:
    """Turn geometric input into a :class:`Drawing` and an outer-face key.

    Crossing order along each edge follows the exact parameter; the sign is
    the orientation of the two crossing pieces.

    Raises
    ------
    DegenerateInput
        If :func:`general_position_check` finds any violation.
    """
    violations, events = _analyze(g)
    if violations:
        raise DegenerateInput(ValidationReport(tuple(violations), _stats(g, len(events))))

    along: dict[int, list] = defaultdict(list)
    for idx, (e, pe, f, pf, _p, seg_e, seg_f) in enumerate(events):
        along[e].append((pe, idx))
        along[f].append((pf, idx))
    pos: dict[tuple[int, int], int] = {}
    for e, lst in along.items():
        lst.sort()
        for k, (_, idx) in enumerate(lst):
            pos[(e, idx)] = k

    crossings = []
    for idx, (e, pe, f, pf, _p, seg_e, seg_f) in enumerate(events):
        de = (seg_e[1][0] - seg_e[0][0], seg_e[1][1] - seg_e[0][1])
        df = (seg_f[1][0] - seg_f[0][0], seg_f[1][1] - seg_f[0][1])
        # f passes from the left of e to its right when it turns clockwise
        sign = 1 if cross(de[0], de[1], df[0], df[1]) < 0 else -1
        crossings.append(Crossing(e, pos[(e, idx)], f, pos[(f, idx)], sign))
    crossings.sort(key=lambda c: (c.e, c.pos_e))

    d = Drawing(g.n, tuple(g.segments), _rotations(g), tuple(crossings), g.straight_line)
    outer = _outer_face_key(g, d, along) if compute_outer else None
    if outer is not None:
        d = Drawing(d.n, d.edges, d.rotations, d.crossings, d.straight_line, outer)
    return d, outer
