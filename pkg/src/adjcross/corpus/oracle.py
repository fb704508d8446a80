"""Brute-force oracles that share no code with the main pipeline.

:func:`geometric_face_profiles` walks the faces of a (poly)line drawing
directly in the plane: it splits every piece at all intersection points,
orders the darts around each point by an exact pseudo-angle and follows
the faces.  Its profile multiset must match the one of the plane map.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction

from ..geometry import GeometricInput

__all__ = ["geometric_face_profiles", "pseudo_angle"]


def pseudo_angle(dx: Fraction, dy: Fraction) -> Fraction:
    """Exact monotone stand-in for ``atan2`` with values in ``[0, 4)``."""
    s = abs(dx) + abs(dy)
    t = Fraction(dy) / s
    if dx >= 0 and dy >= 0:
        return t
    if dx < 0 and dy >= 0:
        return 2 - t
    if dx < 0:
        return 2 - t
    return 4 + t


def _pieces(g: GeometricInput):
    for e in range(len(g.segments)):
        path = [tuple(map(Fraction, p)) for p in g.path(e)]
        for k in range(len(path) - 1):
            yield e, path[k], path[k + 1]


def _crossing_point(p, q, r, s):
    dx1, dy1 = q[0] - p[0], q[1] - p[1]
    dx2, dy2 = s[0] - r[0], s[1] - r[1]
    den = dx1 * dy2 - dy1 * dx2
    if den == 0:
        return None
    t = ((r[0] - p[0]) * dy2 - (r[1] - p[1]) * dx2) / den
    u = ((r[0] - p[0]) * dy1 - (r[1] - p[1]) * dx1) / den
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (p[0] + t * dx1, p[1] + t * dy1)
    return None


def geometric_face_profiles(g: GeometricInput) -> Counter:
    """Multiset of ``(size, original vertices)`` over the faces of ``g``.

    Assumes general position (as checked on ingestion) and a connected
    drawing.
    """
    pieces = list(_pieces(g))
    cuts: list[set] = [{a, b} for _, a, b in pieces]
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            x = _crossing_point(pieces[i][1], pieces[i][2], pieces[j][1], pieces[j][2])
            if x is not None:
                cuts[i].add(x)
                cuts[j].add(x)

    bends = {tuple(map(Fraction, b)) for path in (g.bends or ()) for b in path}
    originals = {tuple(map(Fraction, p)) for p in g.points}
    out = defaultdict(list)
    for (_, a, b), pts in zip(pieces, cuts):
        key = (lambda p: p[0]) if a[0] != b[0] else (lambda p: p[1])
        chain = sorted(pts, key=key, reverse=key(a) > key(b))
        for p, q in zip(chain, chain[1:]):
            out[p].append(q)
            out[q].append(p)
    for p in out:
        out[p].sort(key=lambda q: pseudo_angle(q[0] - p[0], q[1] - p[1]))

    def is_bend(p) -> bool:
        return p in bends and p not in originals and len(out[p]) == 2

    # a bend is not a vertex of the map: walk straight through it
    def forward(p, q, trail):
        while is_bend(q):
            a, b = out[q]
            p, q = q, (b if a == p else a)
            trail.add((p, q))
        return p, q

    seen: set = set()
    profiles = Counter()
    for p in out:
        if is_bend(p):
            continue
        for q in out[p]:
            if (p, q) in seen:
                continue
            size = orig = 0
            a, b = p, q
            while (a, b) not in seen:
                seen.add((a, b))
                last, head = forward(a, b, seen)
                size += 1
                orig += head in originals
                # next dart: the one before the reverse dart in counterclockwise order
                around = out[head]
                a, b = head, around[around.index(last) - 1]
            profiles[(size, orig)] += 1
    return profiles
