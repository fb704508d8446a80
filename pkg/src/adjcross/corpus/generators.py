"""Instance generators: the pentagram family and random straight-line drawings."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import networkx as nx

from ..drawing import Crossing, Drawing
from ..geometry import (
    GeometricInput,
    general_position_check,
    ingest,
    make_input,
    orientation,
)
from ..planemap import build_plane_map

__all__ = [
    "GenerationError",
    "dodecahedron",
    "gen_adjacency_crossing_geometric",
    "gen_pentagram_family",
    "gen_pentagram_variant",
    "gen_random_geometric",
    "pentagon",
    "plane_drawing",
]

# a convex pentagon in counterclockwise order, used to read off the pentagram pattern
_LOCAL_PENTAGON = ((0, 0), (4, 0), (5, 3), (2, 5), (-1, 3))


class GenerationError(ValueError):
    pass


def plane_drawing(g: nx.Graph) -> Drawing:
    """Crossing-free drawing of a planar graph with vertices ``0 .. n-1``."""
    planar, emb = nx.check_planarity(g)
    if not planar:
        raise GenerationError("graph is not planar")
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    index = {e: i for i, e in enumerate(edges)}
    rotations = []
    for v in range(g.number_of_nodes()):
        ccw = list(reversed(list(emb.neighbors_cw_order(v))))
        rotations.append(tuple(index[tuple(sorted((v, w)))] for w in ccw))
    return Drawing(g.number_of_nodes(), tuple(edges), tuple(rotations))


def dodecahedron() -> Drawing:
    return plane_drawing(nx.dodecahedral_graph())


def pentagon() -> Drawing:
    return plane_drawing(nx.cycle_graph(5))


def _pentagram_pattern(order: list[int], which=range(5)) -> dict[tuple[int, int], tuple[int, int, int]]:
    """Crossings among diagonals of a convex pentagon.

    ``order`` names the pentagon's corners counterclockwise; diagonal ``j``
    joins corners ``j`` and ``j + 2`` and is oriented from the smaller to
    the larger name.  The result is keyed by pairs of diagonal name pairs
    and gives the positions along both diagonals and the sign.
    """
    segs = []
    for j in which:
        a, b = j, (j + 2) % 5
        segs.append((a, b) if order[a] < order[b] else (b, a))
    local, _ = ingest(make_input(_LOCAL_PENTAGON, segs), compute_outer=False)
    names = [tuple(order[x] for x in s) for s in segs]
    return {(names[c.e], names[c.f]): (c.pos_e, c.pos_f, c.sign) for c in local.crossings}


def gen_pentagram_family(
    base: Drawing | None = None,
    skip_faces: frozenset[str] | set[str] = frozenset(),
    outer_face: str | None = "auto",
    omit: frozenset[tuple[str, int]] | set[tuple[str, int]] = frozenset(),
) -> Drawing:
    """Draw the five diagonals of every pentagonal face of a plane drawing.

    Inside each face the diagonals form a pentagram, so every diagonal is
    crossed exactly by the two diagonals leaving the opposite corner.  Faces
    whose keys appear in ``skip_faces`` stay empty.  ``outer_face="auto"``
    designates a face with the most original vertices as the outer one.
    ``omit`` lists ``(face key, j)`` pairs whose diagonal from the face's
    ``j``-th corner to its ``(j + 2)``-th corner is left out.
    """
    base = base if base is not None else dodecahedron()
    if base.crossings:
        raise GenerationError("base drawing must be crossing-free")
    m = build_plane_map(base)
    edges = list(base.edges)
    rotations = [list(r) for r in base.rotations]
    crossings = []
    for face in m.faces:
        if face.key in skip_faces:
            continue
        if face.size != 5:
            raise GenerationError(f"face {face.key!r} has size {face.size}, not 5")
        w = list(face.vertices)
        which = [j for j in range(5) if (face.key, j) not in omit]
        # diagonals w[j] -- w[j+2], placed in the corner between the face's sides
        ids = {}
        for j in which:
            u, v = sorted((w[j], w[(j + 2) % 5]))
            if (u, v) in ids or any(set(e) == {u, v} for e in edges):
                raise GenerationError(f"diagonal {u}-{v} of face {face.key!r} already present")
            ids[(u, v)] = len(edges)
            edges.append((u, v))
        for j in range(5):
            here = w[j]
            side_out = m.parent[face.darts[j] >> 1]
            near = ids.get(tuple(sorted((here, w[(j + 2) % 5]))))
            far = ids.get(tuple(sorted((here, w[(j + 3) % 5]))))
            rot = rotations[here]
            k = rot.index(side_out)
            rot[k + 1 : k + 1] = [x for x in (near, far) if x is not None]
        for (a, b), (pa, pb, sign) in _pentagram_pattern(w, which).items():
            crossings.append(Crossing(ids[a], pa, ids[b], pb, sign).normalized())
    crossings.sort(key=lambda c: (c.e, c.pos_e))
    d = Drawing(base.n, tuple(edges), tuple(tuple(r) for r in rotations), tuple(crossings))
    if outer_face == "auto":
        pm = build_plane_map(d)
        best = max(pm.faces, key=lambda f: (len(f.original_vertices), -f.id))
        outer_face = best.key
    if outer_face is not None:
        d = Drawing(d.n, d.edges, d.rotations, d.crossings, False, outer_face)
    return d


def gen_pentagram_variant(seed: int, omit_rate: float = 0.2, min_degree: int = 6) -> Drawing:
    """The dodecahedral pentagram drawing with random diagonals left out.

    Diagonals are dropped independently with probability ``omit_rate`` as
    long as every vertex keeps degree at least ``min_degree``.
    """
    rng = random.Random(seed)
    base = dodecahedron()
    m = build_plane_map(base)
    degree = [len(r) + 6 for r in base.rotations]
    omit = set()
    for face in m.faces:
        w = face.vertices
        for j in range(5):
            u, v = w[j], w[(j + 2) % 5]
            if rng.random() < omit_rate and min(degree[u], degree[v]) > min_degree:
                omit.add((face.key, j))
                degree[u] -= 1
                degree[v] -= 1
    return gen_pentagram_family(base, omit=omit)


# ----------------------------------------------------------------------------
# random straight-line drawings
# ----------------------------------------------------------------------------


def _random_points(rng: random.Random, n: int, box: int) -> list[tuple[int, int]]:
    """``n`` distinct integer points with no three collinear."""
    pts: list[tuple[int, int]] = []
    for _ in range(200 * n):
        p = (rng.randrange(box), rng.randrange(box))
        if p in pts:
            continue
        if any(orientation(a, b, p) == 0 for a, b in combinations(pts, 2)):
            continue
        pts.append(p)
        if len(pts) == n:
            return pts
    raise GenerationError(f"could not place {n} points in general position in a {box}x{box} box")


def gen_random_geometric(n: int, m: int, seed: int, box: int | None = None, attempts: int = 100) -> GeometricInput:
    """``n`` random points in general position joined by ``m`` random segments.

    Samples are redrawn until the drawing passes the general-position
    check; the result depends only on the arguments.
    """
    if n < 3:
        raise GenerationError("need n >= 3")
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise GenerationError(f"m must lie in [0, {len(pairs)}]")
    rng = random.Random(seed)
    box = box or max(16, 4 * n)
    for _ in range(attempts):
        pts = _random_points(rng, n, box)
        segs = sorted(rng.sample(pairs, m))
        g = make_input(pts, segs)
        if general_position_check(g).ok:
            return g
    raise GenerationError(f"no general-position sample after {attempts} attempts")


def _meet(p, q, r, s):
    """Interior crossing point of segments pq and rs, or None (general position assumed)."""
    if orientation(p, q, r) * orientation(p, q, s) >= 0:
        return None
    if orientation(r, s, p) * orientation(r, s, q) >= 0:
        return None
    d1 = (q[0] - p[0], q[1] - p[1])
    d2 = (s[0] - r[0], s[1] - r[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    t = Fraction((r[0] - p[0]) * d2[1] - (r[1] - p[1]) * d2[0], den)
    return (p[0] + t * d1[0], p[1] + t * d1[1])


def gen_adjacency_crossing_geometric(
    n: int, seed: int, max_edges: int | None = None, box: int | None = None
) -> GeometricInput:
    """Random points and a greedily grown adjacency-crossing set of segments.

    Candidate segments are tried in random order and kept when every edge
    stays crossed only by pairwise adjacent edges and the drawing stays in
    general position.
    """
    if n < 3:
        raise GenerationError("need n >= 3")
    rng = random.Random(seed)
    box = box or max(16, 4 * n)
    pts = _random_points(rng, n, box)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    chosen: list[tuple[int, int]] = []
    crossers: list[set[int]] = []
    points_used: set = set()
    for u, v in pairs:
        if max_edges is not None and len(chosen) >= max_edges:
            break
        p, q = pts[u], pts[v]
        if any(orientation(p, q, pts[w]) == 0 and min(p, q) < pts[w] < max(p, q) for w in range(n) if w not in (u, v)):
            continue
        hits = []
        for i, (a, b) in enumerate(chosen):
            if {a, b} & {u, v}:
                continue
            x = _meet(p, q, pts[a], pts[b])
            if x is not None:
                hits.append((i, x))
        ok = len({x for _, x in hits}) == len(hits) and not any(x in points_used for _, x in hits)
        ok = ok and all(set(chosen[i]) & set(chosen[j]) for (i, _), (j, _) in combinations(hits, 2))
        ok = ok and all(set(chosen[k]) & {u, v} for i, _ in hits for k in crossers[i])
        if not ok:
            continue
        idx = len(chosen)
        chosen.append((u, v))
        crossers.append({i for i, _ in hits})
        for i, x in hits:
            crossers[i].add(idx)
            points_used.add(x)
    return make_input(pts, sorted(chosen))
