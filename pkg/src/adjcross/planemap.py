"""Half-edge plane map induced by a drawing.

Map vertices are the original vertices ``0 .. n-1`` followed by one vertex
per crossing record (``n + i`` for crossing ``i``).  Map edges are the
crossing-free pieces of the drawing's edges; piece ``k`` of edge ``e`` runs
from the ``k-1``-st to the ``k``-th crossing along ``e`` (the source and the
target standing in at both ends).  Map edge ``s`` owns the half-edges
``2*s`` (with the edge's orientation) and ``2*s + 1`` (against it).

Faces are the orbits of ``next``, where ``next(h)`` is the half-edge
leaving the head of ``h`` just before ``twin(h)`` in counterclockwise
order.  Every face then lies to the left of its half-edges.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import networkx as nx

from .drawing import Drawing, Violation, validate

__all__ = [
    "Face",
    "PlaneMap",
    "PlaneMapError",
    "SubMap",
    "build_plane_map",
    "check_sphere",
]


class PlaneMapError(Exception):
    """Raised when a drawing does not induce a connected plane map.

    ``code`` is one of ``NOT_SPHERE``, ``DISCONNECTED`` or ``INVALID``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class Face:
    id: int
    key: str
    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    original_vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.darts)

    @property
    def profile(self) -> tuple[int, int]:
        return (len(self.darts), len(self.original_vertices))

    def __len__(self) -> int:
        return len(self.darts)


def dart_label(edge: int, seg: int, forward: bool) -> str:
    return f"{edge}.{seg}{'+' if forward else '-'}"


def profile_name(profile: tuple[int, int]) -> str:
    names = {3: "triangle", 4: "quadrilateral", 5: "pentagon", 6: "hexagon"}
    size, orig = profile
    return f"{orig}-{names.get(size, f'{size}-gon')}"


class PlaneMap:
    """Combinatorial plane map of a drawing.  Build with :func:`build_plane_map`."""

    def __init__(self, drawing: Drawing):
        d = drawing
        self.drawing = d
        self.n = d.n
        self.num_vertices = d.n + d.num_crossings

        # map edges, edge by edge
        self.edge_offset: list[int] = []
        self.parent: list[int] = []
        self.segment: list[int] = []
        tail: list[int] = []
        head: list[int] = []
        for e, (u, v) in enumerate(d.edges):
            self.edge_offset.append(len(self.parent))
            along = d.crossings_on(e)
            points = [u] + [d.n + i for _, _, i in along] + [v]
            for k in range(len(points) - 1):
                self.parent.append(e)
                self.segment.append(k)
                tail.append(points[k])
                head.append(points[k + 1])
        self.num_edges = len(self.parent)
        self.origin = [0] * (2 * self.num_edges)
        for s in range(self.num_edges):
            self.origin[2 * s] = tail[s]
            self.origin[2 * s + 1] = head[s]

        self.rotation: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for v in range(d.n):
            for e in d.rotations[v]:
                a, b = d.edges[e]
                if a == v:
                    self.rotation[v].append(2 * self.edge_offset[e])
                if b == v:
                    self.rotation[v].append(2 * self.last_segment(e) + 1)
        for i, c in enumerate(d.crossings):
            se = self.edge_offset[c.e] + c.pos_e
            sf = self.edge_offset[c.f] + c.pos_f
            to_ve, to_ue = 2 * (se + 1), 2 * se + 1
            to_vf, to_uf = 2 * (sf + 1), 2 * sf + 1
            if c.sign > 0:
                self.rotation[d.n + i] = [to_ve, to_uf, to_ue, to_vf]
            else:
                self.rotation[d.n + i] = [to_ve, to_vf, to_ue, to_uf]

        self._rot_index: dict[int, int] = {}
        for v, rot in enumerate(self.rotation):
            for k, h in enumerate(rot):
                self._rot_index[h] = k

        self.next = [0] * (2 * self.num_edges)
        for h in range(2 * self.num_edges):
            t = h ^ 1
            rot = self.rotation[self.origin[t]]
            self.next[h] = rot[self._rot_index[t] - 1]

        self.face_of = [-1] * (2 * self.num_edges)
        walks: list[list[int]] = []
        for h in range(2 * self.num_edges):
            if self.face_of[h] != -1:
                continue
            walk = []
            g = h
            while self.face_of[g] == -1:
                self.face_of[g] = -2
                walk.append(g)
                g = self.next[g]
            if g != h:
                raise PlaneMapError("INVALID", "face walk does not close up")
            walks.append(walk)

        # canonical face order: by the minimal dart label on each walk
        def label_key(h: int) -> tuple[int, int, int]:
            return (self.parent[h >> 1], self.segment[h >> 1], h & 1)

        normalized = []
        for walk in walks:
            k = min(range(len(walk)), key=lambda i: label_key(walk[i]))
            normalized.append(walk[k:] + walk[:k])
        normalized.sort(key=lambda w: label_key(w[0]))
        self.faces: list[Face] = []
        for fid, walk in enumerate(normalized):
            for h in walk:
                self.face_of[h] = fid
            verts = tuple(self.origin[h] for h in walk)
            key = " ".join(self.label(h) for h in walk)
            self.faces.append(
                Face(fid, key, tuple(walk), verts, tuple(x for x in verts if x < d.n))
            )
        self._by_key = {f.key: f.id for f in self.faces}

    # basic accessors ---------------------------------------------------

    def last_segment(self, e: int) -> int:
        return self.edge_offset[e] + len(self.drawing.crossings_on(e))

    def head(self, h: int) -> int:
        return self.origin[h ^ 1]

    def map_edge(self, h: int) -> int:
        return h >> 1

    def label(self, h: int) -> str:
        return dart_label(self.parent[h >> 1], self.segment[h >> 1], not h & 1)

    def edge_label(self, s: int) -> str:
        return f"E{self.parent[s]}.{self.segment[s]}"

    def vertex_label(self, x: int) -> str:
        if x < self.n:
            return f"V{x}"
        c = self.drawing.crossings[x - self.n].normalized()
        return f"X{c.e}x{c.f}"

    def is_crossing(self, x: int) -> bool:
        return x >= self.n

    def crossing_edges_at(self, x: int) -> tuple[int, int]:
        c = self.drawing.crossings[x - self.n]
        return (c.e, c.f)

    def degree(self, x: int) -> int:
        return len(self.rotation[x])

    def face(self, fid: int) -> Face:
        return self.faces[fid]

    def face_by_key(self, key: str) -> Face:
        try:
            return self.faces[self._by_key[key]]
        except KeyError:
            raise KeyError(f"no face with key {key!r}") from None

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def profile_census(self) -> Counter:
        return Counter(f.profile for f in self.faces)

    # adjacency queries --------------------------------------------------

    def edge_neighbor(self, f: int, s: int) -> int:
        """Face on the other side of map edge ``s`` from face ``f``."""
        if self.face_of[2 * s] == f:
            return self.face_of[2 * s + 1]
        if self.face_of[2 * s + 1] == f:
            return self.face_of[2 * s]
        raise ValueError(f"map edge {s} is not on face {f}")

    def dart_on(self, f: int, s: int) -> int:
        if self.face_of[2 * s] == f:
            return 2 * s
        if self.face_of[2 * s + 1] == f:
            return 2 * s + 1
        raise ValueError(f"map edge {s} is not on face {f}")

    def corner_faces(self, x: int) -> list[int]:
        """Faces around ``x`` in counterclockwise order, one per corner."""
        return [self.face_of[h] for h in self.rotation[x]]

    def vertex_neighbor(self, f: int, x: int) -> int | None:
        """Face opposite to ``f`` at the crossing vertex ``x``."""
        if not self.is_crossing(x):
            raise ValueError(f"map vertex {x} is not a crossing")
        around = self.corner_faces(x)
        if f not in around:
            raise ValueError(f"crossing {x} is not on face {f}")
        if len(around) != 4:
            return None
        return around[(around.index(f) + 2) % 4]

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.num_vertices))
        for s in range(self.num_edges):
            g.add_edge(self.origin[2 * s], self.origin[2 * s + 1])
        return g

    def two_connectivity(self) -> list[int]:
        """Cut vertices of the map; empty iff it is 2-connected."""
        return sorted(nx.articulation_points(self.graph()))

    @cached_property
    def is_two_connected(self) -> bool:
        return self.num_vertices >= 3 and not self.two_connectivity()

    def regions(self, barrier: Iterable[int]) -> list[int]:
        """Label faces by the region of the sphere minus the ``barrier`` map edges.

        Two faces share a label iff they can be joined through map edges not
        in ``barrier``.  Labels are ``0 .. r-1`` in order of first face.
        """
        blocked = set(barrier)
        parent = list(range(self.num_faces))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s in range(self.num_edges):
            if s in blocked:
                continue
            a, b = find(self.face_of[2 * s]), find(self.face_of[2 * s + 1])
            if a != b:
                parent[max(a, b)] = min(a, b)
        labels: dict[int, int] = {}
        return [labels.setdefault(find(f), len(labels)) for f in range(self.num_faces)]

    def sub_map(self, keep: Iterable[int]) -> "SubMap":
        """The map induced by the kept edges of the drawing."""
        keep = frozenset(keep)
        labels = self.regions(s for s in range(self.num_edges) if self.parent[s] in keep)
        count = max(labels) + 1 if labels else 0
        regions = [frozenset(f for f in range(self.num_faces) if labels[f] == r) for r in range(count)]
        sub, kept, verts = self.drawing.restricted(keep)
        pm = None
        correspondence: dict[int, int] = {}
        if sub.num_edges and sub.is_map_connected():
            pm = build_plane_map(sub)
            for face in pm.faces:
                h = face.darts[0]
                old_edge = kept[pm.parent[h >> 1]]
                k = pm.segment[h >> 1]
                # first piece of the old edge inside sub-piece k
                along = [
                    p for p, other, _ in self.drawing.crossings_on(old_edge) if other in keep
                ]
                old_seg = 0 if k == 0 else along[k - 1] + 1
                old_h = 2 * (self.edge_offset[old_edge] + old_seg) + (h & 1)
                correspondence[face.id] = labels[self.face_of[old_h]]
        return SubMap(keep, sub, tuple(kept), tuple(verts), pm, tuple(regions), tuple(labels), correspondence)


@dataclass(frozen=True)
class SubMap:
    """Result of :meth:`PlaneMap.sub_map`.

    ``regions[r]`` is the set of faces of the full map merged into region
    ``r``; ``region_of[f]`` is the inverse.  When the kept edges form a
    connected graph, ``plane_map`` is their own plane map and
    ``correspondence`` sends each of its faces to a region.
    """

    keep: frozenset
    drawing: Drawing
    kept_edges: tuple[int, ...]
    kept_vertices: tuple[int, ...]
    plane_map: PlaneMap | None
    regions: tuple[frozenset, ...]
    region_of: tuple[int, ...]
    correspondence: dict


def build_plane_map(d: Drawing) -> PlaneMap:
    """Build the plane map of a valid, connected drawing.

    Raises
    ------
    PlaneMapError
        ``INVALID`` if ``d`` fails validation, ``DISCONNECTED`` if the
        drawing falls apart into pieces (edges that cross count as joined), ``NOT_SPHERE`` if the rotation and crossing
        data do not describe a drawing on the sphere.
    """
    report = validate(d)
    if not report.ok:
        raise PlaneMapError("INVALID", ", ".join(sorted(report.codes())))
    if not d.is_map_connected():
        raise PlaneMapError("DISCONNECTED", "the drawing is not connected")
    m = PlaneMap(d)
    chi = m.euler_characteristic()
    if chi != 2:
        raise PlaneMapError(
            "NOT_SPHERE",
            f"|V'|-|E'|+|F'| = {m.num_vertices}-{m.num_edges}+{m.num_faces} = {chi}",
        )
    return m


def check_sphere(d: Drawing) -> list[Violation]:
    """Embedding check for a structurally valid, connected drawing."""
    try:
        build_plane_map(d)
    except PlaneMapError as err:
        if err.code == "NOT_SPHERE":
            return [Violation("NOT_SPHERE", (), str(err))]
    return []
