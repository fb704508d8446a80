"""Drawing data model for simple topological graphs.

A drawing is stored purely combinatorially:

    - ``n`` original vertices ``0 .. n-1``,
    - an ordered list of edges, each oriented ``u -> v`` as given,
    - a counterclockwise rotation of incident edges at every vertex,
    - crossing records ``(e, pos_e, f, pos_f, sign)``.

``pos_e`` counts crossings along ``e`` from its source.  ``sign == +1``
means that ``f`` passes from the left side of ``e`` to its right side when
``e`` is traversed from source to target.  This is enough data to rebuild
the plane map of the drawing up to homeomorphism of the sphere.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Mapping, NamedTuple

__all__ = [
    "Crossing",
    "Drawing",
    "StructureError",
    "ValidationReport",
    "Violation",
    "build_drawing",
    "validate",
]


class StructureError(ValueError):
    """Raised when a drawing description is structurally malformed."""

    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


class Crossing(NamedTuple):
    e: int
    pos_e: int
    f: int
    pos_f: int
    sign: int

    def mirrored(self) -> "Crossing":
        return Crossing(self.f, self.pos_f, self.e, self.pos_e, -self.sign)

    def normalized(self) -> "Crossing":
        """Same crossing listed with the smaller edge index first."""
        return self if self.e <= self.f else self.mirrored()


@dataclass(frozen=True)
class Drawing:
    n: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]
    crossings: tuple[Crossing, ...] = ()
    straight_line: bool = False
    outer_face: str | None = None

    # derived lookups ---------------------------------------------------

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], Crossing]:
        out: dict[tuple[int, int], Crossing] = {}
        for c in self.crossings:
            out.setdefault((c.e, c.f), c)
            out.setdefault((c.f, c.e), c.mirrored())
        return out

    @cached_property
    def _along(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        per_edge: list[list[tuple[int, int, int]]] = [[] for _ in self.edges]
        for i, c in enumerate(self.crossings):
            per_edge[c.e].append((c.pos_e, c.f, i))
            if c.f != c.e:
                per_edge[c.f].append((c.pos_f, c.e, i))
        return tuple(tuple(sorted(lst)) for lst in per_edge)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def adjacent(self, e: int, f: int) -> bool:
        """True when edges ``e`` and ``f`` share an endpoint."""
        return bool(set(self.edges[e]) & set(self.edges[f]))

    def crossings_on(self, e: int) -> tuple[tuple[int, int, int], ...]:
        """``(position, other edge, crossing index)`` along ``e`` from its source."""
        return self._along[e]

    def crossing_edges(self, e: int) -> list[int]:
        return sorted({other for _, other, _ in self._along[e]})

    def crossing(self, e: int, f: int) -> Crossing | None:
        """The crossing record of ``e`` and ``f``, oriented with ``e`` first."""
        return self._pair_index.get((e, f))

    def sign(self, e: int, f: int) -> int:
        """Sign of ``f`` crossing ``e``; antisymmetric in its arguments."""
        c = self._pair_index.get((e, f))
        if c is None:
            raise KeyError(f"edges {e} and {f} do not cross")
        return c.sign

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        adj: dict[int, list[int]] = defaultdict(list)
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_map_connected(self) -> bool:
        """Connectivity of the drawing as a point set: crossing edges count as joined."""
        if self.n == 0:
            return False
        adj: dict[int, list[int]] = defaultdict(list)
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for c in self.crossings:
            a, b = self.edges[c.e][0], self.edges[c.f][0]
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def restricted(self, keep: Iterable[int]) -> tuple["Drawing", list[int], list[int]]:
        """Sub-drawing on the kept edges and the vertices they touch.

        Returns the new drawing, the kept edge indices (new -> old) and the
        kept vertices (new -> old).  Crossing positions are renumbered.
        """
        kept = sorted(set(keep))
        verts = sorted({x for e in kept for x in self.edges[e]})
        vmap = {v: i for i, v in enumerate(verts)}
        emap = {e: i for i, e in enumerate(kept)}
        edges = tuple((vmap[self.edges[e][0]], vmap[self.edges[e][1]]) for e in kept)
        rotations = tuple(
            tuple(emap[e] for e in self.rotations[v] if e in emap) for v in verts
        )
        newpos: dict[int, dict[int, int]] = {}
        for e in kept:
            seq = [(p, o, i) for p, o, i in self._along[e] if o in emap]
            newpos[e] = {i: k for k, (_, _, i) in enumerate(seq)}
        crossings = []
        for i, c in enumerate(self.crossings):
            if c.e in emap and c.f in emap:
                crossings.append(
                    Crossing(emap[c.e], newpos[c.e][i], emap[c.f], newpos[c.f][i], c.sign)
                )
        sub = Drawing(len(verts), edges, rotations, tuple(crossings), self.straight_line)
        return sub, kept, verts


# ----------------------------------------------------------------------------
# construction from a parsed description
# ----------------------------------------------------------------------------


def _as_int(value: Any, field_name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise StructureError(field_name, f"expected an integer, got {value!r}")
    return value


def _index(value: Any, bound: int, field_name: str) -> int:
    i = _as_int(value, field_name)
    if not 0 <= i < bound:
        raise StructureError(field_name, f"index {i} out of range 0..{bound - 1}")
    return i


def build_drawing(doc: Mapping[str, Any]) -> Drawing:
    """Resolve a parsed drawing description into a :class:`Drawing`.

    Only structure is checked here (types, index ranges, rotations listing
    exactly the incident edges).  Semantic simplicity is left to
    :func:`validate`.
    """
    if not isinstance(doc, Mapping):
        raise StructureError("<root>", "expected a mapping")
    if "n" not in doc:
        raise StructureError("n", "missing")
    n = _as_int(doc["n"], "n")
    if n < 0:
        raise StructureError("n", "must be non-negative")

    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise StructureError("edges", "expected a list")
    edges = []
    for i, pair in enumerate(raw_edges):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise StructureError(f"edges[{i}]", "expected a pair [u, v]")
        edges.append((_index(pair[0], n, f"edges[{i}][0]"), _index(pair[1], n, f"edges[{i}][1]")))
    m = len(edges)

    raw_rot = doc.get("rotations")
    if raw_rot is None:
        raise StructureError("rotations", "missing")
    if not isinstance(raw_rot, list) or len(raw_rot) != n:
        raise StructureError("rotations", f"expected a list of {n} vertex rotations")
    incident: list[Counter] = [Counter() for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        incident[u][e] += 1
        incident[v][e] += 1
    rotations = []
    for v, rot in enumerate(raw_rot):
        if not isinstance(rot, list):
            raise StructureError(f"rotations[{v}]", "expected a list of edge indices")
        r = tuple(_index(e, m, f"rotations[{v}][{k}]") for k, e in enumerate(rot))
        if Counter(r) != incident[v]:
            raise StructureError(
                f"rotations[{v}]", f"must list exactly the edges incident to vertex {v}"
            )
        rotations.append(r)

    raw_cross = doc.get("crossings", [])
    if not isinstance(raw_cross, list):
        raise StructureError("crossings", "expected a list")
    crossings = []
    for k, rec in enumerate(raw_cross):
        where = f"crossings[{k}]"
        if not isinstance(rec, Mapping):
            raise StructureError(where, "expected a mapping")
        for key in ("e", "pos_e", "f", "pos_f", "sign"):
            if key not in rec:
                raise StructureError(f"{where}.{key}", "missing")
        e = _index(rec["e"], m, f"{where}.e")
        f = _index(rec["f"], m, f"{where}.f")
        pe = _as_int(rec["pos_e"], f"{where}.pos_e")
        pf = _as_int(rec["pos_f"], f"{where}.pos_f")
        if pe < 0 or pf < 0:
            raise StructureError(where, "positions must be non-negative")
        crossings.append(Crossing(e, pe, f, pf, _as_int(rec["sign"], f"{where}.sign")))

    straight = doc.get("straight_line", False)
    if not isinstance(straight, bool):
        raise StructureError("straight_line", "expected a boolean")
    outer = doc.get("outer_face")
    if outer is not None and not isinstance(outer, str):
        raise StructureError("outer_face", "expected a face key string")
    return Drawing(n, tuple(edges), tuple(rotations), tuple(crossings), straight, outer)


# ----------------------------------------------------------------------------
# validation
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    code: str
    ids: tuple
    message: str = ""


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"code": v.code, "ids": list(v.ids), "message": v.message}
                for v in self.violations
            ],
            "stats": dict(self.stats),
        }


def drawing_stats(d: Drawing) -> dict:
    return {
        "n": d.n,
        "edges": d.num_edges,
        "crossings": d.num_crossings,
        "min_degree": min(d.degrees) if d.n else None,
        "connected": d.is_connected(),
    }


def validate(d: Drawing) -> ValidationReport:
    """List every violated simplicity invariant of ``d``.

    Pure; statistics are filled in whether or not the drawing is valid.
    """
    out: list[Violation] = []

    seen_pairs: dict[frozenset, int] = {}
    for e, (u, v) in enumerate(d.edges):
        if u == v:
            out.append(Violation("LOOP", (e,), f"edge {e} is a loop at {u}"))
            continue
        key = frozenset((u, v))
        if key in seen_pairs:
            out.append(
                Violation("PARALLEL", (seen_pairs[key], e), f"edges {seen_pairs[key]} and {e} join {u},{v}")
            )
        else:
            seen_pairs[key] = e

    by_pair: dict[frozenset, list[int]] = defaultdict(list)
    for i, c in enumerate(d.crossings):
        if c.sign not in (1, -1):
            out.append(Violation("SIGN_INCONSISTENT", (i,), f"crossing {i} has sign {c.sign}"))
        if c.e == c.f:
            out.append(Violation("SELF_CROSS", (i, c.e), f"edge {c.e} crosses itself"))
            continue
        if d.adjacent(c.e, c.f):
            out.append(
                Violation("ADJACENT_CROSS", (i, c.e, c.f), f"adjacent edges {c.e} and {c.f} cross")
            )
        by_pair[frozenset((c.e, c.f))].append(i)
    for pair, idx in sorted(by_pair.items(), key=lambda kv: kv[1]):
        if len(idx) > 1:
            e, f = sorted(pair)
            out.append(
                Violation("MULTI_CROSS", (e, f, *idx), f"edges {e} and {f} cross {len(idx)} times")
            )
            for i, j in combinations(idx, 2):
                a, b = d.crossings[i], d.crossings[j]
                if b.e == a.f and (b.pos_e, b.pos_f) == (a.pos_f, a.pos_e) and b.sign == a.sign:
                    out.append(
                        Violation("SIGN_INCONSISTENT", (i, j), f"crossings {i} and {j} disagree on orientation")
                    )

    for e in range(d.num_edges):
        positions = sorted(p for p, _, _ in d.crossings_on(e))
        if positions != list(range(len(positions))):
            out.append(
                Violation("POSITION_GAP", (e,), f"positions along edge {e} are {positions}")
            )

    return ValidationReport(tuple(out), drawing_stats(d))
