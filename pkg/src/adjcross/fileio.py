"""Drawing and geometry file formats.

Both are JSON documents.  A drawing file holds ``n``, ``edges``,
``rotations`` (counterclockwise edge indices per vertex), ``crossings``
(records ``{e, pos_e, f, pos_f, sign}``) and optionally ``straight_line``
and ``outer_face``.  :func:`dump_drawing` writes the canonical form: each
crossing listed once with ``e < f``, sorted by ``(e, pos_e)``.

A geometry file holds ``points`` (``[x, y]`` with integer or exact
decimal/``"p/q"`` string entries, or ``[x_num, x_den, y_num, y_den]``),
``edges`` and optionally ``bends``, one list of points per edge.
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from typing import Any

from .drawing import Drawing, StructureError, build_drawing
from .geometry import GeometricInput, make_input

__all__ = [
    "drawing_to_dict",
    "dump_drawing",
    "dump_geometry",
    "fmt_rational",
    "parse_json",
    "read_drawing",
    "read_geometry",
]


def fmt_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_json(text: str) -> Any:
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise StructureError("<json>", str(exc)) from None


def drawing_to_dict(d: Drawing) -> dict:
    crossings = sorted((c.normalized() for c in d.crossings), key=lambda c: (c.e, c.pos_e, c.f))
    out = {
        "n": d.n,
        "edges": [list(e) for e in d.edges],
        "rotations": [list(r) for r in d.rotations],
        "crossings": [c._asdict() for c in crossings],
        "straight_line": d.straight_line,
    }
    if d.outer_face is not None:
        out["outer_face"] = d.outer_face
    return out


def dump_drawing(d: Drawing) -> str:
    """Canonical text of a drawing; equal drawings give identical bytes."""
    doc = drawing_to_dict(d)
    lines = ["{"]
    items = list(doc.items())
    for i, (key, value) in enumerate(items):
        comma = "," if i < len(items) - 1 else ""
        if isinstance(value, list) and value:
            lines.append(f"  {json.dumps(key)}: [")
            for k, item in enumerate(value):
                tail = "," if k < len(value) - 1 else ""
                lines.append(f"    {json.dumps(item)}{tail}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_drawing(text: str) -> Drawing:
    return build_drawing(parse_json(text))


def _coord(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise StructureError(where, "expected a number")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise StructureError(where, f"not a rational: {value!r}") from None
    raise StructureError(where, f"expected a number, got {value!r}")


def _point(raw: Any, where: str) -> tuple[Fraction, Fraction]:
    if not isinstance(raw, list) or len(raw) not in (2, 4):
        raise StructureError(where, "expected [x, y] or [x_num, x_den, y_num, y_den]")
    if len(raw) == 2:
        return _coord(raw[0], f"{where}[0]"), _coord(raw[1], f"{where}[1]")
    nums = [raw[k] for k in range(4)]
    if any(isinstance(x, bool) or not isinstance(x, int) for x in nums):
        raise StructureError(where, "numerator/denominator entries must be integers")
    if nums[1] == 0 or nums[3] == 0:
        raise StructureError(where, "zero denominator")
    return Fraction(nums[0], nums[1]), Fraction(nums[2], nums[3])


def read_geometry(text: str) -> GeometricInput:
    doc = parse_json(text)
    if not isinstance(doc, dict):
        raise StructureError("<root>", "expected a mapping")
    pts = doc.get("points")
    edges = doc.get("edges", [])
    if not isinstance(pts, list):
        raise StructureError("points", "expected a list")
    if not isinstance(edges, list):
        raise StructureError("edges", "expected a list")
    points = [_point(p, f"points[{i}]") for i, p in enumerate(pts)]
    segs = []
    for i, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2:
            raise StructureError(f"edges[{i}]", "expected a pair [u, v]")
        for k, x in enumerate(e):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < len(points):
                raise StructureError(f"edges[{i}][{k}]", f"bad vertex index {x!r}")
        segs.append((e[0], e[1]))
    bends = doc.get("bends")
    if bends is not None:
        if not isinstance(bends, list) or len(bends) != len(segs):
            raise StructureError("bends", "expected one list of points per edge")
        bends = [[_point(p, f"bends[{i}][{k}]") for k, p in enumerate(b)] for i, b in enumerate(bends)]
    return make_input(points, segs, bends)


def _dump_point(p) -> list:
    x, y = Fraction(p[0]), Fraction(p[1])
    if x.denominator == 1 and y.denominator == 1:
        return [x.numerator, y.numerator]
    return [x.numerator, x.denominator, y.numerator, y.denominator]


def dump_geometry(g: GeometricInput) -> str:
    doc: dict = {
        "points": [_dump_point(p) for p in g.points],
        "edges": [list(s) for s in g.segments],
    }
    if g.bends and any(g.bends):
        doc["bends"] = [[_dump_point(p) for p in b] for b in g.bends]
    return json.dumps(doc) + "\n"
