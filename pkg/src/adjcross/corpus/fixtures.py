"""Hand-encoded drawings used as fixtures.

Figures that are not straight-line drawings are encoded as polylines and
go through the same exact ingestion as straight-line input.  Each fixture
is shipped as a drawing file in ``adjcross/fixtures``; :func:`write_all`
regenerates them.
"""

from __future__ import annotations

from dataclasses import replace
from functools import partial
from importlib import resources
from itertools import combinations
from pathlib import Path

from ..drawing import Drawing, build_drawing
from ..geometry import GeometricInput, ingest, make_input
from ..planemap import build_plane_map
from .generators import gen_pentagram_family

__all__ = ["FIXTURES", "GEOMETRIC", "build", "geometry", "load", "names", "write_all"]

K5_POINTS = ((0, 0), (4, 0), (5, 3), (2, 5), (-1, 3))
HEXAGON_POINTS = ((0, 0), (4, 0), (6, 3), (4, 6), (0, 6), (-2, 3))

# name -> (points, segments, bends, docstring)
GEOMETRIC: dict[str, tuple] = {
    "k5-convex": (
        K5_POINTS,
        list(combinations(range(5), 2)),
        None,
        "Complete graph on five points in convex position.",
    ),
    "hexagram": (
        HEXAGON_POINTS,
        [(j, (j + 1) % 6) for j in range(6)] + [(j, (j + 2) % 6) for j in range(6)],
        None,
        "Convex hexagon with its six short diagonals: a 0-hexagon ringed by 1-triangles.",
    ),
    "triangle": ([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (0, 2)], None, "A single triangle."),
    "path3": ([(0, 0), (1, 0), (2, 1)], [(0, 1), (1, 2)], None, "A path on three vertices."),
    "two-crossing": (
        [(0, 0), (2, 2), (0, 2), (2, 0)],
        [(0, 1), (2, 3), (0, 2)],
        None,
        "Two crossing segments joined by a third.",
    ),
    "config-I": (
        [(0, 0), (10, 0), (2, -2), (2, 2), (6, -2), (6, 2)],
        [(0, 1), (2, 3), (4, 5), (3, 5), (0, 2), (1, 4)],
        None,
        "Edge 0 is crossed by the independent edges 1 and 2.",
    ),
    "config-II": (
        [(-2, 0), (2, 0), (0, 2), (-1, -2), (1, 1)],
        [(0, 1), (2, 3), (2, 4), (0, 3)],
        [[], [], [(3, 2), (3, -1), (1, -1)], []],
        "Edges 1 and 2 share vertex 2 and cross edge 0 in opposite directions; "
        "edge 2 goes around the endpoint 1 of edge 0 and comes back up through it.",
    ),
    "config-III-geometry": (
        [(-2, 0), (2, 0), (0, 2), (-1, -2), (1, -2)],
        [(0, 1), (2, 3), (2, 4), (0, 3), (1, 4)],
        None,
        "A straight-line fan of edges 1 and 2 over edge 0; see config_III.",
    ),
    "triangle-crossing": (
        [(0, 0), (4, 0), (2, 4), (2, -2), (2, 2)],
        [(0, 1), (1, 2), (0, 2), (3, 4), (0, 3)],
        [[], [], [], [(2, 1), (5, 1), (5, 6), (0, 6), (0, 3)], []],
        "Edge 3 crosses all three sides of the triangle 0, 1, 2.",
    ),
    "distant-chain": (
        [(-10, 0), (10, 0), (0, 10), (-6, -6), (-2, -7), (2, -6), (3, -1), (-8, -4)],
        [
            (0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (2, 5), (1, 7),
            (2, 6), (1, 6), (0, 7), (3, 7), (3, 4), (4, 5), (1, 5),
        ],
        None,
        "Four edges from apex 2 cross edge 0 and three of them also cross edge 6; "
        "the 2-triangle at vertex 0 reaches a distant-neighbor through three 1-triangles.",
    ),
}


def geometry(name: str) -> GeometricInput | None:
    """The geometric encoding of a fixture, if it has one."""
    if name == "config-III":
        name = "config-III-geometry"
    if name not in GEOMETRIC:
        return None
    pts, segs, bends, _ = GEOMETRIC[name]
    return make_input(pts, segs, bends)


def _geometric(name: str) -> Drawing:
    d, _ = ingest(geometry(name))
    return d


def config_III() -> Drawing:
    """A fan of two edges over a third, seen from inside the fan.

    The geometry is a straight-line fan; the outer face is designated to be
    the triangle cut off by the fan, which puts both endpoints of the
    crossed edge inside the closed curve.  The drawing is therefore no
    longer a straight-line drawing in the plane.
    """
    d = _geometric("config-III-geometry")
    m = build_plane_map(d)
    inner = next(f for f in m.faces if f.profile == (3, 1))
    return replace(d, straight_line=False, outer_face=inner.key)


def bad_adjacent_cross() -> Drawing:
    """Two edges sharing vertex 0 that also cross: structurally valid, not simple."""
    return build_drawing(
        {
            "n": 3,
            "edges": [[0, 1], [0, 2]],
            "rotations": [[0, 1], [0], [1]],
            "crossings": [{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1}],
        }
    )


def pentagram_dodecahedron() -> Drawing:
    return gen_pentagram_family()


FIXTURES = {
    **{name: partial(_geometric, name) for name in GEOMETRIC if not name.endswith("-geometry")},
    "config-III": config_III,
    "bad-adjacent-cross": bad_adjacent_cross,
    "pentagram-dodecahedron": pentagram_dodecahedron,
}


def names() -> list[str]:
    return list(FIXTURES)


def build(name: str) -> Drawing:
    return FIXTURES[name]()


def _directory() -> Path:
    return Path(str(resources.files("adjcross") / "fixtures"))


def load(name: str) -> Drawing:
    """Read the shipped file for ``name``."""
    from ..fileio import read_drawing

    return read_drawing((_directory() / f"{name}.drawing").read_text())


def write_all(directory: Path | None = None) -> list[Path]:
    from ..fileio import dump_drawing

    directory = directory or _directory()
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name, make in FIXTURES.items():
        path = directory / f"{name}.drawing"
        path.write_text(dump_drawing(make()))
        out.append(path)
    return out
