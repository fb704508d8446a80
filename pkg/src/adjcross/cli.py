"""Command-line front end.

Exit codes: 0 success, 1 validation or verification failure, 2 malformed
input, 3 internal invariant breach (charge not conserved, map not a
sphere).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .corpus.audit import audit, bound_audit
from .corpus.generators import gen_pentagram_family, gen_random_geometric
from .discharging import ConservationError, DischargingError, discharge, verify
from .drawing import Drawing, StructureError, validate
from .fileio import dump_drawing, dump_geometry, read_drawing, read_geometry
from .geometry import DegenerateInput, ingest
from .patterns import classify
from .planemap import PlaneMapError, build_plane_map, check_sphere, profile_name

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_BREACH = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, payload: dict | None = None, message: str | None = None):
        self.code = code
        self.payload = payload
        self.message = message


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Drawing:
    return read_drawing(_read(path))


def _plane_map(d: Drawing):
    try:
        return build_plane_map(d)
    except PlaneMapError as exc:
        code = EXIT_BREACH if exc.code == "NOT_SPHERE" else EXIT_INVALID
        raise _Exit(code, {"ok": False, "error": exc.code, "message": str(exc)}) from None


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------------


def cmd_validate(args) -> int:
    d = _load(args.drawing)
    report = validate(d).to_dict()
    code = EXIT_OK if report["ok"] else EXIT_INVALID
    if report["ok"] and d.is_map_connected():
        sphere = check_sphere(d)
        if sphere:
            report["ok"] = False
            report["violations"] += [{"code": v.code, "ids": list(v.ids), "message": v.message} for v in sphere]
            code = EXIT_BREACH
    _emit(args, report)
    return code


def cmd_faces(args) -> int:
    d = _load(args.drawing)
    m = _plane_map(d)
    census = m.profile_census()
    _emit(
        args,
        {
            "vertices": m.num_vertices,
            "edges": m.num_edges,
            "faces": m.num_faces,
            "profiles": [
                {"size": s, "original": o, "name": profile_name((s, o)), "count": census[(s, o)]}
                for s, o in sorted(census)
            ],
            "face_list": [{"id": f.id, "key": f.key, "profile": list(f.profile)} for f in m.faces],
        },
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    d = _load(args.drawing)
    _emit(args, classify(d, _plane_map(d)).to_dict())
    return EXIT_OK


def cmd_discharge(args) -> int:
    d = _load(args.drawing)
    m = _plane_map(d)
    try:
        ledger = discharge(m)
    except ConservationError as exc:
        raise _Exit(EXIT_BREACH, {"ok": False, "error": "CONSERVATION", "message": str(exc)}) from None
    except DischargingError as exc:
        raise _Exit(EXIT_BREACH, {"ok": False, "error": "DISCHARGING", "message": str(exc)}) from None
    if args.straight_line and d.outer_face is None:
        raise _Exit(EXIT_INVALID, {"ok": False, "error": "NO_OUTER_FACE", "message": "--straight-line needs outer_face"})
    report = verify(ledger, d, straight_line=args.straight_line)
    if args.trace:
        with open(args.trace, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["step", "source", "target", "conduit", "amount"])
            writer.writerows(ledger.transfer_rows())
    _emit(args, {"verification": report.to_dict(), "ledger": ledger.to_dict()})
    if not report.conserved:
        return EXIT_BREACH
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_bound(args) -> int:
    d = _load(args.drawing)
    out = bound_audit(d)
    _emit(args, out)
    ok = out["holds"] and out.get("straight_line_holds", True)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_ingest(args) -> int:
    g = read_geometry(_read(args.geometry))
    try:
        d, _ = ingest(g)
    except DegenerateInput as exc:
        raise _Exit(EXIT_INVALID, exc.report.to_dict()) from None
    _emit(args, dump_drawing(d))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "pentagram-dodecahedron":
        _emit(args, dump_drawing(gen_pentagram_family()))
        return EXIT_OK
    if args.n is None or args.m is None:
        raise _Exit(EXIT_PARSE, message="random-geometric needs --n and --m")
    g = gen_random_geometric(args.n, args.m, args.seed)
    if args.format == "geometry":
        _emit(args, dump_geometry(g))
    else:
        _emit(args, dump_drawing(ingest(g)[0]))
    return EXIT_OK


def cmd_audit(args) -> int:
    d = _load(args.drawing)
    report = audit(d, _plane_map(d) if validate(d).ok else None)
    _emit(args, report.to_dict())
    return EXIT_OK if report.passed else EXIT_INVALID


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="adjcross", description="Exact charge accounting for drawings of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_drawing(name: str, helptext: str, func):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("drawing", help="drawing file, or - for stdin")
        s.add_argument("-o", "--output", help="write the report here instead of stdout")
        s.set_defaults(func=func)
        return s

    with_drawing("validate", "check simplicity and the sphere embedding", cmd_validate)
    with_drawing("faces", "face census of the plane map", cmd_faces)
    with_drawing("classify", "forbidden configurations and class flags", cmd_classify)
    s = with_drawing("discharge", "run the discharging and verify the result", cmd_discharge)
    s.add_argument("--trace", metavar="CSV", help="write every transfer to this CSV file")
    s.add_argument("--straight-line", action="store_true", help="also check the outer face and the 5n-11 bound")
    with_drawing("bound", "edge-count bounds from counts alone", cmd_bound)
    with_drawing("audit", "structural checks on one instance", cmd_audit)

    s = sub.add_parser("ingest-geom", help="geometry file to drawing file")
    s.add_argument("geometry", help="geometry file, or - for stdin")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("gen", help="generate an instance")
    s.add_argument("--family", required=True, choices=["pentagram-dodecahedron", "random-geometric"])
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=["drawing", "geometry"], default="drawing")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except StructureError as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_PARSE
    except _Exit as exc:
        if exc.payload is not None:
            _emit(args, exc.payload)
        if exc.message:
            sys.stderr.write(exc.message + "\n")
        return exc.code


def main() -> None:
    sys.exit(run())
