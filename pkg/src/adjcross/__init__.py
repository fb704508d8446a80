"""Exact verification of the discharging bound for adjacency-crossing drawings.

A drawing is given combinatorially (rotations and crossing records) or
geometrically (exact rational coordinates).  The package builds its plane
map, detects forbidden crossing configurations, runs the charge
redistribution with exact fractions and checks the resulting edge bounds.
"""

from .discharging import ChargeLedger, VerificationReport, discharge, verify
from .drawing import (
    Crossing,
    Drawing,
    StructureError,
    ValidationReport,
    Violation,
    build_drawing,
    validate,
)
from .fileio import dump_drawing, read_drawing, read_geometry
from .geometry import (
    DegenerateInput,
    GeometricInput,
    general_position_check,
    ingest,
    make_input,
)
from .patterns import ClassReport, classify
from .planemap import Face, PlaneMap, PlaneMapError, build_plane_map

__all__ = [
    "ChargeLedger",
    "ClassReport",
    "Crossing",
    "DegenerateInput",
    "Drawing",
    "Face",
    "GeometricInput",
    "PlaneMap",
    "PlaneMapError",
    "StructureError",
    "ValidationReport",
    "VerificationReport",
    "Violation",
    "build_drawing",
    "build_plane_map",
    "classify",
    "discharge",
    "dump_drawing",
    "general_position_check",
    "ingest",
    "make_input",
    "read_drawing",
    "read_geometry",
    "validate",
    "verify",
]

__version__ = "0.1.0"
