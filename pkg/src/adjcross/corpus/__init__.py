"""Instance generators, fixtures, independent oracles and the audit suite."""

from .audit import AuditReport, CheckResult, audit, bound_audit
from .generators import (
    GenerationError,
    dodecahedron,
    gen_adjacency_crossing_geometric,
    gen_pentagram_family,
    gen_pentagram_variant,
    gen_random_geometric,
)
from .oracle import geometric_face_profiles

__all__ = [
    "AuditReport",
    "CheckResult",
    "GenerationError",
    "audit",
    "bound_audit",
    "dodecahedron",
    "gen_adjacency_crossing_geometric",
    "gen_pentagram_family",
    "gen_pentagram_variant",
    "gen_random_geometric",
    "geometric_face_profiles",
]
