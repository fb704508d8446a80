"""
Discharging with exact rationals
================================

Faces start with ``|f| + |V(f)| - 4`` and pass charge on in five steps.
The total stays at ``4n - 8`` after every step.
"""

from collections import defaultdict

from adjcross import build_plane_map, discharge, verify
from adjcross.corpus import fixtures
from adjcross.discharging import fmt

# %%
# Convex K5: the pentagon goes down to -1 when it feeds the five
# 1-triangles and comes back to 0 in step 4.
m = build_plane_map(fixtures.build("k5-convex"))
L = discharge(m)
for step in range(L.steps_done + 1):
    per_profile = defaultdict(set)
    for f in m.faces:
        per_profile[f.profile].add(fmt(L.faces[step][f.id]))
    print(step, fmt(L.total(step)), dict(per_profile))

# %%
# Each transfer is logged with the edge or vertex it passes through.
for row in L.transfer_rows()[-10:]:
    print(row)

# %%
# The dodecahedral pentagram reaches 90 = 5*20 - 10 edges and every face
# ends at exactly zero.
d = fixtures.build("pentagram-dodecahedron")
report = verify(discharge(build_plane_map(d)))
print(report.bound["check"], "| negative faces:", report.negative_faces)
