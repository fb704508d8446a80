"""
Straight-line input
===================

Points and segments with exact rational coordinates become drawings.
Degenerate input is reported, never perturbed.
"""

from fractions import Fraction

from adjcross import build_plane_map
from adjcross.corpus.generators import gen_random_geometric
from adjcross.corpus.oracle import geometric_face_profiles
from adjcross.geometry import general_position_check, ingest, make_input

# %%
# A point sitting on another segment is rejected.
g = make_input([(0, 0), (1, 0), (Fraction(1, 2), 0), (0, 1)], [(0, 1), (2, 3)])
print([v.code for v in general_position_check(g).violations])

# %%
# A random instance, and a face census from a direct geometric walk that
# does not use the plane map.
g = gen_random_geometric(8, 14, seed=1)
d, outer = ingest(g)
print("crossings:", d.num_crossings, "outer face:", outer)
if d.is_map_connected():
    print(dict(build_plane_map(d).profile_census()))
print(dict(geometric_face_profiles(g)))
