"""
Drawings and their plane maps
=============================

A drawing is stored combinatorially: edges, a counterclockwise rotation
at every vertex and one record per crossing.  Turning every crossing into
a degree-4 vertex gives the plane map, whose faces we walk here.
"""

from adjcross import build_drawing, build_plane_map, validate
from adjcross.corpus import fixtures

# %%
# Two segments crossing once.  The crossing record says edge 1 passes
# edge 0 from its left side to its right side.
d = build_drawing(
    {
        "n": 4,
        "edges": [[0, 2], [1, 3]],
        "rotations": [[0], [1], [0], [1]],
        "crossings": [{"e": 0, "pos_e": 0, "f": 1, "pos_f": 0, "sign": 1}],
    }
)
print(validate(d).to_dict())
m = build_plane_map(d)
print("V', E', F' =", m.num_vertices, m.num_edges, m.num_faces)
print("cut vertices:", [m.vertex_label(x) for x in m.two_connectivity()])

# %%
# The complete graph on five points in convex position has twelve faces.
k5 = fixtures.build("k5-convex")
m = build_plane_map(k5)
for f in m.faces:
    print(f"face {f.id:2d} profile {f.profile}  key {f.key}")
print("census:", dict(m.profile_census()))

# %%
# Every side of the central pentagon borders a triangle with one original
# vertex, and every corner faces a triangle with two.
pentagon = next(f for f in m.faces if f.profile == (5, 0))
print("across sides:", [m.edge_neighbor(pentagon.id, h >> 1) for h in pentagon.darts])
print("across corners:", [m.vertex_neighbor(pentagon.id, x) for x in pentagon.vertices])
