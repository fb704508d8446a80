"""
Forbidden crossing patterns
===========================

Classify hand-encoded drawings by the crossing patterns they contain.
The sign test and the region test for two adjacent edges crossing a third
are computed independently and compared.
"""

from adjcross.corpus import fixtures
from adjcross.patterns import (
    classify,
    detect_config_II_by_signs,
    detect_config_II_III_by_region,
)

# %%
# One line per fixture: the four class flags and the witnesses found.
for name in fixtures.names():
    if name == "bad-adjacent-cross":
        continue
    r = classify(fixtures.build(name))
    found = {k: [w.triple for w in v] for k, v in r.witnesses.items() if v}
    flags = (r.adjacency_crossing, r.fan_crossing, r.weakly_fan_planar, r.strongly_fan_planar)
    print(f"{name:24s} {flags} {found}")

# %%
# Both tests see the same fan in the polyline fixture.
d = fixtures.build("config-II")
print("signs: ", [w.triple for w in detect_config_II_by_signs(d)])
print("region:", [(w.triple, w.inside_count) for w in detect_config_II_III_by_region(d)])
