"""
Corpus runs and the audit
=========================

Run the structural checks on a small corpus and look at one audit report.
"""

from adjcross.corpus import audit, fixtures
from adjcross.corpus.runner import run, standard_corpus

# %%
results = run(standard_corpus(random_count=60, variants=4))
built = [r for r in results if r.valid and r.connected]
print("instances:", len(results), "built:", len(built))
print("all conserved:", all(r.conserved for r in built))
print("audited:", sum(bool(r.audit_applicable) for r in results))
print("audit failures:", [f for r in results for f in r.audit_failures])

# %%
report = audit(fixtures.build("pentagram-dodecahedron"))
for c in report.checks:
    print(f"{c.name:40s} examined {c.examined:4d}  passed {c.passed}")
