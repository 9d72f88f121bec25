"""
Where rival edge measures break
===============================

Each axiom is a small graph surgery with a predicted effect on the scores.
Randomized search plants sites for the surgery and looks for a graph where
the prediction fails.
"""

# %%
from edgerank.axioms import AXIOMS, TrialConfig, satisfaction_matrix, search
from edgerank.centrality import MeasureSpec

cfg = TrialConfig(trials=200, seed=7)

# %%
# Edge PageRank holds up on every surgery.
pr = MeasureSpec("pagerank", 0.85)
for axiom in AXIOMS:
    rep = search(pr, axiom, cfg)
    print(f"{axiom:22s} {rep.summary()}")

# %%
# Copying an edge k times should multiply its score by k. The eigenvector
# measure does not.
rep = search(MeasureSpec("eigenedge"), "edge-multiplication", cfg)
bad = rep.counterexample
print(rep.summary())
print("discrepancy", bad.max_discrepancy)
print("graph edges", bad.witness["graph"]["edges"])

# %%
# The full table over all measures.  A small budget is enough for the
# violations to show up.
matrix = satisfaction_matrix(TrialConfig(trials=50, seed=7))
print(f"{'':18s}" + "".join(f"{a[:10]:>12s}" for a in AXIOMS))
for m in matrix.measures:
    row = "".join(f"{matrix.verdict(m.kind, a)[:10]:>12s}" for a in AXIOMS)
    print(f"{m.kind:18s}{row}")
print("unexpected cells:", matrix.mismatches())
