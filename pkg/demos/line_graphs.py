"""
Edge scores through the line graph
==================================

Edges of a multigraph become nodes of its line graph.  With node weights
spread over out-edges, node PageRank on the line graph reproduces edge
PageRank on the original.
"""

# %%
from edgerank.axioms import fixtures
from edgerank.axioms.fixtures import fanout_example, ranking_example
from edgerank.linegraph import (
    heuchenne_check,
    heuchenne_witnesses,
    line_graph,
    pagerank_linegraph_equivalence,
)

lg = line_graph(fanout_example())
print(len(lg.graph.nodes), "nodes,", len(lg.graph.edges), "arcs")
for s, t in sorted(lg.provenance.values()):
    print(f"  {s} feeds {t}")

# %%
# Both routes agree to solver precision.
for a in (0.3, 0.9):
    rep = pagerank_linegraph_equivalence(ranking_example(), a)
    print(f"a={a}  max discrepancy {rep.max_discrepancy:.1e}")

# %%
# A line graph never contains arcs a->c, b->c, b->d without a->d.
print("line graph closed:", heuchenne_check(lg.graph) is None)

# %%
# Swapping the heads of two arcs breaks that, so no multigraph has this
# digraph as its line graph.
swapped = fixtures("fig5-swapped").graph
for w in heuchenne_witnesses(swapped):
    print(f"a={w.a} c={w.c} b={w.b} d={w.d}")
