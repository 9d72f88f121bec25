"""
Ranking the edges that point at a node
======================================

Edge PageRank scores every edge of a weighted multigraph, so the links
arriving at one node can be ordered by how much they carry.
"""

# %%
# A four-node multigraph with a self-loop and two parallel edges.
from edgerank.axioms.fixtures import ranking_example
from edgerank.centrality import (
    MeasureSpec,
    edge_pagerank,
    node_pagerank,
    random_surfer,
    rank_incoming,
)

g = ranking_example()
for e in g.edge_order:
    print(e, g.edges[e])

# %%
# Scores at decay 0.9.  Parallel edges share their start node's score evenly.
pr = edge_pagerank(g, 0.9)
for e in g.edge_order:
    print(f"{e}  {pr[e]:6.2f}")

# %%
# Node scores split evenly across out-edges.
npr = node_pagerank(g, 0.9)
for v in g.node_order:
    share = npr[v] / g.out_degree(v)
    print(f"{v}  {npr[v]:6.2f}  per out-edge {share:5.2f}")

# %%
# The three links into v4, strongest first.
for e, s in rank_incoming(g, "v4", MeasureSpec("pagerank", 0.9)):
    print(e, round(s, 2))

# %%
# A Monte Carlo surfer lands close to the solver.
est = random_surfer(g, 0.9, 200_000, seed=0)
for e in g.edge_order:
    print(f"{e}  solver {pr[e]:6.3f}  surfer {est[e]:6.3f}")
