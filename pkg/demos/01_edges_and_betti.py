"""
Edges, pruning and the linear strand
====================================

Build a spread hypergraph with a gap vertex, enumerate its edges, and read the
Betti numbers off the linear quotient sets.
"""

from tspread.hypergraph import SpreadInstance, edge_ideal, prepare
from tspread.resolution import betti_table, set_u_oracle

inst = SpreadInstance.from_parts([[1, 2, 3], [5, 7], [8, 9, 11], [12, 13]], [3, 2, 4])

# vertex 11 sits in no edge, so it is dropped before anything else happens
pruned, h = prepare(inst)
print("removed:", pruned.removed)
I = edge_ideal(h)
for u in I.gens:
    print(f"  {str(u):<16} set(u) = {sorted(set_u_oracle(I, u))}")

# the closed form and the prefix colons must give the same table
b = betti_table(I, pruned)
print("betti:", b.beta, " pd:", b.pd_SmodI, " depth:", b.depth_SmodI)
assert b.beta == betti_table(I, route="oracle").beta
