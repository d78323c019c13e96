"""
Sorting and the Rees algebra
============================

Generators are sortable, so sorted tuples count the fiber ring in each degree.
The relation graph gives the analytic spread.
"""

from tspread.hypergraph import SpreadInstance, edge_ideal, prepare
from tspread.sorting import (analytic_spread, compare_exchange_readings,
                             fiber_hilbert_check, linear_relation_graph,
                             rees_groebner_binomials)

pruned, h = prepare(SpreadInstance.from_intervals([(1, 2), (4, 6), (8, 10), (12, 13)],
                                                  [3, 4, 3]))
I = edge_ideal(h)

for c in fiber_hilbert_check(I, 3):
    print(f"N={c.N}: {c.distinct_products} products, {c.sorted_tuples} sorted tuples")

bins = rees_groebner_binomials(I)
for b in bins[:3] + [b for b in bins if b.kind == "exchange"][:3]:
    print(" ", b)
print(compare_exchange_readings(I)["literal"], "binomials under the literal reading")

g = linear_relation_graph(I)
print("components:", g.components)
print("analytic spread:", analytic_spread(I, pruned))
