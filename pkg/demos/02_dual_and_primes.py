"""
Alexander dual from interval data
=================================

Each dual generator comes with the window (j, p) and block sizes it was built
from; the minimal vertex covers found by branch and bound are the same set.
"""

from tspread.duality import dual_closed_form, dual_oracle, is_cohen_macaulay, is_unmixed
from tspread.hypergraph import SpreadInstance, edge_ideal, prepare
from tspread.monomials import prime_str

inst = SpreadInstance.from_intervals([(1, 2), (4, 6), (8, 10), (12, 13)], [3, 4, 3])
pruned, h = prepare(inst)
I = edge_ideal(h)

for g in dual_closed_form(pruned):
    if g.form == "part-block":
        print(f"{str(g.monomial):<12} block of part {g.j}")
    else:
        print(f"{str(g.monomial):<12} j={g.j} p={g.p} q={g.q} q'={g.q_prime}")

covers = dual_oracle(I).primes
print(len(covers), "minimal primes:", ", ".join(prime_str(p) for p in covers))
print("unmixed:", is_unmixed(pruned, I, covers).value)
print("Cohen-Macaulay:", is_cohen_macaulay(pruned, I).value)

# equal part sizes and exact spacing t_j make it unmixed and CM at once
cm = SpreadInstance.from_intervals([(1, 2), (4, 5), (7, 8)], [3, 3])
p2, h2 = prepare(cm)
print("shifted copies:", is_cohen_macaulay(p2, edge_ideal(h2)).value)
