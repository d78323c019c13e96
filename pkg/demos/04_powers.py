"""
Powers, checked up to a bound
=============================

Strong persistence, associated primes of powers and normality, each verified
only for the exponents listed.  The triangle shows what a failure looks like.
"""

from tspread.fuzz import triangle_ideal
from tspread.hypergraph import SpreadInstance, edge_ideal, prepare
from tspread.monomials import Monomial, MonomialIdeal, prime_str
from tspread.powers import integral_closure_membership, newton_membership, power_profile

_, h = prepare(SpreadInstance.from_intervals([(1, 2), (4, 6), (8, 10), (12, 13)], [3, 4, 3]))
prof = power_profile(edge_ideal(h), k_max=3, normal_k_max=2)
for s in prof.steps:
    print(f"k={s.k}: {s.generators} gens, {len(s.ass)} primes, "
          f"persistence={s.persistence}, normal={s.normal}")
print("Ass(I^k) = Min(I) up to k=3:", prof.ntf)

tri = power_profile(triangle_ideal(), k_max=2)
print("triangle, Ass(I^2):", [prime_str(p) for p in tri.steps[1].ass])

# x1*x2 is integral over (x1^2, x2^2) but not in it
I = MonomialIdeal.parse(["x1^2", "x2^2"])
print(integral_closure_membership(Monomial.parse("x1*x2"), I))
print(newton_membership([1, 1], [[2, 0], [0, 2]]).weights)
