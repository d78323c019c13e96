"""
Differential fuzzing and a planted bug
======================================

Random interval instances are pushed through every closed form and its
oracle.  Dropping the block separation condition from the dual is caught and
shrunk to a small witness.
"""

from tspread.fuzz import run_fuzz

clean = run_fuzz(seed=42, count=200)
print(f"{clean.checked} instances, {clean.counterexamples} counterexamples, "
      f"{clean.seconds:.1f}s")

broken = run_fuzz(seed=0, count=1000, mutant=True)
print(broken.counterexamples, "counterexamples with the mutant")
print("shrunk:", broken.first["shrunk"])
for msg in broken.first["failures"]:
    print(" ", msg)
