import random

import pytest

from tspread.fuzz import (FuzzBounds, differential_checks, random_instance, run_fuzz,
                          shrink)
from tspread.hypergraph import SpreadInstance


def test_random_instances_respect_bounds():
    rng = random.Random(7)
    b = FuzzBounds()
    for _ in range(200):
        inst = random_instance(rng, b)
        assert inst.d <= b.max_d and len(inst.vertices) <= b.max_vertices
        assert all(len(p) <= b.max_part for p in inst.parts)
        assert all(1 <= t <= b.max_t for t in inst.t)
        assert inst.pruned and inst.interval_form


def test_seeded_run_is_clean_and_deterministic():
    a = run_fuzz(42, 100)
    assert a.counterexamples == 0 and a.checked == 100
    assert a.to_json() == run_fuzz(42, 100).to_json()


def test_empty_run():
    s = run_fuzz(1, 0)
    assert (s.checked, s.counterexamples, s.first) == (0, 0, None)


def test_mutant_without_separation_is_caught():
    s = run_fuzz(0, 1000, mutant=True)
    assert s.counterexamples > 0
    shrunk = SpreadInstance.from_parts(
        [list(range(a, b + 1)) for a, b in s.first["shrunk"]["parts"]], s.first["shrunk"]["t"])
    assert differential_checks(shrunk, mutant=True)
    assert not differential_checks(shrunk)


@pytest.mark.parametrize("parts, t, extra", [
    ([[1, 2, 3], [4, 5, 6], [8, 9, 10]], [3, 4], "x1*x2*x9*x10"),
    ([[8, 9, 10], [11, 12, 13], [15, 16, 17]], [3, 4], "x8*x9*x16*x17"),
])
def test_known_mutant_witnesses(parts, t, extra):
    inst = SpreadInstance.from_parts(parts, t)
    fails = differential_checks(inst, mutant=True)
    assert any(extra in f for f in fails)
    assert differential_checks(inst) == []


def test_shrink_reaches_a_local_minimum():
    inst = SpreadInstance.from_parts([[1, 2, 3], [6, 7, 8], [10, 11]], [2, 2])
    small = shrink(inst, lambda c: len(c.vertices) >= 4)
    assert len(small.vertices) == 4
