"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run alone with ``python3 tests/test_acceptance.py`` or under pytest.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from tspread.duality import dual_closed_form, dual_oracle, is_cohen_macaulay, is_unmixed
from tspread.fuzz import FuzzBounds, random_instance, run_fuzz, triangle_ideal
from tspread.hypergraph import edge_ideal, load_instance, prepare
from tspread.monomials import Monomial, associated_primes, prime_str
from tspread.powers import (normality_shadow, ntf_shadow, power_profile,
                            strong_persistence_check, to_matrix)
from tspread.report import run_report
from tspread.resolution import betti_table
from tspread.sorting import (check_l_exchange, depth_asymptotics, fiber_hilbert_check,
                             linear_relation_graph)

GOLDENS = Path(__file__).resolve().parent.parent / "goldens"

GAP_GENERATORS = ["x1*x5*x8*x12", "x2*x5*x8*x12", "x1*x5*x8*x13", "x2*x5*x8*x13",
                   "x1*x5*x9*x13", "x2*x5*x9*x13", "x1*x7*x9*x13", "x2*x7*x9*x13",
                   "x3*x7*x9*x13"]
MIXED_GENERATORS = ["x1*x4*x8*x12", "x1*x4*x8*x13", "x1*x4*x9*x12", "x1*x4*x9*x13",
                   "x1*x4*x10*x13", "x1*x5*x9*x12", "x2*x5*x9*x12", "x1*x5*x9*x13",
                   "x2*x5*x9*x13", "x1*x5*x10*x13", "x2*x5*x10*x13", "x1*x6*x10*x13",
                   "x2*x6*x10*x13"]
MIXED_FORM_I = ["x1*x2", "x4*x5*x6", "x8*x9*x10", "x12*x13"]
MIXED_FORM_II = ["x1*x5*x6", "x1*x5*x10", "x1*x9*x10", "x1*x5*x13", "x1*x9*x13",
                "x4*x5*x10", "x4*x9*x10", "x4*x5*x13", "x4*x9*x13", "x8*x9*x13"]
MIXED_ASS = ["(x1,x2)", "(x4,x5,x6)", "(x8,x9,x10)", "(x12,x13)", "(x1,x5,x6)",
            "(x1,x5,x10)", "(x1,x9,x10)", "(x1,x5,x13)", "(x1,x9,x13)", "(x4,x5,x10)",
            "(x4,x9,x10)", "(x4,x5,x13)", "(x4,x9,x13)", "(x8,x9,x13)"]
EQUAL_ASS = ["(x2,x3,x4)", "(x6,x7,x8)", "(x9,x10,x11)", "(x13,x14,x15)", "(x6,x7,x11)",
           "(x6,x7,x15)", "(x6,x10,x11)", "(x6,x10,x15)", "(x6,x14,x15)", "(x9,x10,x15)",
           "(x9,x14,x15)"]

# frozen after recomputation through the oracle routes (see criterion 7)
GAP_DERIVED = {"betti": [9, 12, 4], "q_I": 2, "depth": 6, "ell": 6,
                "limit_depth": 3, "dstab_bound": 5}


def canon(texts) -> list[str]:
    return sorted(str(Monomial.parse(t)) for t in texts)


def report_line(n: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}"
    capture = getattr(report_line, "capsys", None)
    if capture is not None:
        with capture.disabled():
            print("\n" + line)
    else:
        print(line)


def golden(name: str):
    pruned, h = prepare(load_instance(GOLDENS / f"{name}.json"))
    return pruned, h, edge_ideal(h)


# ------------------------------------------------------------ criteria

def criterion_1():
    start = time.perf_counter()
    doc = run_report(GOLDENS / "gap_vertex.json").to_json()
    secs = time.perf_counter() - start
    gens_ok = sorted(doc["generators"]["monomials"]) == canon(GAP_GENERATORS)
    pruned_ok = doc["instance"]["pruned_vertices"] == [11]
    ok = gens_ok and pruned_ok and secs < 1.0
    return ok, f"gap-vertex instance generators={gens_ok} pruned {{11}}={pruned_ok} report {secs:.3f}s"


def criterion_2():
    pruned, _, I = golden("mixed_sizes")
    gens_ok = sorted(map(str, I.gens)) == canon(MIXED_GENERATORS) and len(I) == 13
    closed = dual_closed_form(pruned)
    blocks = sorted(str(g.monomial) for g in closed if g.form == "part-block")
    windows = sorted(str(g.monomial) for g in closed if g.form == "window")
    dual_ok = blocks == canon(MIXED_FORM_I) and windows == canon(MIXED_FORM_II)
    oracle_ok = {g.monomial for g in closed} == set(dual_oracle(I).generators)
    ass_ok = sorted(map(prime_str, associated_primes(I))) == sorted(MIXED_ASS)
    ok = gens_ok and dual_ok and oracle_ok and ass_ok
    return ok, (f"mixed-size instance 13 gens={gens_ok} dual 4+10={dual_ok} "
                f"dual=oracle={oracle_ok} Ass 14={ass_ok}")


def criterion_3():
    pruned, _, I = golden("equal_sizes")
    primes = associated_primes(I)
    ass_ok = sorted(map(prime_str, primes)) == sorted(EQUAL_ASS)
    unm = is_unmixed(pruned, I, primes)
    cm = is_cohen_macaulay(pruned, I)
    cm_ok = cm.arithmetic is False and cm.operational is False
    ok = ass_ok and unm.value is True and unm.route == "both-agree" and cm_ok
    return ok, (f"equal-size instance 11 primes={ass_ok} unmixed={unm.value} "
                f"CM arithmetic={cm.arithmetic} CM ht=q(I)+1={cm.operational}")


def criterion_4():
    s = run_fuzz(seed=42, count=500, bounds=FuzzBounds(max_vertices=12))
    ok = s.checked == 500 and s.counterexamples == 0 and s.seconds < 120
    return ok, (f"differential suite {s.checked} instances, {s.counterexamples} "
                f"counterexamples, {s.seconds:.1f}s")


def power_corpus(count: int = 50, seed: int = 5):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        inst = random_instance(rng, FuzzBounds(max_vertices=10))
        _, h = prepare(inst)
        out.append(edge_ideal(h))
    return out


def criterion_5():
    start = time.perf_counter()
    bad = []
    for n, I in enumerate(power_corpus()):
        pers = strong_persistence_check(I, 3)
        prof = power_profile(I, 3, persistence=False)
        normal = normality_shadow(I, 2)
        if not (all(pers.values()) and prof.ntf and all(normal.values())):
            bad.append(n)
    control = ntf_shadow(triangle_ideal(), 1) and not ntf_shadow(triangle_ideal(), 2)
    secs = time.perf_counter() - start
    ok = not bad and control and secs < 300
    return ok, (f"power shadows on 50 instances, failures {bad}, triangle control "
                f"fails at k=2: {control}, {secs:.1f}s")


def exchange_corpus():
    ideals = [golden(n)[2] for n in ("gap_vertex", "mixed_sizes", "equal_sizes")]
    ideals += power_corpus()
    rng = random.Random(11)
    for _ in range(100):
        _, h = prepare(random_instance(rng, FuzzBounds(max_vertices=12)))
        ideals.append(edge_ideal(h))
    return ideals


def criterion_6():
    start = time.perf_counter()
    fiber_n = exch_n = 0
    bad = []
    for n, I in enumerate(exchange_corpus()):
        if len(I) <= 15:
            fiber_n += 1
            if not all(c.ok for c in fiber_hilbert_check(I, 3)):
                bad.append(("fiber", n))
        exch_n += 1
        if not check_l_exchange(I, 2).holds:
            bad.append(("exchange", n))
    secs = time.perf_counter() - start
    return not bad, (f"fiber N<=3 on {fiber_n} ideals, l-exchange N<=2 on {exch_n} ideals, "
                     f"failures {bad}, {secs:.1f}s")


def criterion_7():
    pruned, _, I = golden("gap_vertex")
    oracle = betti_table(I, route="oracle")  # prefix colons, no closed form
    g = linear_relation_graph(I)
    rank = int(np.linalg.matrix_rank(to_matrix(I.gens, I.support()).astype(float)))
    da = depth_asymptotics(pruned)
    got = {"betti": oracle.beta, "q_I": oracle.q_I, "depth": oracle.depth_SmodI,
           "ell": len(g.vertices) - g.component_count + 1,
           "limit_depth": da.limit_depth, "dstab_bound": da.dstab_bound}
    ok = got == GAP_DERIVED and rank == got["ell"]
    return ok, f"gap-vertex instance derived values {got} (exponent-matrix rank {rank})"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7]


@pytest.fixture(autouse=True)
def _announce(capsys):
    report_line.capsys = capsys
    yield
    report_line.capsys = None


@pytest.mark.parametrize("n", range(1, len(CRITERIA) + 1))
def test_criterion(n):
    ok, detail = CRITERIA[n - 1]()
    report_line(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, crit in enumerate(CRITERIA, 1):
        ok, detail = crit()
        report_line(n, ok, detail)
        results.append(ok)
    sys.exit(0 if all(results) else 1)
