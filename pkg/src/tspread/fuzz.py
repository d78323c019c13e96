"""Seeded random interval instances and the closed-form vs oracle differentials."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .duality import (cm_criterion, degree_formula_check, dual_closed_form, dual_oracle,
                      unmixed_criterion, v_structure_check)
from .hypergraph import (DegenerateInstance, SpreadInstance, edge_ideal, maximum_matching,
                         prepare)
from .monomials import MonomialIdeal
from .resolution import set_u_closed_form, set_u_oracle, verify_linear_quotients
from .sorting import check_sortable, linear_relation_graph


@dataclass(frozen=True)
class FuzzBounds:
    max_d: int = 4
    max_part: int = 4
    max_t: int = 4
    max_gap: int = 3
    max_vertices: int = 12


def random_instance(rng: random.Random, bounds: FuzzBounds = FuzzBounds()) -> SpreadInstance:
    """A pruned, non-degenerate interval instance within ``bounds``."""
    while True:
        d = rng.randint(1, bounds.max_d)
        start = rng.randint(1, 1 + bounds.max_gap)
        intervals = []
        for _ in range(d):
            n = rng.randint(1, bounds.max_part)
            intervals.append((start, n))
            start += n + rng.randint(0, bounds.max_gap)
        t = [rng.randint(1, bounds.max_t) for _ in range(d - 1)]
        inst = SpreadInstance.from_parts(
            [range(a, a + n) for a, n in intervals], t)
        try:
            pruned, _ = prepare(inst)
        except DegenerateInstance:
            continue
        if len(pruned.vertices) <= bounds.max_vertices:
            return pruned


Check = Callable[[SpreadInstance], "str | None"]


def _dual_check(mutant: bool) -> Check:
    # every emitted monomial must already be a minimal generator, so the
    # unminimalized list is compared, duplicates included
    def check(inst: SpreadInstance) -> str | None:
        _, h = prepare(inst)
        I = edge_ideal(h)
        raw = [g.monomial for g in dual_closed_form(inst, enforce_separation=not mutant,
                                                    minimal=False)]
        oracle = set(dual_oracle(I).generators)
        if len(raw) != len(set(raw)):
            return "dual: closed form emits a monomial twice"
        closed = set(raw)
        if closed != oracle:
            extra = sorted(map(str, closed - oracle))
            missing = sorted(map(str, oracle - closed))
            return f"dual mismatch: extra {extra}, missing {missing}"
        return None
    return check


def differential_checks(inst: SpreadInstance, *, mutant: bool = False) -> list[str]:
    """Every closed-form vs oracle comparison; returns the failure messages."""
    pruned, h = prepare(inst)
    I = edge_ideal(h)
    fails: list[str] = []

    wit = verify_linear_quotients(I)
    if not wit.linear:
        fails.append(f"linear quotients: {wit.failure}")
    for u in I.gens:
        if set_u_closed_form(u, pruned) != set_u_oracle(I, u):
            fails.append(f"set({u}) closed form disagrees with the prefix colon")
            break
    msg = _dual_check(mutant)(pruned)
    if msg:
        fails.append(msg)
    ok, bad = check_sortable(I)
    if not ok:
        fails.append(f"not sortable: {bad}")
    g = linear_relation_graph(I)
    r, d = len(pruned.vertices), pruned.d
    if g.component_count != d or len(g.vertices) != r:
        fails.append(f"relation graph: {len(g.vertices)} vertices / {g.component_count} "
                     f"components, expected {r} / {d}")
    ell = len(g.vertices) - g.component_count + 1
    if ell != r - d + 1:
        fails.append(f"analytic spread {ell} != r-d+1 = {r - d + 1}")

    primes = dual_oracle(I).primes
    tau = min(len(p) for p in primes)
    if tau != min(len(p) for p in pruned.parts):
        fails.append(f"height {tau} != min n_j")
    nu, _ = maximum_matching(h)
    if nu != tau:
        fails.append(f"König: nu={nu} tau={tau}")
    unmixed_op = len({len(p) for p in primes}) == 1
    if unmixed_op != unmixed_criterion(pruned):
        fails.append(f"unmixed: criterion {unmixed_criterion(pruned)}, dual degrees {unmixed_op}")
    q_I = max(len(s) for s in wit.colon_sets) if wit.linear else None
    if q_I is not None and (tau == q_I + 1) != cm_criterion(pruned):
        fails.append(f"CM: criterion {cm_criterion(pruned)}, ht=q(I)+1 is {tau == q_I + 1}")
    if not v_structure_check(pruned, primes):
        fails.append("v-structure: some minimal prime meets v twice")
    for gen in dual_closed_form(pruned):
        if not degree_formula_check(gen, pruned):
            fails.append(f"degree formula fails for {gen.monomial}")
            break
    return fails


def shrink(inst: SpreadInstance, failing: Callable[[SpreadInstance], bool]) -> SpreadInstance:
    """Greedy shrinking: drop end parts and vertices, lower t, shift down, close gaps."""
    improved = True
    while improved:
        improved = False
        for cand in _shrink_candidates(inst):
            try:
                cand, _ = prepare(cand)
            except (DegenerateInstance, ValueError):
                continue
            if failing(cand):
                inst, improved = cand, True
                break
    return inst


def _shrink_candidates(inst: SpreadInstance):
    parts = [list(p) for p in inst.parts]
    t = list(inst.t)
    d = len(parts)
    if d > 1:
        yield SpreadInstance.from_parts(parts[1:], t[1:])
        yield SpreadInstance.from_parts(parts[:-1], t[:-1])
    for j in range(d):
        if len(parts[j]) > 1:
            for cut in (parts[j][1:], parts[j][:-1]):
                yield SpreadInstance.from_parts(parts[:j] + [cut] + parts[j + 1:], t)
    for j in range(d - 1):
        if t[j] > 1:
            yield SpreadInstance.from_parts(parts, t[:j] + [t[j] - 1] + t[j + 1:])
    if parts[0][0] > 1:
        yield SpreadInstance.from_parts([[v - 1 for v in p] for p in parts], t)
    for j in range(1, d):
        if parts[j][0] - parts[j - 1][-1] > 1:
            shifted = [[v - 1 for v in p] for p in parts[j:]]
            yield SpreadInstance.from_parts(parts[:j] + shifted, t)


@dataclass
class FuzzSummary:
    seed: int
    count: int
    checked: int = 0
    counterexamples: int = 0
    first: dict | None = None
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"seed": self.seed, "count": self.count, "checked": self.checked,
                "counterexamples": self.counterexamples, "first_counterexample": self.first}


def run_fuzz(seed: int = 42, count: int = 100, bounds: FuzzBounds = FuzzBounds(),
             *, mutant: bool = False) -> FuzzSummary:
    rng = random.Random(seed)
    summary = FuzzSummary(seed, count)
    start = time.perf_counter()
    for _ in range(count):
        inst = random_instance(rng, bounds)
        fails = differential_checks(inst, mutant=mutant)
        summary.checked += 1
        if fails:
            summary.counterexamples += 1
            if summary.first is None:
                small = shrink(inst, lambda c: bool(differential_checks(c, mutant=mutant)))
                summary.first = {"instance": inst.to_json(), "shrunk": small.to_json(),
                                 "failures": differential_checks(small, mutant=mutant)}
                summary.failures = fails
    summary.seconds = time.perf_counter() - start
    return summary


def triangle_ideal() -> MonomialIdeal:
    """(x1x2, x2x3, x1x3): the standard non-NTF control."""
    return MonomialIdeal.parse(["x1*x2", "x2*x3", "x1*x3"])
