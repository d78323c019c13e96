"""Alexander dual, minimal primes and the height / unmixed / Cohen-Macaulay /
König classifications of complete t-spread edge ideals.

Every classification is computed twice: once from the arithmetic of the
interval data and once operationally (dual degrees, ``ht(I) = q(I) + 1``,
matchings).  Disagreement raises :class:`TheoremViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .hypergraph import (Hypergraph, InstanceError, SpreadInstance, edge_ideal,
                         maximum_matching)
from .monomials import (Budget, BudgetExceeded, DEFAULT_BUDGET, Monomial, MonomialIdeal,
                        sort_primes)
from .resolution import betti_table
from .sorting import TheoremViolation


@dataclass(frozen=True)
class DualGenerator:
    monomial: Monomial
    form: str  # "part-block" or "window"
    j: int | None = None
    p: int | None = None
    q: tuple[int, ...] = ()
    q_prime: tuple[int, ...] = ()

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.monomial.support)

    def to_json(self) -> dict:
        out = {"monomial": str(self.monomial), "form": self.form}
        if self.form == "part-block":
            out["part"] = self.j
        else:
            out.update(j=self.j, p=self.p,
                       q={f"q{self.j + k}": v for k, v in enumerate(self.q)},
                       q_prime={f"q'{self.j + 1 + k}": v for k, v in enumerate(self.q_prime)})
        return out


def _require_intervals(instance: SpreadInstance) -> list[tuple[int, int]]:
    if not instance.interval_form:
        raise InstanceError("closed-form dual needs interval parts")
    return instance.partition.intervals()


def window_q_prime(intervals: Sequence[tuple[int, int]], t: Sequence[int],
                   ell: int, q_prev: int) -> int:
    """The unique q'_ell forced by the gap condition, 0-based part index ``ell``."""
    (i_prev, n_prev), (i_l, _) = intervals[ell - 1], intervals[ell]
    return t[ell - 1] - 1 + (i_prev + n_prev - 1 - q_prev) - i_l


def dual_closed_form(instance: SpreadInstance, *, enforce_separation: bool = True,
                     minimal: bool = True) -> list[DualGenerator]:
    """Generators of the Alexander dual built from the interval data.

    Part blocks give ``prod_{k in V_i} x_k``.  A window ``j < p`` removes from
    ``V_j ∪ ... ∪ V_p`` the top ``q_l + 1`` vertices of ``V_l`` (l < p) and the
    bottom ``q'_l + 1`` vertices of ``V_l`` (l > j); ``q'_l`` is forced by the
    gap condition and the two blocks inside an interior part must be
    separated.  Windows whose blocks fall outside their part are skipped.
    ``enforce_separation=False`` drops the separation condition (mutation
    testing only).
    """
    iv = _require_intervals(instance)
    t, d = instance.t, instance.d
    parts = instance.parts
    out = [DualGenerator(Monomial.from_support(parts[i]), "part-block", j=i + 1)
           for i in range(d)]
    for j in range(d):
        for p in range(j + 1, d):
            ranges = [range(iv[l][1]) for l in range(j, p)]
            for qs in product(*ranges):
                gen = _window(iv, t, parts, j, p, qs, enforce_separation)
                if gen is not None:
                    out.append(gen)
    if not minimal:
        return out
    return _minimal_generators(out)


def _window(iv, t, parts, j, p, qs, enforce_separation) -> DualGenerator | None:
    removed: set[int] = set()
    qps = []
    for k, ell in enumerate(range(j + 1, p + 1)):
        qp = window_q_prime(iv, t, ell, qs[k])
        i_l, n_l = iv[ell]
        if not 0 <= qp <= n_l - 1:
            return None
        if enforce_separation and ell < p:
            q_l = qs[k + 1]
            if not qp < n_l - 1 - q_l:
                return None
        qps.append(qp)
        removed.update(range(i_l, i_l + qp + 1))
    for k, ell in enumerate(range(j, p)):
        i_l, n_l = iv[ell]
        removed.update(range(i_l + n_l - 1 - qs[k], i_l + n_l))
    support = [v for part in parts[j:p + 1] for v in part if v not in removed]
    if not support:
        return None
    return DualGenerator(Monomial.from_support(support), "window", j=j + 1, p=p + 1,
                         q=tuple(qs), q_prime=tuple(qps))


def _minimal_generators(gens: Iterable[DualGenerator]) -> list[DualGenerator]:
    first: dict[Monomial, DualGenerator] = {}
    for g in gens:
        first.setdefault(g.monomial, g)
    ideal = MonomialIdeal(first)
    return [first[m] for m in ideal.gens]


# ---------------------------------------------------------------- oracle

def minimal_transversals(edges: Sequence[Iterable[int]],
                         budget: Budget = DEFAULT_BUDGET) -> list[frozenset[int]]:
    """All minimal vertex covers of a hypergraph, by branch and bound.

    Branches on the vertices of the first uncovered edge; a branch dies as
    soon as an already chosen vertex has no private edge left, since adding
    more vertices can never restore it.
    """
    edge_sets = [frozenset(e) for e in edges]
    if not edge_sets:
        return [frozenset()]
    found: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()
    nodes = 0

    def rec(chosen: frozenset[int]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExceeded("transversal enumeration exceeded node budget")
        uncovered = next((e for e in edge_sets if not (e & chosen)), None)
        if uncovered is None:
            found.add(chosen)
            return
        for v in sorted(uncovered):
            nxt = chosen | {v}
            if nxt in seen:
                continue
            seen.add(nxt)
            if _privates_survive(edge_sets, chosen, v):
                rec(nxt)

    rec(frozenset())
    return sort_primes(found)


def _privates_survive(edges: Sequence[frozenset[int]], chosen: frozenset[int], v: int) -> bool:
    # every w in chosen must still hit some edge that meets chosen ∪ {v} only in w
    need = set(chosen)
    for e in edges:
        if v in e:
            continue
        hit = e & chosen
        if len(hit) == 1:
            need.discard(next(iter(hit)))
            if not need:
                return True
    return not need


@dataclass
class DualOracle:
    primes: list[frozenset[int]]

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial.from_support(p) for p in self.primes]

    @property
    def heights(self) -> list[int]:
        return [len(p) for p in self.primes]


def dual_oracle(I: MonomialIdeal, budget: Budget = DEFAULT_BUDGET) -> DualOracle:
    if not I.is_squarefree():
        raise ValueError("Alexander dual needs a square-free ideal")
    return DualOracle(minimal_transversals([g.support for g in I.gens], budget))


def dual_ideal(gens: Iterable[DualGenerator | Monomial]) -> MonomialIdeal:
    return MonomialIdeal(g.monomial if isinstance(g, DualGenerator) else g for g in gens)


# ------------------------------------------------------ classifications

def height(I: MonomialIdeal, instance: SpreadInstance | None = None,
           budget: Budget = DEFAULT_BUDGET) -> int:
    h = min(len(p) for p in dual_oracle(I, budget).primes)
    if instance is not None and instance.interval_form:
        closed = min(len(p) for p in instance.parts)
        if closed != h:
            raise TheoremViolation(f"height: transversals give {h}, min n_j gives {closed}")
    return h


def expected_window_degree(g: DualGenerator, instance: SpreadInstance) -> int:
    """``i_p - i_j + n_p - sum_{l=j}^{p-1} t_l`` for a window generator."""
    iv = instance.partition.intervals()
    (i_j, _), (i_p, n_p) = iv[g.j - 1], iv[g.p - 1]
    return i_p - i_j + n_p - sum(instance.t[g.j - 1:g.p - 1])


def degree_formula_check(g: DualGenerator, instance: SpreadInstance) -> bool:
    if g.form == "part-block":
        return g.monomial.degree == len(instance.parts[g.j - 1])
    return g.monomial.degree == expected_window_degree(g, instance)


def unmixed_criterion(instance: SpreadInstance) -> bool:
    iv = _require_intervals(instance)
    s = iv[0][1]
    if any(n != s for _, n in iv):
        return False
    t = instance.t
    return all(iv[j + 1][0] - (iv[j][0] + s - 1) > t[j] - 1 or iv[j + 1][0] - iv[j][0] == t[j]
               for j in range(instance.d - 1))


def cm_criterion(instance: SpreadInstance) -> bool:
    iv = _require_intervals(instance)
    if all(n == 1 for _, n in iv):
        return True  # principal edge ideal
    s = iv[0][1]
    return all(n == s for _, n in iv) and all(
        iv[j + 1][0] - iv[j][0] == instance.t[j] for j in range(instance.d - 1))


@dataclass
class Classification:
    value: bool
    arithmetic: bool | None
    operational: bool
    route: str

    def to_json(self) -> dict:
        return {"value": self.value, "arithmetic": self.arithmetic,
                "operational": self.operational, "route": self.route}


def _agree(name: str, arithmetic: bool | None, operational: bool) -> Classification:
    if arithmetic is None:
        return Classification(operational, None, operational, "oracle")
    if arithmetic != operational:
        raise TheoremViolation(
            f"{name}: criterion says {arithmetic}, operational route says {operational}")
    return Classification(operational, arithmetic, operational, "both-agree")


def is_unmixed(instance: SpreadInstance, I: MonomialIdeal,
               primes: Sequence[frozenset[int]] | None = None) -> Classification:
    primes = primes if primes is not None else dual_oracle(I).primes
    operational = len({len(p) for p in primes}) == 1
    arith = unmixed_criterion(instance) if instance.interval_form else None
    return _agree("unmixed", arith, operational)


def is_cohen_macaulay(instance: SpreadInstance, I: MonomialIdeal,
                      ht: int | None = None, q_I: int | None = None) -> Classification:
    """Arithmetic criterion vs ``ht(I) = q(I) + 1``."""
    ht = ht if ht is not None else height(I)
    q_I = q_I if q_I is not None else betti_table(I, route="oracle").q_I
    operational = ht == q_I + 1
    arith = cm_criterion(instance) if instance.interval_form else None
    return _agree("Cohen-Macaulay", arith, operational)


@dataclass
class KonigResult:
    nu: int
    tau: int
    matching: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return self.nu == self.tau


def konig_check(h: Hypergraph, I: MonomialIdeal | None = None, tau: int | None = None,
                budget: Budget = DEFAULT_BUDGET) -> KonigResult:
    I = I if I is not None else edge_ideal(h)
    tau = tau if tau is not None else height(I, budget=budget)
    nu, witness = maximum_matching(h, budget)
    if nu > tau:
        raise TheoremViolation(f"matching {nu} exceeds transversal number {tau}")
    return KonigResult(nu, tau, witness)


def v_structure_check(instance: SpreadInstance, primes: Iterable[frozenset[int]]) -> bool:
    """``v = prod_j x_{min V_j}`` meets every minimal prime in exactly one variable."""
    v = {p[0] for p in instance.parts}
    return all(len(v & p) == 1 for p in primes)
