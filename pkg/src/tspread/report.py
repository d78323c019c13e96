"""Assemble every invariant of an instance into one deterministic report.

Each field carries a ``route`` tag: ``closed-form``, ``oracle``,
``both-agree`` (both computed, equality asserted) or ``theorem-derived``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .duality import (dual_closed_form, dual_oracle, is_cohen_macaulay, is_unmixed,
                      konig_check)
from .hypergraph import (DegenerateInstance, Hypergraph, InstanceError, SpreadInstance,
                         brute_force_edges, edge_ideal, instance_from_json, prepare)
from .monomials import (DEFAULT_BUDGET, Budget, MonomialIdeal, associated_primes,
                        minimal_primes, prime_str)
from .powers import power_profile
from .resolution import UnsupportedIdeal, betti_table, set_u_oracle
from .sorting import (TheoremViolation, analytic_spread, check_l_exchange, check_sortable,
                      compare_exchange_readings, depth_asymptotics, linear_relation_graph,
                      rees_groebner_binomials)

SCHEMA = 1

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE, EXIT_BUDGET, EXIT_VIOLATION = 0, 2, 3, 4, 5


class NonCompleteInstance(InstanceError):
    """Explicit edges that are a proper subset of the complete t-spread edges."""


@dataclass(frozen=True)
class ReportOptions:
    budget: Budget = DEFAULT_BUDGET
    powers_kmax: int | None = None
    normal_kmax: int = 0
    exchange_N: int = 2
    force_oracle_only: bool = False


@dataclass
class Problem:
    """A parsed input: the instance plus an optional explicit edge list."""
    instance: SpreadInstance
    edges: tuple[tuple[int, ...], ...] | None = None

    @property
    def complete(self) -> bool:
        return self.edges is None


def problem_from_json(data: Any) -> Problem:
    inst = instance_from_json(data)
    if "edges" not in data:
        return Problem(inst)
    try:
        edges = tuple(sorted(tuple(int(v) for v in e) for e in data["edges"]))
    except (TypeError, ValueError) as exc:
        raise InstanceError(f"malformed edge list: {exc}") from exc
    for e in edges:
        if not inst.is_spread_edge(e):
            raise InstanceError(f"edge {list(e)} is not a t-spread edge of the instance")
    if set(edges) == set(brute_force_edges(inst)):
        return Problem(inst)
    if not edges:
        raise DegenerateInstance("empty edge list")
    return Problem(inst, edges)


def load_problem(path: str | Path) -> Problem:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: {exc}") from exc
    return problem_from_json(data)


def tagged(route: str, **fields: Any) -> dict[str, Any]:
    return {"route": route, **fields}


@dataclass
class InvariantReport:
    fields: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"schema": SCHEMA, **self.fields}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"


# ------------------------------------------------------------ sections

def instance_section(inst: SpreadInstance, pruned: SpreadInstance) -> dict[str, Any]:
    return {"parts": [list(p) for p in inst.parts], "t": list(inst.t),
            "pruned_vertices": list(pruned.removed),
            "vertices": list(pruned.vertices), "interval_form": pruned.interval_form}


def generators_section(I: MonomialIdeal, inst: SpreadInstance) -> dict[str, Any]:
    brute = edge_ideal(Hypergraph(inst.vertices, tuple(brute_force_edges(inst))))
    if brute.gens != I.gens:
        raise TheoremViolation("DFS enumeration disagrees with the exhaustive filter")
    return tagged("both-agree", count=len(I), monomials=[str(g) for g in I.gens])


def betti_section(I: MonomialIdeal, pruned: SpreadInstance | None) -> dict[str, Any]:
    try:
        oracle = betti_table(I, route="oracle")
    except (UnsupportedIdeal, AssertionError) as exc:
        return tagged("oracle", available=False, reason=str(exc))
    note = "linear strand only; other graded Betti numbers vanish (linear resolution)"
    if pruned is None:
        return tagged("oracle", **oracle.to_json(), note=note)
    closed = betti_table(I, pruned, route="closed")
    for u in I.gens:
        if closed.set_of_u[u] != set_u_oracle(I, u):
            raise TheoremViolation(f"set({u}): closed form disagrees with the prefix colon")
    if closed.beta != oracle.beta:
        raise TheoremViolation(f"Betti: closed {closed.beta} vs oracle {oracle.beta}")
    return tagged("both-agree", **closed.to_json(), note=note)


def dual_section(I: MonomialIdeal, pruned: SpreadInstance, method: str = "both",
                 budget: Budget = DEFAULT_BUDGET) -> dict[str, Any]:
    out: dict[str, Any] = {}
    oracle = dual_oracle(I, budget) if method in ("oracle", "both") else None
    if method in ("closed", "both"):
        closed = dual_closed_form(pruned)
        out["generators"] = [g.to_json() for g in closed]
        if oracle is not None:
            if {g.monomial for g in closed} != set(oracle.generators):
                raise TheoremViolation("dual: closed form disagrees with transversal oracle")
            return tagged("both-agree", count=len(closed), **out)
        return tagged("closed-form", count=len(closed), **out)
    out["generators"] = [{"monomial": str(m)} for m in sorted(oracle.generators,
                                                              key=lambda m: m.lex_key(),
                                                              reverse=True)]
    return tagged("oracle", count=len(oracle.primes), **out)


def primes_section(I: MonomialIdeal, budget: Budget = DEFAULT_BUDGET) -> dict[str, Any]:
    covers = dual_oracle(I, budget).primes
    ass = associated_primes(I, budget)
    if set(ass) != set(covers):
        raise TheoremViolation("Ass(I) from decomposition differs from minimal covers")
    mins = minimal_primes(ass)
    return tagged("both-agree", count=len(mins), min=[prime_str(p) for p in mins],
                  ass=[prime_str(p) for p in ass], embedded=[])


def classify_section(I: MonomialIdeal, pruned: SpreadInstance, h: Hypergraph,
                     budget: Budget = DEFAULT_BUDGET, oracle_only: bool = False
                     ) -> dict[str, Any]:
    primes = dual_oracle(I, budget).primes
    tau = min(len(p) for p in primes)
    arithmetic = not oracle_only and pruned.interval_form
    if arithmetic and tau != min(len(p) for p in pruned.parts):
        raise TheoremViolation(f"height: covers give {tau}, min n_j gives "
                               f"{min(len(p) for p in pruned.parts)}")
    out: dict[str, Any] = {"height": tagged("both-agree" if arithmetic else "oracle",
                                            value=tau)}
    if not arithmetic:
        unm = len({len(p) for p in primes}) == 1
        out["unmixed"] = tagged("oracle", value=unm)
        try:
            q_I = betti_table(I, route="oracle").q_I
            out["cohen_macaulay"] = tagged("oracle", value=tau == q_I + 1)
        except (UnsupportedIdeal, AssertionError) as exc:
            out["cohen_macaulay"] = tagged("oracle", value=None, reason=str(exc))
    else:
        unm = is_unmixed(pruned, I, primes)
        cm = is_cohen_macaulay(pruned, I, ht=tau)
        out["unmixed"] = tagged(unm.route, value=unm.value)
        out["cohen_macaulay"] = tagged(cm.route, value=cm.value)
    k = konig_check(h, I, tau, budget)
    if not oracle_only and not k.equal:
        raise TheoremViolation(f"König property fails: nu={k.nu}, tau={k.tau}")
    out["konig"] = tagged("oracle" if oracle_only else "both-agree", nu=k.nu, tau=k.tau,
                          matching=[list(e) for e in k.matching])
    return out


def rees_section(I: MonomialIdeal) -> dict[str, Any]:
    bins = rees_groebner_binomials(I)
    readings = compare_exchange_readings(I)
    return tagged("closed-form",
                  sort=sum(b.kind == "sort" for b in bins),
                  exchange=sum(b.kind == "exchange" for b in bins),
                  exchange_literal_reading=readings["literal"],
                  readings_agree=readings["agree"],
                  binomials=[str(b) for b in bins])


def sorting_section(I: MonomialIdeal, N: int, budget: Budget) -> dict[str, Any]:
    ok, bad = check_sortable(I)
    out = {"sortable": tagged("oracle", value=ok,
                              counterexample=None if ok else [str(m) for m in bad])}
    if ok:
        ex = check_l_exchange(I, N, budget)
        out["l_exchange"] = tagged("oracle", value=ex.holds, N_max=N,
                                   pairs_checked=ex.pairs_checked,
                                   counterexample=_exchange_witness_json(ex.counterexample))
    return out


def _exchange_witness_json(cex) -> dict[str, Any] | None:
    if cex is None:
        return None
    low, high, q = cex
    return {"lower": [str(m) for m in low], "higher": [str(m) for m in high], "q": q}


def spread_section(I: MonomialIdeal, pruned: SpreadInstance | None) -> dict[str, Any]:
    g = linear_relation_graph(I)
    out = {"relation_graph": tagged("oracle", **g.to_json())}
    if pruned is None:
        out["analytic_spread"] = tagged("oracle", value=analytic_spread(I))
        return out
    out["analytic_spread"] = tagged("both-agree", value=analytic_spread(I, pruned))
    da = depth_asymptotics(pruned)
    out["depth_asymptotics"] = tagged("theorem-derived", limit_depth=da.limit_depth,
                                      dstab_bound=da.dstab_bound, note=da.provenance)
    return out


def powers_section(I: MonomialIdeal, k_max: int, normal_kmax: int, checks: set[str],
                   budget: Budget) -> dict[str, Any]:
    prof = power_profile(I, k_max, persistence="persistence" in checks,
                         normal_k_max=normal_kmax if "normal" in checks else 0,
                         budget=budget)
    data = prof.to_json()
    if not ({"ass", "ntf"} & checks):
        data.pop("ntf_up_to_k_max")
        for s in data["steps"]:
            s.pop("ass")
    return tagged("oracle", **data)


# -------------------------------------------------------------- driver

def resolve(problem: Problem, force_oracle_only: bool = False
            ) -> tuple[SpreadInstance | None, Hypergraph, MonomialIdeal]:
    """Pruned instance (``None`` when only oracle routes apply), hypergraph, ideal."""
    if not problem.complete:
        if not force_oracle_only:
            raise NonCompleteInstance(
                "edge list is not the complete t-spread hypergraph; "
                "no closed form applies (use --force-oracle-only)")
        covered = sorted({v for e in problem.edges for v in e})
        h = Hypergraph(tuple(covered), problem.edges)
        return None, h, edge_ideal(h)
    pruned, h = prepare(problem.instance)
    return (None if force_oracle_only else pruned), h, edge_ideal(h)


def build_report(problem: Problem, options: ReportOptions = ReportOptions()) -> InvariantReport:
    budget = options.budget
    pruned, h, I = resolve(problem, options.force_oracle_only)
    budget.check_generators(len(I), "edge ideal")
    rep = InvariantReport()
    f = rep.fields
    full, _ = prepare(problem.instance) if problem.complete else (problem.instance, None)
    f["instance"] = instance_section(problem.instance, full)
    if not problem.complete:
        f["instance"]["edges"] = [list(e) for e in problem.edges]
    f["mode"] = "oracle-only" if pruned is None else "full"
    if pruned is not None:
        f["generators"] = generators_section(I, pruned)
    else:
        f["generators"] = tagged("oracle", count=len(I), monomials=[str(g) for g in I.gens])
    f["betti"] = betti_section(I, pruned)
    f.update(sorting_section(I, options.exchange_N, budget))
    if pruned is not None:
        f["rees_binomials"] = rees_section(I)
    f.update(spread_section(I, pruned))
    if pruned is not None and pruned.interval_form:
        f["dual"] = dual_section(I, pruned, "both", budget)
    else:
        f["dual"] = dual_section(I, pruned, "oracle", budget)
    f["primes"] = primes_section(I, budget)
    f.update(classify_section(I, pruned if pruned is not None else problem.instance, h,
                              budget, oracle_only=pruned is None))
    if options.powers_kmax:
        f["powers"] = powers_section(I, options.powers_kmax, options.normal_kmax,
                                     {"persistence", "ass", "normal"}, budget)
    return rep


def run_report(path: str | Path, options: ReportOptions = ReportOptions()) -> InvariantReport:
    return build_report(load_problem(path), options)
