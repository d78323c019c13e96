"""Sorting operator, sortability, l-exchange, Rees algebra binomials and the
linear relation graph.

The sorting monomial order itself is never built.  Sorted tuples serve as
canonical forms: a product of generators is standard for the sorting order
exactly when its factor tuple is sorted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .hypergraph import SpreadInstance
from .monomials import Budget, BudgetExceeded, DEFAULT_BUDGET, Monomial, MonomialIdeal


class TheoremViolation(AssertionError):
    """A closed form disagreed with its independent check."""


def _indices(m: Monomial) -> list[int]:
    return [v for v, e in m.exponents.items() for _ in range(e)]


def sort_tuple(monos: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """N-fold sorting: merge all indices, monomial k takes positions k, k+N, ..."""
    n = len(monos)
    if len({m.degree for m in monos}) > 1:
        raise ValueError("sorting needs monomials of one degree")
    merged = sorted(i for m in monos for i in _indices(m))
    return tuple(Monomial((i, 1) for i in merged[k::n]) for k in range(n))


@dataclass(frozen=True)
class SortedPair:
    u: Monomial
    v: Monomial
    u_prime: Monomial
    v_prime: Monomial

    @property
    def was_sorted(self) -> bool:
        return (self.u, self.v) == (self.u_prime, self.v_prime)


def sort_pair(u: Monomial, v: Monomial) -> SortedPair:
    if u.degree != v.degree:
        raise ValueError(f"degree mismatch: {u} vs {v}")
    up, vp = sort_tuple((u, v))
    return SortedPair(u, v, up, vp)


def is_sorted_tuple(monos: Sequence[Monomial]) -> bool:
    return tuple(monos) == sort_tuple(monos)


def check_sortable(I: MonomialIdeal) -> tuple[bool, tuple[Monomial, Monomial] | None]:
    """Sortability of G(I); on failure the lex-smallest offending pair."""
    gens = set(I.gens)
    for u, v in combinations(sorted(I.gens, key=_indices), 2):
        sp = sort_pair(u, v)
        if sp.u_prime not in gens or sp.v_prime not in gens:
            return False, (u, v)
    return True, None


def sorted_tuples(I: MonomialIdeal, N: int, budget: Budget = DEFAULT_BUDGET
                  ) -> list[tuple[Monomial, ...]]:
    """Sorted N-tuples of generators (the standard monomials of degree N)."""
    from math import comb
    budget.check_generators(comb(len(I) + N - 1, N), f"{N}-multisets")
    gens = sorted(I.gens, key=_indices)
    out = []
    for combo in combinations_with_replacement(gens, N):
        if sort_tuple(combo) == combo:
            out.append(combo)
    return out


def _product(monos: Iterable[Monomial]) -> Monomial:
    return reduce(Monomial.__mul__, monos, Monomial.one())


@dataclass
class FiberCheck:
    N: int
    distinct_products: int
    sorted_tuples: int

    @property
    def ok(self) -> bool:
        return self.distinct_products == self.sorted_tuples


def fiber_hilbert_check(I: MonomialIdeal, N_max: int = 3,
                        budget: Budget = DEFAULT_BUDGET) -> list[FiberCheck]:
    """Per N: #distinct products of N generators vs #sorted N-tuples."""
    from math import comb
    out = []
    for N in range(1, N_max + 1):
        budget.check_generators(comb(len(I) + N - 1, N), f"{N}-multisets")
        products = {_product(c) for c in combinations_with_replacement(I.gens, N)}
        out.append(FiberCheck(N, len(products), len(sorted_tuples(I, N, budget))))
    return out


@dataclass
class ExchangeResult:
    holds: bool
    pairs_checked: int
    counterexample: tuple | None = None


def check_l_exchange(I: MonomialIdeal, N_max: int = 2,
                     budget: Budget = DEFAULT_BUDGET) -> ExchangeResult:
    """Exhaustive l-exchange check over standard monomials of degree <= N_max.

    For standard monomials A, B of equal degree N whose products first differ
    at x_q with ``deg_q A < deg_q B``, some factor u of A and some j > q must
    give ``x_q u / x_j`` in I.
    """
    ok, bad = check_sortable(I)
    if not ok:
        raise ValueError(f"generators are not sortable: {bad[0]}, {bad[1]}")
    variables = I.support()
    last = variables[-1]
    checked = 0
    for N in range(1, N_max + 1):
        tuples = sorted_tuples(I, N, budget)
        prods = [_product(t).exponents for t in tuples]
        witness_cache: dict[tuple[int, int], bool] = {}
        for a, b in combinations(range(len(tuples)), 2):
            pa, pb = prods[a], prods[b]
            q = next((v for v in variables if pa.get(v, 0) != pb.get(v, 0)), None)
            if q is None or q == last:
                continue
            low = a if pa.get(q, 0) < pb.get(q, 0) else b
            checked += 1
            if checked > budget.max_nodes:
                raise BudgetExceeded("l-exchange check exceeded node budget")
            key = (low, q)
            if key not in witness_cache:
                witness_cache[key] = _exchange_witness(I, tuples[low], q) is not None
            if not witness_cache[key]:
                high = b if low == a else a
                return ExchangeResult(False, checked, (tuples[low], tuples[high], q))
    return ExchangeResult(True, checked)


def _exchange_witness(I: MonomialIdeal, factors: Sequence[Monomial], q: int):
    xq = Monomial({q: 1})
    for alpha, u in enumerate(factors):
        for j in u.support:
            if j > q:
                w = (u * xq) / Monomial({j: 1})
                if I.contains(w):
                    return alpha, j
    return None


# ----------------------------------------------------------- Rees binomials

@dataclass(frozen=True)
class ReesBinomial:
    kind: str  # "sort" (pair straightening) or "exchange" (variable exchange)
    u: Monomial
    v: Monomial
    u_prime: Monomial | None = None
    v_prime: Monomial | None = None
    i: int | None = None
    j: int | None = None

    def __str__(self) -> str:
        def t(m: Monomial) -> str:
            return "t[" + "".join(f"x{v}" if e == 1 else f"x{v}^{e}"
                                  for v, e in m.exponents.items()) + "]"
        if self.kind == "sort":
            return f"{t(self.u)}*{t(self.v)} - {t(self.u_prime)}*{t(self.v_prime)}"
        return f"x{self.i}*{t(self.u)} - x{self.j}*{t(self.v)}"


def rees_groebner_binomials(I: MonomialIdeal) -> list[ReesBinomial]:
    """Sorting binomials over unsorted pairs, then the variable-exchange
    binomials ``x_i t_u - x_j t_v`` with ``x_i u = x_j v``, ``i < j`` and j
    maximal such that ``x_i u / x_j`` is a generator."""
    ok, bad = check_sortable(I)
    if not ok:
        raise ValueError(f"generators are not sortable: {bad[0]}, {bad[1]}")
    out = []
    for u, v in combinations(sorted(I.gens, key=_indices), 2):
        sp = sort_pair(u, v)
        if {sp.u_prime, sp.v_prime} != {u, v}:
            out.append(ReesBinomial("sort", u, v, sp.u_prime, sp.v_prime))
    out.extend(_exchange_binomials(I))
    return out


def _exchange_binomials(I: MonomialIdeal) -> list[ReesBinomial]:
    gens = set(I.gens)
    out = []
    for u in I.gens:
        for i in I.support():
            xi_u = u * Monomial({i: 1})
            js = [j for j in u.support if j > i and xi_u / Monomial({j: 1}) in gens]
            if js:
                j = max(js)
                out.append(ReesBinomial("exchange", u, xi_u / Monomial({j: 1}), i=i, j=j))
    return out


def exchange_binomials_literal(I: MonomialIdeal) -> list[ReesBinomial]:
    """The other reading of the maximality clause: among all (u, v, i, j) with
    ``i < j`` and ``x_i u = x_j v``, keep those where j is the largest index
    for which ``x_i v / x_j`` is a generator."""
    gens = set(I.gens)
    out = []
    for u in I.gens:
        for i in I.support():
            xi_u = u * Monomial({i: 1})
            for j in u.support:
                if j <= i:
                    continue
                v = xi_u / Monomial({j: 1})
                if v not in gens:
                    continue
                xi_v = v * Monomial({i: 1})
                cands = [k for k in xi_v.support if xi_v / Monomial({k: 1}) in gens]
                if cands and max(cands) == j:
                    out.append(ReesBinomial("exchange", u, v, i=i, j=j))
    return out


def compare_exchange_readings(I: MonomialIdeal) -> dict:
    a = {str(b) for b in _exchange_binomials(I)}
    b = {str(b) for b in exchange_binomials_literal(I)}
    return {"primary": len(a), "literal": len(b), "only_primary": sorted(a - b),
            "only_literal": sorted(b - a), "agree": a == b}


def verify_exchange_binomial(I: MonomialIdeal, b: ReesBinomial) -> bool:
    """Rescan: ``x_i u = x_j v`` and no larger j' works."""
    xi_u = b.u * Monomial({b.i: 1})
    if xi_u != b.v * Monomial({b.j: 1}) or not b.i < b.j:
        return False
    gens = set(I.gens)
    return not any(jj > b.j and xi_u / Monomial({jj: 1}) in gens
                   for jj in b.u.support)


# ------------------------------------------------------- relation graph

class _UnionFind:
    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class RelationGraph:
    """Linear relation graph on the variables of ``supp(I)``.

    ``edge_vertices`` is the vertex set in the narrow sense (vertices met by
    an edge); variables met by no edge are kept as singleton components so
    that ``len(vertices) - component_count`` equals the narrow-sense value.
    """
    vertices: list[int]
    edges: list[tuple[int, int]]
    components: list[list[int]] = field(default_factory=list)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def edge_vertices(self) -> list[int]:
        return sorted({v for e in self.edges for v in e})

    @property
    def isolated(self) -> list[int]:
        covered = set(self.edge_vertices)
        return [v for v in self.vertices if v not in covered]

    def to_json(self) -> dict:
        return {"vertices": len(self.vertices), "edges": len(self.edges),
                "isolated": self.isolated,
                "components": [list(c) for c in self.components]}


def linear_relation_graph(I: MonomialIdeal) -> RelationGraph:
    edges = set()
    for ut, um in combinations(I.gens, 2):
        if ut.degree != um.degree:
            continue
        g = ut.gcd(um)
        if g.degree == ut.degree - 1:
            # x_i u_t = x_j u_m with x_i = u_m/g and x_j = u_t/g
            i, j = (um / g).support[0], (ut / g).support[0]
            edges.add((min(i, j), max(i, j)))
    vertices = list(I.support())
    uf = _UnionFind(vertices)
    for a, b in edges:
        uf.union(a, b)
    comps: dict[int, list[int]] = {}
    for v in vertices:
        comps.setdefault(uf.find(v), []).append(v)
    return RelationGraph(vertices, sorted(edges), sorted(comps.values()))


def analytic_spread(I: MonomialIdeal, instance: SpreadInstance | None = None) -> int:
    """``r - s + 1`` from the relation graph, cross-checked against
    ``|V(K)| - d + 1`` when the instance is supplied."""
    g = linear_relation_graph(I)
    graph_value = len(g.vertices) - g.component_count + 1
    if instance is not None:
        closed = len(instance.vertices) - instance.d + 1
        if closed != graph_value:
            raise TheoremViolation(
                f"analytic spread: graph gives {graph_value}, r-d+1 gives {closed}")
    return graph_value


@dataclass(frozen=True)
class DepthAsymptotics:
    limit_depth: int
    dstab_bound: int
    provenance: str = "theorem-derived, not measured"


def depth_asymptotics(instance: SpreadInstance) -> DepthAsymptotics:
    r = len(instance.vertices)
    return DepthAsymptotics(instance.d - 1, r - instance.d)
