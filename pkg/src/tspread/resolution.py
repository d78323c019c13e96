"""Linear quotients, set(u), and the linear-strand Betti table."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .hypergraph import SpreadInstance
from .monomials import Monomial, MonomialIdeal


class UnsupportedIdeal(ValueError):
    """The ideal is outside the class a formula applies to."""


class LinearQuotientsFailure(AssertionError):
    """A prefix colon ideal has a generator of degree >= 2."""

    def __init__(self, step: int, generator: Monomial, colon: MonomialIdeal):
        super().__init__(f"step {step}: ({generator}) prefix colon is {colon}, not linear")
        self.step = step
        self.generator = generator
        self.colon = colon


@dataclass
class QuotientWitness:
    ordering: list[Monomial]
    colon_sets: list[frozenset[int]]
    linear: bool = True
    failure: LinearQuotientsFailure | None = None


@dataclass
class BettiTable:
    d: int
    beta: list[int]
    q_of_u: dict[Monomial, int]
    n_vertices: int
    set_of_u: dict[Monomial, frozenset[int]] = field(default_factory=dict)

    @property
    def q_I(self) -> int:
        return max(self.q_of_u.values())

    @property
    def pd_SmodI(self) -> int:
        return self.q_I + 1

    @property
    def depth_SmodI(self) -> int:
        return self.n_vertices - self.q_I - 1

    def to_json(self) -> dict:
        return {"betti": self.beta, "q_I": self.q_I, "pd_SmodI": self.pd_SmodI,
                "depth_SmodI": self.depth_SmodI}


def _single_degree(I: MonomialIdeal) -> int:
    degs = I.degrees()
    if len(degs) != 1:
        raise UnsupportedIdeal(f"ideal is not generated in a single degree: {sorted(degs)}")
    return degs.pop()


def prefix_colons(I: MonomialIdeal) -> list[MonomialIdeal]:
    """``(u_1, ..., u_{k-1}) : u_k`` for the lex-descending generators."""
    gens = I.gens
    out = []
    for k, u in enumerate(gens):
        out.append(MonomialIdeal(g.quotient(u) for g in gens[:k]))
    return out


def verify_linear_quotients(I: MonomialIdeal) -> QuotientWitness:
    _single_degree(I)
    colons = prefix_colons(I)
    sets = []
    for k, (u, C) in enumerate(zip(I.gens, colons), 1):
        if any(g.degree != 1 for g in C.gens):
            fail = LinearQuotientsFailure(k, u, C)
            return QuotientWitness(list(I.gens), sets, linear=False, failure=fail)
        sets.append(frozenset(g.support[0] for g in C.gens))
    return QuotientWitness(list(I.gens), sets)


def set_u_oracle(I: MonomialIdeal, u: Monomial) -> frozenset[int]:
    """Variables lying in the prefix colon ideal of ``u`` (lex order)."""
    gens = I.gens
    k = gens.index(u)
    C = MonomialIdeal(g.quotient(u) for g in gens[:k])
    return frozenset(g.support[0] for g in C.gens if g.degree == 1)


def set_u_closed_form(u: Monomial | Sequence[int], instance: SpreadInstance) -> frozenset[int]:
    """Union of ``[i_1, k_1-1] ∩ V_1`` and ``[k_{j-1}+t_{j-1}, k_j-1] ∩ V_j``."""
    ks = u.support if isinstance(u, Monomial) else tuple(u)
    if not instance.is_spread_edge(ks):
        raise UnsupportedIdeal(f"{list(ks)} is not a t-spread edge of the instance")
    parts, t = instance.parts, instance.t
    out = {v for v in parts[0] if v < ks[0]}
    for j in range(1, instance.d):
        lo = ks[j - 1] + t[j - 1]
        out.update(v for v in parts[j] if lo <= v < ks[j])
    return frozenset(out)


def betti_from_sets(sets: dict[Monomial, frozenset[int]], d: int, n_vertices: int) -> BettiTable:
    q = {u: len(s) for u, s in sets.items()}
    top = max(q.values())
    beta = [sum(comb(qu, i) for qu in q.values()) for i in range(top + 1)]
    return BettiTable(d, beta, q, n_vertices, dict(sets))


def betti_table(I: MonomialIdeal, instance: SpreadInstance | None = None,
                route: str = "closed") -> BettiTable:
    """Linear strand ``beta_{i,i+d}``; ``route`` is ``closed`` or ``oracle``.

    The closed route needs the (pruned) instance; the oracle route only the
    ideal.  Both require linear quotients in lex order.
    """
    d = _single_degree(I)
    witness = verify_linear_quotients(I)
    if not witness.linear:
        raise witness.failure
    n = len(I.support())
    if route == "oracle" or instance is None:
        sets = dict(zip(witness.ordering, witness.colon_sets))
    else:
        sets = {u: set_u_closed_form(u, instance) for u in I.gens}
    return betti_from_sets(sets, d, n)
