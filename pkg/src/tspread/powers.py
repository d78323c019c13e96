"""Bounded-exponent shadows of the asymptotic statements about powers.

Strong persistence ``(I^{k+1} : I) = I^k``, ``Ass(I^k) = Min(I)`` (normally
torsion-free up to ``k_max``), the scaling invariance of that property, and
normality of ``I^k`` decided by exact Newton polyhedron membership.  Every
verdict here covers only the exponents actually checked.

Large generator sets are handled as integer exponent matrices whose columns
are the variables of ``supp(I)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linprog

from .monomials import (Budget, DEFAULT_BUDGET, Monomial, MonomialIdeal,
                        associated_primes, irreducible_decomposition, minimal_primes)

_CHUNK = 4_000_000  # max cells in one broadcast comparison


# ------------------------------------------------------------ matrix helpers

def to_matrix(gens: Iterable[Monomial], variables: Sequence[int]) -> np.ndarray:
    col = {v: c for c, v in enumerate(variables)}
    rows = list(gens)
    out = np.zeros((len(rows), len(variables)), dtype=np.int16)
    for r, g in enumerate(rows):
        for v, e in g.exponents.items():
            out[r, col[v]] = e
    return out


def from_matrix(mat: np.ndarray, variables: Sequence[int]) -> list[Monomial]:
    return [Monomial((v, int(e)) for v, e in zip(variables, row) if e) for row in mat]


def contains_rows(gens: np.ndarray, cands: np.ndarray) -> np.ndarray:
    """Boolean mask: which candidate rows lie in the ideal generated by ``gens``."""
    out = np.zeros(len(cands), dtype=bool)
    if len(gens) == 0 or len(cands) == 0:
        return out
    step = max(1, _CHUNK // (len(gens) * cands.shape[1] + 1))
    for s in range(0, len(cands), step):
        block = cands[s:s + step]
        out[s:s + step] = (gens[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out


def minimal_rows(mat: np.ndarray) -> np.ndarray:
    """Minimal generators among the rows (deduplicated, divisibility-pruned)."""
    if len(mat) == 0:
        return mat
    mat = np.unique(mat, axis=0)
    deg = mat.sum(axis=1)
    kept = np.zeros((0, mat.shape[1]), dtype=mat.dtype)
    for dgr in np.unique(deg):
        group = mat[deg == dgr]
        if len(kept):
            group = group[~contains_rows(kept, group)]
        kept = np.vstack([kept, group])
    return kept


def power_rows(G: np.ndarray, k: int, budget: Budget = DEFAULT_BUDGET) -> np.ndarray:
    """Minimal generators of ``I^k`` as rows."""
    if k == 0:
        return np.zeros((1, G.shape[1]), dtype=G.dtype)
    single_degree = len(np.unique(G.sum(axis=1))) == 1
    P = G
    for _ in range(k - 1):
        budget.check_generators(len(P) * len(G), "power")
        P = np.unique((P[:, None, :] + G[None, :, :]).reshape(-1, G.shape[1]), axis=0)
        if not single_degree:
            P = minimal_rows(P)
    return P


def ideal_power(I: MonomialIdeal, k: int, budget: Budget = DEFAULT_BUDGET) -> MonomialIdeal:
    vs = I.support()
    return MonomialIdeal(from_matrix(power_rows(to_matrix(I.gens, vs), k, budget), vs))


# --------------------------------------------------------- strong persistence

def colon_equals_power(I: MonomialIdeal, k: int, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Decide ``(I^{k+1} : I) = I^k``.

    The inclusion ``I^k ⊆ (I^{k+1} : I)`` always holds, and every colon
    ``(I^{k+1} : g)`` contains ``I^k``; so the intersection is tracked as
    ``I^k + (E)`` and only the extra generators E outside ``I^k`` are carried.
    """
    vs = I.support()
    G = to_matrix(I.gens, vs)
    Pk = power_rows(G, k, budget)
    Pk1 = power_rows(G, k + 1, budget)
    extra: np.ndarray | None = None
    for g in G:
        J = minimal_rows(np.maximum(Pk1 - g, 0).astype(Pk1.dtype))
        if extra is None:
            extra = J
        else:
            inside = contains_rows(J, extra)
            keep = extra[inside]
            out = extra[~inside]
            budget.check_generators(len(out) * len(J), "colon intersection")
            lcms = np.maximum(out[:, None, :], J[None, :, :]).reshape(-1, G.shape[1])
            extra = minimal_rows(np.vstack([keep, lcms]))
        extra = extra[~contains_rows(Pk, extra)]
        if len(extra) == 0:
            return True
    return len(extra) == 0


def strong_persistence_check(I: MonomialIdeal, k_max: int = 3,
                             budget: Budget = DEFAULT_BUDGET) -> dict[int, bool]:
    return {k: colon_equals_power(I, k, budget) for k in range(1, k_max + 1)}


# ------------------------------------------------------------ Ass of powers

def ass_of_power(I: MonomialIdeal, k: int, budget: Budget = DEFAULT_BUDGET
                 ) -> list[frozenset[int]]:
    return associated_primes(ideal_power(I, k, budget), budget)


@dataclass
class PowerStep:
    k: int
    generators: int
    ass: list[frozenset[int]]
    persistence: bool | None = None
    normal: bool | None = None


@dataclass
class PowerProfile:
    k_max: int
    min_primes: list[frozenset[int]]
    steps: list[PowerStep] = field(default_factory=list)

    @property
    def ntf(self) -> bool:
        target = set(self.min_primes)
        return all(set(s.ass) == target for s in self.steps)

    @property
    def ass_chain_increasing(self) -> bool:
        return all(set(a.ass) <= set(b.ass) for a, b in zip(self.steps, self.steps[1:]))

    def to_json(self) -> dict:
        from .monomials import prime_str
        return {
            "k_max": self.k_max,
            "verified": f"bounded check, k <= {self.k_max}",
            "min_primes": [prime_str(p) for p in self.min_primes],
            "ntf_up_to_k_max": self.ntf,
            "steps": [{"k": s.k, "generators": s.generators,
                       "ass": [prime_str(p) for p in s.ass],
                       "strong_persistence": s.persistence, "normal": s.normal}
                      for s in self.steps],
        }


def power_profile(I: MonomialIdeal, k_max: int = 3, *, persistence: bool = True,
                  normal_k_max: int = 0, budget: Budget = DEFAULT_BUDGET) -> PowerProfile:
    mins = minimal_primes(associated_primes(I, budget))
    prof = PowerProfile(k_max, mins)
    for k in range(1, k_max + 1):
        Ik = ideal_power(I, k, budget)
        step = PowerStep(k, len(Ik), associated_primes(Ik, budget))
        if persistence:
            step.persistence = colon_equals_power(I, k, budget)
        if k <= normal_k_max:
            step.normal = normal_power(I, k, budget)
        prof.steps.append(step)
    return prof


def ntf_shadow(I: MonomialIdeal, k_max: int = 3, budget: Budget = DEFAULT_BUDGET) -> bool:
    """``Ass(I^k) = Min(I)`` for ``1 <= k <= k_max``; a bounded check only."""
    return power_profile(I, k_max, persistence=False, budget=budget).ntf


def scaling_check(I: MonomialIdeal, h: Monomial, k_max: int = 2,
                  budget: Budget = DEFAULT_BUDGET) -> tuple[bool, bool]:
    """NTF shadows of I and of ``h·I``; they must agree."""
    return ntf_shadow(I, k_max, budget), ntf_shadow(I.scale(h), k_max, budget)


# ------------------------------------------------------- integral closure

@dataclass
class ClosureCertificate:
    member: bool
    weights: list[Fraction] | None = None  # convex weights on generators (member)
    separator: list[Fraction] | None = None  # y >= 0, y.g >= 1, y.a < 1 (non-member)


def _frac(x: float) -> Fraction:
    return Fraction(x).limit_denominator(10_000)


def _verify_member(G: Sequence[Sequence[int]], a: Sequence[int], lam: Sequence[Fraction]) -> bool:
    if any(l < 0 for l in lam) or sum(lam) < 1:
        return False
    return all(sum(l * g[i] for l, g in zip(lam, G)) <= a[i] for i in range(len(a)))


def _verify_separator(G: Sequence[Sequence[int]], a: Sequence[int], y: Sequence[Fraction]) -> bool:
    if any(v < 0 for v in y):
        return False
    if sum(v * ai for v, ai in zip(y, a)) >= 1:
        return False
    return all(sum(v * gi for v, gi in zip(y, g)) >= 1 for g in G)


def newton_membership(a: Sequence[int], G: Sequence[Sequence[int]]) -> ClosureCertificate:
    """Is ``a`` in ``conv(G) + R^n_{>=0}``?  Decided exactly.

    A floating LP proposes either convex weights (membership) or a separating
    functional (non-membership); the proposal is rounded to fractions and
    checked in exact arithmetic.  If neither certificate verifies, an exact
    rational simplex settles the question.
    """
    G = [list(map(int, g)) for g in G]
    a = list(map(int, a))
    for idx, g in enumerate(G):
        if all(gi <= ai for gi, ai in zip(g, a)):
            w = [Fraction(0)] * len(G)
            w[idx] = Fraction(1)
            return ClosureCertificate(True, weights=w)
    m = len(G)
    # max sum(lam) s.t. G^T lam <= a, lam >= 0 ; dual: min a.y s.t. G y >= 1, y >= 0
    A = np.array(G, dtype=float).T
    res = linprog(-np.ones(m), A_ub=A, b_ub=np.array(a, dtype=float),
                  bounds=[(0, None)] * m, method="highs")
    if res.status == 0:
        lam = [_frac(x) for x in res.x]
        total = sum(lam)
        if total > 0 and _verify_member(G, a, [l / total for l in lam]):
            return ClosureCertificate(True, weights=[l / total for l in lam])
        y = [_frac(-x) for x in res.ineqlin.marginals]
        if _verify_separator(G, a, y):
            return ClosureCertificate(False, separator=y)
    return _exact_membership(a, G)


def _exact_membership(a: Sequence[int], G: Sequence[Sequence[int]]) -> ClosureCertificate:
    from sympy import symbols
    from sympy.solvers.simplex import lpmax

    # plain symbols: with sign assumptions sympy folds ``l >= 0`` to True and
    # the bound is lost
    lam = symbols(f"l0:{len(G)}")
    cons = [sum(l * g[i] for l, g in zip(lam, G)) <= a[i] for i in range(len(a))]
    cons = [c for c in cons if c is not True] + [l >= 0 for l in lam]
    best, sol = lpmax(sum(lam), cons)
    if best >= 1:
        total = _as_fraction(best)
        w = [_as_fraction(sol.get(l, 0)) / total for l in lam]
        return ClosureCertificate(True, weights=w)
    return ClosureCertificate(False)


def _as_fraction(x) -> Fraction:
    from sympy import Rational
    r = Rational(x)
    return Fraction(int(r.p), int(r.q))


def integral_closure_membership(m: Monomial, I: MonomialIdeal, k: int = 1,
                                budget: Budget = DEFAULT_BUDGET) -> bool:
    vs = sorted(set(I.support()) | set(m.support))
    G = power_rows(to_matrix(I.gens, vs), k, budget)
    a = to_matrix([m], vs)[0]
    return newton_membership(a, G.tolist()).member


def box_corners(G: np.ndarray, k: int, variables: Sequence[int],
                budget: Budget = DEFAULT_BUDGET) -> list[np.ndarray]:
    """Maximal exponent vectors in ``[0, k]^n`` outside the ideal of ``G``.

    These are the socle corners of ``(G) + (x_i^{k+1})``, read off from its
    irreducible components ``m^b`` as ``b - 1``.
    """
    n = len(variables)
    pure = [Monomial({v: k + 1}) for v in variables]
    J = MonomialIdeal(from_matrix(G, variables) + pure)
    col = {v: c for c, v in enumerate(variables)}
    corners = []
    for comp in irreducible_decomposition(J, budget, method="dual"):
        c = np.full(n, -1, dtype=np.int64)
        for v, e in comp.items():
            c[col[v]] = e - 1
        corners.append(c)
    return corners


def normal_power(I: MonomialIdeal, k: int, budget: Budget = DEFAULT_BUDGET,
                 sweep: str = "corners") -> bool:
    """Every monomial of ``[0,k]^n`` integral over ``I^k`` lies in ``I^k``.

    ``sweep="corners"`` tests only the maximal non-members of the box (the
    integral closure is an ideal, so any integral non-member lies below an
    integral maximal one); ``sweep="full"`` tests every box point.
    """
    vs = I.support()
    G = power_rows(to_matrix(I.gens, vs), k, budget)
    rows = G.tolist()
    if sweep == "corners":
        cands = box_corners(G, k, vs, budget)
    else:
        grids = np.indices((k + 1,) * len(vs)).reshape(len(vs), -1).T
        budget.check_generators(len(grids), "normality box")
        cands = grids[~contains_rows(G, grids.astype(G.dtype))]
    return not any(newton_membership(c, rows).member for c in cands)


def normality_shadow(I: MonomialIdeal, k_max: int = 2, budget: Budget = DEFAULT_BUDGET,
                     sweep: str = "corners") -> dict[int, bool]:
    if not I.is_squarefree():
        raise ValueError("normality shadow is defined for square-free ideals")
    return {k: normal_power(I, k, budget, sweep) for k in range(1, k_max + 1)}
