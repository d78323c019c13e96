"""Exact arithmetic on monomials and monomial ideals.

Variables are positive integers; a monomial is stored as its sparse exponent
map.  Ideals keep a minimal generating set sorted lex-descending with respect
to ``x1 > x2 > ...``.  Nothing here knows about coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping


class BudgetExceeded(RuntimeError):
    """Raised when a computation would exceed its configured resource budget."""


@dataclass(frozen=True)
class Budget:
    max_generators: int = 200_000
    max_nodes: int = 2_000_000

    def check_generators(self, count: int, what: str = "ideal") -> None:
        if count > self.max_generators:
            raise BudgetExceeded(
                f"{what} needs {count} generators (budget {self.max_generators})")


DEFAULT_BUDGET = Budget()


class Monomial:
    """Immutable monomial ``x_{i1}^{e1} ... x_{ik}^{ek}``."""

    __slots__ = ("_exps", "_key", "_hash")

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        exps: dict[int, int] = {}
        for var, e in items:
            if var < 1:
                raise ValueError(f"variable index must be positive, got {var}")
            if e < 0:
                raise ValueError(f"negative exponent {e} for x{var}")
            if e:
                exps[var] = exps.get(var, 0) + e
        self._exps = dict(sorted(exps.items()))
        self._key = tuple(self._exps.items())
        self._hash = hash(self._key)

    @classmethod
    def from_support(cls, support: Iterable[int]) -> "Monomial":
        return cls((v, 1) for v in support)

    @classmethod
    def from_vector(cls, vec: Iterable[int], variables: Iterable[int]) -> "Monomial":
        return cls(zip(variables, vec))

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Inverse of ``str``: ``"x1*x5^2"`` -> Monomial."""
        text = text.strip()
        if text == "1":
            return cls()
        exps = []
        for factor in text.split("*"):
            factor = factor.strip()
            if not factor.startswith("x"):
                raise ValueError(f"bad monomial factor {factor!r}")
            var, _, e = factor[1:].partition("^")
            exps.append((int(var), int(e) if e else 1))
        return cls(exps)

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._exps)

    def exponent(self, var: int) -> int:
        return self._exps.get(var, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._exps)

    @property
    def degree(self) -> int:
        return sum(self._exps.values())

    def is_squarefree(self) -> bool:
        return all(e == 1 for e in self._exps.values())

    def is_one(self) -> bool:
        return not self._exps

    def lex_key(self) -> tuple[int, ...]:
        """Dense exponent vector up to the largest variable.

        Comparing these tuples with Python's ordering is exactly lex order
        with ``x1 > x2 > ...`` (the last entry is always nonzero).
        """
        if not self._exps:
            return ()
        top = next(reversed(self._exps))
        return tuple(self._exps.get(i, 0) for i in range(1, top + 1))

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = dict(self._exps)
        for v, e in other._exps.items():
            exps[v] = exps.get(v, 0) + e
        return Monomial(exps)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial({v: e * k for v, e in self._exps.items()})

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial({v: e - other.exponent(v) for v, e in self._exps.items()})

    def divides(self, other: "Monomial") -> bool:
        oe = other._exps
        return all(oe.get(v, 0) >= e for v, e in self._exps.items())

    def gcd(self, other: "Monomial") -> "Monomial":
        oe = other._exps
        return Monomial({v: min(e, oe[v]) for v, e in self._exps.items() if v in oe})

    def lcm(self, other: "Monomial") -> "Monomial":
        exps = dict(self._exps)
        for v, e in other._exps.items():
            if e > exps.get(v, 0):
                exps[v] = e
        return Monomial(exps)

    def quotient(self, other: "Monomial") -> "Monomial":
        """``self / gcd(self, other)``."""
        oe = other._exps
        return Monomial({v: e - oe.get(v, 0) for v, e in self._exps.items() if e > oe.get(v, 0)})

    def radical(self) -> "Monomial":
        return Monomial.from_support(self._exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return self.lex_key() < other.lex_key()

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self._exps.items())

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Return 1 if u > v, -1 if u < v and 0 if equal, in lex with x1 > x2 > ..."""
    ku, kv = u.lex_key(), v.lex_key()
    return (ku > kv) - (ku < kv)


def divides(u: Monomial, v: Monomial) -> bool:
    return u.divides(v)


def _minimal(gens: Iterable[Monomial]) -> list[Monomial]:
    # degree-ascending sweep: a generator can only be divided by one of
    # smaller or equal degree that is already kept
    uniq = sorted(set(gens), key=lambda m: m.degree)
    kept: list[Monomial] = []
    for g in uniq:
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    kept.sort(key=Monomial.lex_key, reverse=True)
    return kept


class MonomialIdeal:
    """Monomial ideal held as its minimal generating set, lex-descending.

    The zero ideal has no generators; the unit ideal is generated by ``1``.
    Equality compares the canonical generator tuples.
    """

    __slots__ = ("_gens", "_hash")

    def __init__(self, gens: Iterable[Monomial] = (), *, minimal: bool = False):
        gens = list(gens)
        if minimal:
            gens = sorted(set(gens), key=Monomial.lex_key, reverse=True)
        else:
            gens = _minimal(gens)
        self._gens = tuple(gens)
        self._hash = hash(self._gens)

    @classmethod
    def unit(cls) -> "MonomialIdeal":
        return cls([Monomial.one()], minimal=True)

    @classmethod
    def zero(cls) -> "MonomialIdeal":
        return cls([], minimal=True)

    @classmethod
    def parse(cls, texts: Iterable[str]) -> "MonomialIdeal":
        return cls(Monomial.parse(t) for t in texts)

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return self._gens

    def __len__(self) -> int:
        return len(self._gens)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._gens)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialIdeal) and self._gens == other._gens

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MonomialIdeal({[str(g) for g in self._gens]})"

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self._gens) + ")"

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        return len(self._gens) == 1 and self._gens[0].is_one()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self._gens)

    def is_principal(self) -> bool:
        return len(self._gens) == 1

    def degrees(self) -> set[int]:
        return {g.degree for g in self._gens}

    def support(self) -> tuple[int, ...]:
        return tuple(sorted({v for g in self._gens for v in g.support}))

    def lcm(self) -> Monomial:
        return reduce(Monomial.lcm, self._gens, Monomial.one())

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self._gens)

    __contains__ = contains

    def is_subideal_of(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self._gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self._gens + other._gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(g * h for g in self._gens for h in other._gens)

    def scale(self, h: Monomial) -> "MonomialIdeal":
        return MonomialIdeal((g * h for g in self._gens), minimal=True)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(g.lcm(h) for g in self._gens for h in other._gens)

    def colon(self, m: Monomial) -> "MonomialIdeal":
        return colon_by_monomial(self, m)

    def localize(self, variables: Iterable[int]) -> "MonomialIdeal":
        """Set every variable outside ``variables`` to 1."""
        keep = set(variables)
        return MonomialIdeal(Monomial((v, e) for v, e in g.exponents.items() if v in keep)
                             for g in self._gens)

    def without_variable(self, var: int) -> "MonomialIdeal":
        """Deletion ideal: the generators not divisible by ``x_var``."""
        return MonomialIdeal((g for g in self._gens if g.exponent(var) == 0), minimal=True)


def minimalize(gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(gens)


def colon_by_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    if I.is_zero():
        return I
    return MonomialIdeal(g.quotient(m) for g in I.gens)


def intersect_all(ideals: Iterable[MonomialIdeal], budget: Budget = DEFAULT_BUDGET) -> MonomialIdeal:
    acc: MonomialIdeal | None = None
    for J in ideals:
        if acc is None:
            acc = J
            continue
        budget.check_generators(len(acc) * len(J), "intersection")
        acc = acc.intersect(J)
    if acc is None:
        raise ValueError("empty intersection")
    return acc


def colon_by_ideal(I: MonomialIdeal, J: MonomialIdeal,
                   budget: Budget = DEFAULT_BUDGET) -> MonomialIdeal:
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    return intersect_all((colon_by_monomial(I, g) for g in J.gens), budget)


def power(I: MonomialIdeal, k: int, budget: Budget = DEFAULT_BUDGET) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    if k == 0:
        return MonomialIdeal.unit()
    if k == 1:
        return I
    from math import comb
    budget.check_generators(comb(len(I) + k - 1, k), f"I^{k}")
    return MonomialIdeal(reduce(Monomial.__mul__, combo)
                         for combo in combinations_with_replacement(I.gens, k))


# ---------------------------------------------------------------- decomposition

IrreducibleComponent = dict  # variable -> exponent of the pure power


def _component_key(comp: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(comp.items()))


def _component_contains(big: Mapping[int, int], small: Mapping[int, int]) -> bool:
    # m^small ⊆ m^big  iff every pure power of m^small lies in m^big
    return all(v in big and big[v] <= e for v, e in small.items())


def irreducible_decomposition(I: MonomialIdeal, budget: Budget = DEFAULT_BUDGET,
                              method: str = "dual") -> list[dict[int, int]]:
    """Irredundant irreducible decomposition of a proper nonzero monomial ideal.

    Each component is returned as ``{variable: exponent}`` standing for the
    ideal ``(x_v^e : v)``.  ``method="split"`` uses the generator splitting
    recursion ``(I + x_a^e) ∩ (I + w)``; ``method="dual"`` intersects the
    Alexander dual irreducibles incrementally, which is much faster on powers.
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("irreducible decomposition needs a proper nonzero ideal")
    if method == "split":
        comps = _split_components(I, budget)
    elif method == "dual":
        comps = _dual_components(I, budget)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _irredundant(comps)


def _irredundant(comps: Iterable[Mapping[int, int]]) -> list[dict[int, int]]:
    uniq = {_component_key(c): dict(c) for c in comps}
    items = list(uniq.values())
    # a component is redundant iff it contains another one
    kept = [c for c in items
            if not any(k is not c and _component_contains(c, k) for k in items)]
    return sorted(kept, key=_component_key)


def _split_components(I: MonomialIdeal, budget: Budget) -> list[dict[int, int]]:
    memo: dict[MonomialIdeal, frozenset] = {}
    nodes = 0

    def rec(J: MonomialIdeal) -> frozenset:
        nonlocal nodes
        if J in memo:
            return memo[J]
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExceeded(f"decomposition exceeded {budget.max_nodes} nodes")
        mixed = [g for g in J.gens if len(g.support) > 1]
        if not mixed:
            out = frozenset([_component_key({g.support[0]: g.degree for g in J.gens})])
        else:
            g = max(mixed, key=lambda m: (m.degree, m.lex_key()))
            a = g.support[0]
            pure = Monomial({a: g.exponent(a)})
            rest = g / pure
            out = rec(J + MonomialIdeal([pure])) | rec(J + MonomialIdeal([rest]))
        memo[J] = out
        return out

    return [dict(k) for k in rec(I)]


def _dual_components(I: MonomialIdeal, budget: Budget) -> list[dict[int, int]]:
    # I^[a] = ∩_{x^b ∈ G(I)} m^{a∖b}; its generators x^c give components m^{a∖c}
    a = I.lcm().exponents
    dual = MonomialIdeal.unit()
    for g in sorted(I.gens, key=lambda m: m.degree):
        pure = [Monomial({v: a[v] + 1 - e}) for v, e in g.exponents.items()]
        new = []
        for h in dual.gens:
            if any(p.divides(h) for p in pure):
                new.append(h)
            else:
                new.extend(h.lcm(p) for p in pure)
        budget.check_generators(len(new), "Alexander dual")
        dual = MonomialIdeal(new)
    return [{v: a[v] + 1 - c for v, c in h.exponents.items()} for h in dual.gens]


def components_intersection(comps: Iterable[Mapping[int, int]]) -> MonomialIdeal:
    return intersect_all(MonomialIdeal(Monomial({v: e}) for v, e in c.items()) for c in comps)


def associated_primes(I: MonomialIdeal, budget: Budget = DEFAULT_BUDGET,
                      method: str = "dual") -> list[frozenset[int]]:
    """Radicals of the irredundant irreducible components, deduplicated."""
    comps = irreducible_decomposition(I, budget, method=method)
    return sort_primes({frozenset(c) for c in comps})


def minimal_primes(primes: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    ps = set(primes)
    return sort_primes(p for p in ps if not any(q < p for q in ps))


def sort_primes(primes: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(set(primes), key=lambda p: (len(p), sorted(p)))


def prime_str(p: Iterable[int]) -> str:
    return "(" + ",".join(f"x{v}" for v in sorted(p)) + ")"
