"""Complete t-spread d-partite hypergraphs and their edge ideals."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from itertools import product
from pathlib import Path
from typing import Any, Iterable, Sequence

from .monomials import Budget, BudgetExceeded, DEFAULT_BUDGET, Monomial, MonomialIdeal


class InstanceError(ValueError):
    """Malformed instance data (bad parts, bad spread vector, bad JSON)."""


class DegenerateInstance(InstanceError):
    """The instance has no t-spread edges at all."""


@dataclass(frozen=True)
class PartitionFamily:
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.parts:
            raise InstanceError("need at least one part")
        prev_max = 0
        for j, part in enumerate(self.parts, 1):
            if not part:
                raise InstanceError(f"part V{j} is empty")
            if any(b <= a for a, b in zip(part, part[1:])):
                raise InstanceError(f"part V{j} is not strictly increasing: {list(part)}")
            if part[0] < 1:
                raise InstanceError(f"part V{j} has a non-positive vertex")
            if part[0] <= prev_max:
                raise InstanceError(f"part V{j} does not lie above V{j - 1}")
            prev_max = part[-1]

    @classmethod
    def from_intervals(cls, intervals: Iterable[tuple[int, int]]) -> "PartitionFamily":
        """Parts ``[a, b]`` given by inclusive endpoints."""
        return cls(tuple(tuple(range(a, b + 1)) for a, b in intervals))

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def interval_form(self) -> bool:
        return all(p[-1] - p[0] + 1 == len(p) for p in self.parts)

    def intervals(self) -> list[tuple[int, int]]:
        """``(i_j, n_j)`` per part; only meaningful in interval form."""
        if not self.interval_form:
            raise InstanceError("parts are not intervals")
        return [(p[0], len(p)) for p in self.parts]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for p in self.parts for v in p)


@dataclass(frozen=True)
class SpreadInstance:
    partition: PartitionFamily
    t: tuple[int, ...]
    pruned: bool = False
    removed: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.t) != self.partition.d - 1:
            raise InstanceError(
                f"spread vector has {len(self.t)} entries, expected {self.partition.d - 1}")
        if any(ti < 1 for ti in self.t):
            raise InstanceError(f"spread entries must be >= 1, got {list(self.t)}")

    @classmethod
    def from_parts(cls, parts: Sequence[Sequence[int]], t: Sequence[int]) -> "SpreadInstance":
        return cls(PartitionFamily(tuple(tuple(p) for p in parts)), tuple(t))

    @classmethod
    def from_intervals(cls, intervals: Sequence[tuple[int, int]], t: Sequence[int]) -> "SpreadInstance":
        return cls(PartitionFamily.from_intervals(intervals), tuple(t))

    @property
    def parts(self) -> tuple[tuple[int, ...], ...]:
        return self.partition.parts

    @property
    def d(self) -> int:
        return self.partition.d

    @property
    def interval_form(self) -> bool:
        return self.partition.interval_form

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.partition.vertices

    def is_spread_edge(self, edge: Sequence[int]) -> bool:
        """One vertex per part, consecutive gaps at least t, checked literally."""
        if len(edge) != self.d:
            return False
        if any(v not in part for v, part in zip(edge, self.parts)):
            return False
        return all(edge[j] - edge[j - 1] >= self.t[j - 1] for j in range(1, self.d))

    def to_json(self) -> dict[str, Any]:
        if self.interval_form:
            parts: list = [[p[0], p[-1]] for p in self.parts]
            return {"parts": parts, "t": list(self.t)}
        return {"explicit_parts": [list(p) for p in self.parts], "t": list(self.t)}


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]

    @property
    def empty(self) -> bool:
        return not self.edges

    def covered_vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}


def enumerate_edges(instance: SpreadInstance) -> Hypergraph:
    """All t-spread transversals, by depth-first search over the parts.

    Output is lexicographic on the index tuples.
    """
    parts, t, d = instance.parts, instance.t, instance.d
    edges: list[tuple[int, ...]] = []
    stack: list[int] = []

    def dfs(j: int, lower: int) -> None:
        if j == d:
            edges.append(tuple(stack))
            return
        for v in parts[j]:
            if v < lower:
                continue
            stack.append(v)
            dfs(j + 1, v + t[j] if j < d - 1 else 0)
            stack.pop()

    dfs(0, 0)
    return Hypergraph(instance.vertices, tuple(edges))


def brute_force_edges(instance: SpreadInstance) -> list[tuple[int, ...]]:
    """Filter every transversal tuple by the spread condition; test oracle."""
    return sorted(e for e in product(*instance.parts) if instance.is_spread_edge(e))


def prune_isolated(h: Hypergraph, instance: SpreadInstance) -> tuple[SpreadInstance, list[int]]:
    if h.empty:
        raise DegenerateInstance("instance has no t-spread edges")
    covered = h.covered_vertices()
    removed = [v for v in instance.vertices if v not in covered]
    parts = tuple(tuple(v for v in p if v in covered) for p in instance.parts)
    # parts cannot become empty while an edge exists
    new = SpreadInstance(PartitionFamily(parts), instance.t, pruned=True,
                         removed=tuple(instance.removed) + tuple(removed))
    return new, removed


def prepare(instance: SpreadInstance) -> tuple[SpreadInstance, Hypergraph]:
    """Enumerate edges and prune isolated vertices; the usual entry point."""
    h = enumerate_edges(instance)
    pruned, _ = prune_isolated(h, instance)
    return pruned, Hypergraph(pruned.vertices, h.edges)


def edge_ideal(h: Hypergraph) -> MonomialIdeal:
    if h.empty:
        raise DegenerateInstance("edge ideal of an empty hypergraph")
    return MonomialIdeal((Monomial.from_support(e) for e in h.edges), minimal=True)


def maximum_matching(h: Hypergraph, budget: Budget = DEFAULT_BUDGET
                     ) -> tuple[int, list[tuple[int, ...]]]:
    """Exact maximum matching by branch and bound; returns (size, witness)."""
    if h.empty:
        raise DegenerateInstance("matching of an empty hypergraph")
    edges = [frozenset(e) for e in h.edges]
    d = max(len(e) for e in edges)
    best: list[int] = []
    nodes = 0

    def search(start: int, used: frozenset, chosen: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget.max_nodes:
            raise BudgetExceeded("matching search exceeded node budget")
        if len(chosen) > len(best):
            best = list(chosen)
        free = len(h.vertices) - len(used)
        if len(chosen) + free // d <= len(best):
            return
        for i in range(start, len(edges)):
            if edges[i] & used:
                continue
            chosen.append(i)
            search(i + 1, used | edges[i], chosen)
            chosen.pop()

    search(0, frozenset(), [])
    return len(best), [h.edges[i] for i in best]


def diagonal_matching(instance: SpreadInstance) -> list[tuple[int, ...]]:
    """The shifted diagonals {i_1+s, ..., i_d+s} for s < min n_j (interval parts)."""
    starts = [p[0] for p in instance.parts]
    m = min(len(p) for p in instance.parts)
    return [tuple(i + s for i in starts) for s in range(m)]


# ------------------------------------------------------------------ JSON I/O

def instance_from_json(data: dict[str, Any]) -> SpreadInstance:
    """Accepts interval pairs ``[a, b]`` / ``{"from": a, "to": b}`` under
    ``parts`` or explicit vertex lists under ``explicit_parts``."""
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    if "t" not in data:
        raise InstanceError("missing spread vector 't'")
    try:
        t = tuple(int(x) for x in data["t"])
        if "explicit_parts" in data:
            parts = tuple(tuple(int(v) for v in p) for p in data["explicit_parts"])
        elif "parts" in data:
            parts = []
            for p in data["parts"]:
                if isinstance(p, dict):
                    a, b = int(p["from"]), int(p["to"])
                else:
                    a, b = (int(x) for x in p)
                if b < a:
                    raise InstanceError(f"empty interval [{a}, {b}]")
                parts.append(tuple(range(a, b + 1)))
            parts = tuple(parts)
        else:
            raise InstanceError("missing 'parts' or 'explicit_parts'")
    except (TypeError, KeyError, ValueError) as exc:
        if isinstance(exc, InstanceError):
            raise
        raise InstanceError(f"malformed instance: {exc}") from exc
    return SpreadInstance(PartitionFamily(parts), t)


def load_instance(path: str | Path) -> SpreadInstance:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: {exc}") from exc
    return instance_from_json(data)


def with_parts(instance: SpreadInstance, parts: Sequence[Sequence[int]]) -> SpreadInstance:
    return replace(instance, partition=PartitionFamily(tuple(tuple(p) for p in parts)),
                   pruned=False, removed=())
