"""Instances, edge sets and the power objective.

Nodes are dense integers ``0..n-1``. Edge sets are referenced by edge index
into ``Instance.edges`` and passed around as frozensets of ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int, int]


class InvalidInstanceError(ValueError):
    """Raised when an instance breaks one of the validation rules."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Instance:
    """Undirected graph with integer edge costs and degree requirements."""

    n: int
    edges: tuple[Edge, ...]
    requirements: tuple[int, ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]], requirements: Iterable[int]):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple((int(u), int(v), int(c)) for u, v, c in edges))
        object.__setattr__(self, "requirements", tuple(int(r) for r in requirements))

    @property
    def nodes(self) -> range:
        return range(self.n)

    @property
    def k(self) -> int:
        return max(self.requirements, default=0)

    def incident(self) -> list[list[int]]:
        """Edge indices incident to each node, in index order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v, _) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return inc

    def cheapest_incident(self, v: int, count: int, exclude: frozenset[int] = frozenset()) -> list[int]:
        """The ``count`` cheapest edges at ``v`` outside ``exclude``, ties by index."""
        cand = [i for i, (a, b, _) in enumerate(self.edges) if v in (a, b) and i not in exclude]
        cand.sort(key=lambda i: (self.edges[i][2], i))
        return cand[:count]


@dataclass(frozen=True)
class Solution:
    chosen: frozenset[int]
    power: tuple[int, ...]
    total: int


def validate_instance(inst: Instance) -> list[str]:
    """Return the list of rule violations; an empty list means the instance is ok."""
    problems: list[str] = []
    if inst.n < 0:
        problems.append(f"node count {inst.n} is negative")
    if len(inst.requirements) != inst.n:
        problems.append(f"expected {inst.n} requirements, got {len(inst.requirements)}")
    seen: dict[tuple[int, int], int] = {}
    degree = [0] * max(inst.n, 0)
    for i, (u, v, c) in enumerate(inst.edges):
        if not (0 <= u < inst.n and 0 <= v < inst.n):
            problems.append(f"edge {i} ({u}, {v}): endpoint is not a node")
            continue
        if u == v:
            problems.append(f"edge {i} ({u}, {v}): self-loop")
            continue
        if c < 0:
            problems.append(f"edge {i} ({u}, {v}): negative cost {c}")
        key = (min(u, v), max(u, v))
        if key in seen:
            problems.append(f"edge {i} ({u}, {v}): duplicate edge (same pair as edge {seen[key]})")
            continue
        seen[key] = i
        degree[u] += 1
        degree[v] += 1
    for v, r in enumerate(inst.requirements[: max(inst.n, 0)]):
        if r < 0:
            problems.append(f"node {v}: negative requirement {r}")
        elif r > degree[v]:
            problems.append(f"node {v}: r(v)={r} exceeds degree {degree[v]}")
    return problems


def check_instance(inst: Instance) -> Instance:
    problems = validate_instance(inst)
    if problems:
        raise InvalidInstanceError(problems)
    return inst


def _check_refs(inst: Instance, edge_set: Iterable[int]) -> frozenset[int]:
    chosen = frozenset(edge_set)
    bad = [i for i in chosen if not 0 <= i < len(inst.edges)]
    if bad:
        raise ValueError(f"edge references not in instance: {sorted(bad)}")
    return chosen


def degrees(inst: Instance, edge_set: Iterable[int]) -> list[int]:
    deg = [0] * inst.n
    for i in _check_refs(inst, edge_set):
        u, v, _ = inst.edges[i]
        deg[u] += 1
        deg[v] += 1
    return deg


def power_profile(inst: Instance, edge_set: Iterable[int]) -> Solution:
    """Per-node power (max chosen incident cost, 0 if isolated) and total."""
    chosen = _check_refs(inst, edge_set)
    power = [0] * inst.n
    for i in chosen:
        u, v, c = inst.edges[i]
        if c > power[u]:
            power[u] = c
        if c > power[v]:
            power[v] = c
    return Solution(chosen, tuple(power), sum(power))


def residual_requirements(inst: Instance, edge_set: Iterable[int]) -> tuple[int, ...]:
    deg = degrees(inst, edge_set)
    return tuple(max(r - d, 0) for r, d in zip(inst.requirements, deg))


def threshold_costs(inst: Instance) -> tuple[int, ...]:
    """w_v: cost of the r(v)-th cheapest edge at v, or 0 when r(v) = 0."""
    inc = inst.incident()
    w = []
    for v in inst.nodes:
        r = inst.requirements[v]
        if r == 0:
            w.append(0)
            continue
        if r > len(inc[v]):
            raise InvalidInstanceError([f"node {v}: r(v)={r} exceeds degree {len(inc[v])}"])
        costs = sorted((inst.edges[i][2], i) for i in inc[v])
        w.append(costs[r - 1][0])
    return tuple(w)


def trivial_cover(inst: Instance) -> Solution:
    """Union over nodes of the r(v) cheapest incident edges."""
    inc = inst.incident()
    chosen: set[int] = set()
    for v in inst.nodes:
        ranked = sorted(inc[v], key=lambda i: (inst.edges[i][2], i))
        chosen.update(ranked[: inst.requirements[v]])
    return power_profile(inst, chosen)


def deficiency_potential(
    w: Sequence[int], residual: Sequence[int], nodes: Iterable[int] | None = None
) -> int:
    """Sum of w_b * r_J(b) over ``nodes`` (all indices when omitted)."""
    idx = range(len(w)) if nodes is None else nodes
    return sum(w[b] * residual[b] for b in idx)


def is_cover(inst: Instance, edge_set: Iterable[int]) -> bool:
    return all(d >= r for d, r in zip(degrees(inst, edge_set), inst.requirements))
