"""Two-copy bipartite reduction and map-back."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .instance import Instance, Solution, power_profile


@dataclass(frozen=True)
class BipartiteInstance:
    """Bipartite graph with requirements only on side B.

    ``edges[i] = (a, b, cost)`` with ``a`` indexing side A and ``b`` side B.
    ``origin[i]`` is the index of the original edge the bipartite edge came
    from, or -1 for instances built directly.
    """

    n_a: int
    n_b: int
    edges: tuple[tuple[int, int, int], ...]
    requirements: tuple[int, ...]
    origin: tuple[int, ...]

    @cached_property
    def flat(self) -> Instance:
        """Same graph as an ordinary instance: a -> a, b -> n_a + b."""
        return Instance(
            self.n_a + self.n_b,
            [(a, self.n_a + b, c) for a, b, c in self.edges],
            (0,) * self.n_a + self.requirements,
        )

    @cached_property
    def at_a(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.n_a)]
        for i, (a, _, _) in enumerate(self.edges):
            inc[a].append(i)
        return inc

    @cached_property
    def at_b(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.n_b)]
        for i, (_, b, _) in enumerate(self.edges):
            inc[b].append(i)
        return inc

    @property
    def k(self) -> int:
        return max(self.requirements, default=0)

    def thresholds(self) -> tuple[int, ...]:
        """w_b over side B: cost of the r(b)-th cheapest edge at b."""
        w = []
        for b in range(self.n_b):
            r = self.requirements[b]
            if r == 0:
                w.append(0)
                continue
            costs = sorted((self.edges[i][2], i) for i in self.at_b[b])
            w.append(costs[r - 1][0])
        return tuple(w)

    def degrees_b(self, edge_set: Iterable[int]) -> list[int]:
        deg = [0] * self.n_b
        for i in edge_set:
            deg[self.edges[i][1]] += 1
        return deg

    def residual(self, edge_set: Iterable[int]) -> tuple[int, ...]:
        deg = self.degrees_b(edge_set)
        return tuple(max(r - d, 0) for r, d in zip(self.requirements, deg))

    def power_a(self, edge_set: Iterable[int]) -> int:
        """p_I(A)."""
        best = [0] * self.n_a
        for i in edge_set:
            a, _, c = self.edges[i]
            best[a] = max(best[a], c)
        return sum(best)

    def power_b(self, edge_set: Iterable[int]) -> int:
        """p_I(B)."""
        best = [0] * self.n_b
        for i in edge_set:
            _, b, c = self.edges[i]
            best[b] = max(best[b], c)
        return sum(best)

    def power(self, edge_set: Iterable[int]) -> Solution:
        return power_profile(self.flat, edge_set)


def to_bipartite(inst: Instance) -> BipartiteInstance:
    """Edge ``i = uv`` becomes bipartite edges ``2i = a_u b_v`` and ``2i+1 = a_v b_u``."""
    edges = []
    origin = []
    for i, (u, v, c) in enumerate(inst.edges):
        edges.append((u, v, c))
        edges.append((v, u, c))
        origin.extend((i, i))
    return BipartiteInstance(inst.n, inst.n, tuple(edges), inst.requirements, tuple(origin))


def from_bipartite(bip_edges: Iterable[int], bip: BipartiteInstance) -> frozenset[int]:
    """Original edges having at least one chosen bipartite image."""
    return frozenset(bip.origin[i] for i in bip_edges)
