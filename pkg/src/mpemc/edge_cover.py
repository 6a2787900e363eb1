"""Exact minimum-cost edge cover on multigraphs with loops."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .matching import max_weight_matching


class UncoverableNodeError(ValueError):
    def __init__(self, nodes: Sequence[int]):
        self.nodes = list(nodes)
        super().__init__(f"nodes without incident edges: {self.nodes}")


class EdgeCover(NamedTuple):
    edges: frozenset[int]
    cost: int


def min_cost_edge_cover(n: int, edges: Sequence[tuple[int, int, int]]) -> EdgeCover:
    """Cheapest edge set touching every node ``0..n-1``.

    ``edges`` holds ``(u, v, cost)`` with ``u == v`` for a loop; parallel edges
    are fine. Every node takes its cheapest incident edge unless a matching
    edge saves more: with ``m(u)`` the cheapest cost at ``u``, an edge ``uv``
    saves ``m(u) + m(v) - c(uv)``, and a maximum-weight matching on those
    savings gives the optimum. Ties resolve to the lowest edge index.
    """
    cheapest: list[int] = [-1] * n
    pair_best: dict[tuple[int, int], int] = {}
    for i, (u, v, c) in enumerate(edges):
        for x in {u, v}:
            if cheapest[x] == -1 or c < edges[cheapest[x]][2]:
                cheapest[x] = i
        if u != v:
            key = (min(u, v), max(u, v))
            if key not in pair_best or c < edges[pair_best[key]][2]:
                pair_best[key] = i
    missing = [x for x in range(n) if cheapest[x] == -1]
    if missing:
        raise UncoverableNodeError(missing)

    m = [edges[cheapest[x]][2] for x in range(n)]
    gains = []
    for (u, v), i in pair_best.items():
        gain = m[u] + m[v] - edges[i][2]
        if gain > 0:
            gains.append((u, v, gain))
    matching = max_weight_matching(gains)

    chosen = set()
    covered = [False] * n
    for u, v in matching.pairs:
        chosen.add(pair_best[(u, v)])
        covered[u] = covered[v] = True
    for x in range(n):
        if not covered[x]:
            chosen.add(cheapest[x])

    # zero-cost ties can leave redundant edges; dropping them keeps a star forest
    touches = [0] * n
    for i in chosen:
        for x in set(edges[i][:2]):
            touches[x] += 1
    for i in sorted(chosen, reverse=True):
        ends = set(edges[i][:2])
        if all(touches[x] > 1 for x in ends):
            chosen.discard(i)
            for x in ends:
                touches[x] -= 1
    cost = sum(edges[i][2] for i in chosen)
    assert cost <= sum(m) - matching.weight
    return EdgeCover(frozenset(chosen), cost)
