"""Restricted minimum-power edge cover via an auxiliary min-cost edge cover.

Given target nodes ``U`` with power lower bounds ``lower``, find node powers
``pi >= lower`` on ``U`` whose induced edge set ``{uv : pi(u), pi(v) >= c(uv)}``
touches every node of ``U``, minimising the total power. An auxiliary
multigraph on ``U`` is built whose edges stand for one or two original edges,
priced by their lower bounds plus the extra power they force. Its exact
min-cost edge cover maps back to a power assignment within 3/2 of optimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .edge_cover import min_cost_edge_cover
from .instance import Edge

LOOP, DIRECT, PATH = 1, 2, 3


class InfeasibleTargetError(ValueError):
    pass


@dataclass(frozen=True)
class RestrictedInstance:
    n: int
    edges: tuple[Edge, ...]
    targets: frozenset[int]
    lower: tuple[int, ...]

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]],
        targets: Iterable[int],
        lower: Mapping[int, int] | Sequence[int] = (),
    ):
        targets = frozenset(targets)
        if isinstance(lower, Mapping):
            bounds = [lower.get(v, 0) if v in targets else 0 for v in range(n)]
        else:
            given = list(lower) or [0] * n
            bounds = [given[v] if v in targets else 0 for v in range(n)]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple((int(u), int(v), int(c)) for u, v, c in edges))
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "lower", tuple(bounds))


@dataclass(frozen=True)
class CoverEdge:
    kind: int
    u: int
    v: int
    cost: int
    origin: tuple[int, ...]


@dataclass(frozen=True)
class CoverGraph:
    nodes: tuple[int, ...]
    edges: tuple[CoverEdge, ...]

    def multigraph(self) -> list[tuple[int, int, int]]:
        pos = {v: i for i, v in enumerate(self.nodes)}
        return [(pos[e.u], pos[e.v], e.cost) for e in self.edges]


@dataclass(frozen=True)
class PowerAssignment:
    power: tuple[int, ...]
    induced: frozenset[int]
    total: int
    base_edges: frozenset[int]
    cover_cost: int | None = None


def node_powers(n: int, edges: Sequence[Edge], edge_set: Iterable[int]) -> list[int]:
    power = [0] * n
    for i in edge_set:
        u, v, c = edges[i]
        power[u] = max(power[u], c)
        power[v] = max(power[v], c)
    return power


def deficiency(ri: RestrictedInstance, edge_set: Iterable[int]) -> int:
    """Total power above the lower bounds: sum_v max(p_I(v) - lower_v, 0)."""
    power = node_powers(ri.n, ri.edges, edge_set)
    return sum(max(p - low, 0) for p, low in zip(power, ri.lower))


def induced_edges(edges: Sequence[Edge], power: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, (u, v, c) in enumerate(edges) if power[u] >= c and power[v] >= c)


def normalize(ri: RestrictedInstance) -> RestrictedInstance:
    """Raise every target's bound to at least its cheapest incident cost.

    Loss-free: a feasible assignment already pays that much at each target.
    """
    cheapest: dict[int, int] = {}
    for u, v, c in ri.edges:
        for x in (u, v):
            if x not in cheapest or c < cheapest[x]:
                cheapest[x] = c
    missing = sorted(v for v in ri.targets if v not in cheapest)
    if missing:
        raise InfeasibleTargetError(f"target nodes without incident edges: {missing}")
    lower = [max(low, cheapest[v]) if v in ri.targets else 0 for v, low in enumerate(ri.lower)]
    return RestrictedInstance(ri.n, ri.edges, ri.targets, lower)


def build_cover_graph(ri: RestrictedInstance) -> CoverGraph:
    ri = normalize(ri)
    U = ri.targets
    low = ri.lower
    incident: list[list[int]] = [[] for _ in range(ri.n)]
    for i, (u, v, _) in enumerate(ri.edges):
        incident[u].append(i)
        incident[v].append(i)

    out: list[CoverEdge] = []
    for v in sorted(U):
        e = min(incident[v], key=lambda i: (ri.edges[i][2], i))
        out.append(CoverEdge(LOOP, v, v, low[v] + deficiency(ri, (e,)), (e,)))
    for i, (u, v, _) in enumerate(ri.edges):
        if u in U and v in U:
            a, b = min(u, v), max(u, v)
            out.append(CoverEdge(DIRECT, a, b, low[u] + low[v] + deficiency(ri, (i,)), (i,)))

    paths: dict[tuple[int, int], CoverEdge] = {}
    for x in range(ri.n):
        for s, i in enumerate(incident[x]):
            u = _other(ri.edges[i], x)
            if u not in U:
                continue
            for j in incident[x][s + 1 :]:
                v = _other(ri.edges[j], x)
                if v not in U or v == u:
                    continue
                key = (min(u, v), max(u, v))
                cost = low[u] + low[v] + deficiency(ri, (i, j))
                if key not in paths or cost < paths[key].cost:
                    paths[key] = CoverEdge(PATH, key[0], key[1], cost, (i, j))
    out.extend(paths[key] for key in sorted(paths))
    return CoverGraph(tuple(sorted(U)), tuple(out))


def _other(edge: Edge, x: int) -> int:
    return edge[1] if edge[0] == x else edge[0]


def solve_restricted(ri: RestrictedInstance) -> PowerAssignment:
    """Power assignment within 3/2 of the optimum for the restricted problem."""
    ri = normalize(ri)
    if not ri.targets:
        power = ri.lower
        return PowerAssignment(power, induced_edges(ri.edges, power), sum(power), frozenset(), 0)
    graph = build_cover_graph(ri)
    cover = min_cost_edge_cover(len(graph.nodes), graph.multigraph())
    base = frozenset(i for k in cover.edges for i in graph.edges[k].origin)
    power = tuple(max(p, low) for p, low in zip(node_powers(ri.n, ri.edges, base), ri.lower))
    total = sum(power)
    assert total <= cover.cost
    induced = induced_edges(ri.edges, power)
    assert base <= induced
    return PowerAssignment(power, induced, total, base, cover.cost)
