"""Exhaustive exact solvers used as ground truth at small sizes."""

from __future__ import annotations

from typing import Iterable, Sequence

from .bipartite import BipartiteInstance
from .coverage import coverage_value
from .instance import Edge, Instance, InvalidInstanceError, Solution, check_instance, power_profile
from .restricted import PowerAssignment, RestrictedInstance, induced_edges, node_powers

DEFAULT_LIMIT = 16


class OracleLimitError(ValueError):
    pass


def _min_power_search(
    n: int, edges: Sequence[Edge], need: Sequence[int], floor: Sequence[int]
) -> tuple[int, frozenset[int]] | None:
    """Minimise sum_v max(p_F(v), floor_v) over F with d_F(v) >= need_v.

    Depth-first include/exclude over edges in decreasing cost. A branch is cut
    when its power bound reaches the incumbent or some node can no longer
    reach its degree. Edges already paid for at both ends are always taken.
    """
    order = sorted(range(len(edges)), key=lambda i: (-edges[i][2], i))
    # any feasible F pays at least the need-th cheapest incident cost at v
    inc_costs: list[list[int]] = [[] for _ in range(n)]
    for u, v, c in edges:
        inc_costs[u].append(c)
        inc_costs[v].append(c)
    low = []
    for v in range(n):
        if need[v] > len(inc_costs[v]):
            return None
        req = sorted(inc_costs[v])[need[v] - 1] if need[v] else 0
        low.append(max(req, floor[v]))
    remaining = [len(c) for c in inc_costs]
    deg = [0] * n
    power = [0] * n
    unmet = sum(1 for v in range(n) if need[v] > 0)
    best_value = sum(max(len(c) and max(c), f) for c, f in zip(inc_costs, floor)) + 1
    best: list[int] | None = None
    chosen: list[int] = []

    def bound() -> int:
        return sum(max(p, b) for p, b in zip(power, low))

    def dfs(pos: int, unmet: int) -> None:
        nonlocal best_value, best
        value = bound()
        if value >= best_value:
            return
        if unmet == 0:
            best_value = value
            best = list(chosen)
            return
        if pos == len(order):
            return
        i = order[pos]
        u, v, c = edges[i]
        remaining[u] -= 1
        remaining[v] -= 1

        old_u, old_v = power[u], power[v]
        deg[u] += 1
        deg[v] += 1
        power[u] = max(old_u, c)
        power[v] = max(old_v, c)
        chosen.append(i)
        met = (deg[u] == need[u]) + (deg[v] == need[v])
        dfs(pos + 1, unmet - met)
        chosen.pop()
        deg[u] -= 1
        deg[v] -= 1
        power[u], power[v] = old_u, old_v

        free = c <= old_u and c <= old_v
        if not free and deg[u] + remaining[u] >= need[u] and deg[v] + remaining[v] >= need[v]:
            dfs(pos + 1, unmet)
        remaining[u] += 1
        remaining[v] += 1

    dfs(0, unmet)
    if best is None:
        return None
    return best_value, frozenset(best)


def exact_mpemc(inst: Instance, limit: int = DEFAULT_LIMIT) -> Solution:
    """Minimum-power r-edge cover by exhaustive search (|E| <= limit)."""
    if len(inst.edges) > limit:
        raise OracleLimitError(f"{len(inst.edges)} edges exceeds the oracle limit {limit}")
    check_instance(inst)
    found = _min_power_search(inst.n, inst.edges, inst.requirements, [0] * inst.n)
    if found is None:
        raise InvalidInstanceError(["no r-edge cover exists"])
    value, edge_set = found
    sol = power_profile(inst, edge_set)
    assert sol.total == value
    return sol


def exact_restricted(ri: RestrictedInstance, limit: int = DEFAULT_LIMIT) -> PowerAssignment:
    """Minimise sum_v max(p_F(v), lower_v) over F covering the targets."""
    if len(ri.edges) > limit:
        raise OracleLimitError(f"{len(ri.edges)} edges exceeds the oracle limit {limit}")
    need = [1 if v in ri.targets else 0 for v in range(ri.n)]
    found = _min_power_search(ri.n, ri.edges, need, ri.lower)
    if found is None:
        raise InvalidInstanceError(["some target node has no incident edge"])
    value, edge_set = found
    power = tuple(max(p, low) for p, low in zip(node_powers(ri.n, ri.edges, edge_set), ri.lower))
    assert sum(power) == value
    return PowerAssignment(power, induced_edges(ri.edges, power), value, edge_set)


def exact_bpbmem(
    bip: BipartiteInstance,
    w: Sequence[int],
    r: Sequence[int],
    candidates: Iterable[int],
    budget: int,
    limit: int = DEFAULT_LIMIT,
) -> frozenset[int]:
    """Best coverage value over all candidate subsets with p_I(A) <= budget."""
    cand = sorted(set(candidates))
    if len(cand) > limit:
        raise OracleLimitError(f"{len(cand)} candidates exceeds the oracle limit {limit}")
    best_value = -1
    best: frozenset[int] = frozenset()
    for mask in range(1 << len(cand)):
        subset = [cand[j] for j in range(len(cand)) if mask >> j & 1]
        if bip.power_a(subset) > budget:
            continue
        value = coverage_value(bip, w, r, subset)
        if value > best_value:
            best_value = value
            best = frozenset(subset)
    return best
