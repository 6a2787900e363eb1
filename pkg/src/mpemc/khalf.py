"""(k + 1/2)-approximation for minimum-power edge multi-cover.

Stage one solves the restricted cover problem on the nodes with positive
requirement, with every node's threshold cost as its power floor. Stage two
tops every node up with its cheapest unused edges.
"""

from __future__ import annotations

from .instance import Instance, Solution, check_instance, degrees, power_profile, threshold_costs
from .restricted import RestrictedInstance, solve_restricted


def solve_khalf(inst: Instance) -> Solution:
    check_instance(inst)
    if inst.k == 0:
        return power_profile(inst, ())
    w = threshold_costs(inst)
    targets = [v for v in inst.nodes if inst.requirements[v] >= 1]
    assignment = solve_restricted(RestrictedInstance(inst.n, inst.edges, targets, w))
    F = assignment.induced

    deg = degrees(inst, F)
    chosen = set(F)
    for v in inst.nodes:
        need = inst.requirements[v] - deg[v]
        if inst.requirements[v] >= 1:
            assert deg[v] >= 1
        if need <= 0:
            continue
        extra = inst.cheapest_incident(v, need, exclude=F)
        assert len(extra) == need
        assert all(inst.edges[i][2] <= w[v] for i in extra)
        chosen.update(extra)
    return power_profile(inst, chosen)
