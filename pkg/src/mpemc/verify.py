from __future__ import annotations

from dataclasses import dataclass, field

from .instance import Instance, Solution


@dataclass
class NodeCheck:
    node: int
    degree: int
    requirement: int
    claimed_power: int | None
    power: int


@dataclass
class VerifyReport:
    nodes: list[NodeCheck] = field(default_factory=list)
    claimed_total: int | None = None
    total: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        lines = ["node degree required power"]
        for row in self.nodes:
            lines.append(f"{row.node} {row.degree} {row.requirement} {row.power}")
        lines.append(f"total power {self.total}")
        lines += [f"VIOLATION: {v}" for v in self.violations]
        lines.append("OK" if self.ok else f"FAILED ({len(self.violations)} violations)")
        return "\n".join(lines)


def verify(inst: Instance, sol: Solution) -> VerifyReport:
    """Recompute degrees and powers of ``sol`` and flag every discrepancy."""
    report = VerifyReport(claimed_total=sol.total)
    bad = sorted(i for i in sol.chosen if not 0 <= i < len(inst.edges))
    if bad:
        report.violations.append(f"edge references not in instance: {bad}")
    deg = [0] * inst.n
    power = [0] * inst.n
    for i in sol.chosen:
        if i in bad:
            continue
        u, v, c = inst.edges[i]
        deg[u] += 1
        deg[v] += 1
        power[u] = max(power[u], c)
        power[v] = max(power[v], c)
    claimed = list(sol.power) if len(sol.power) == inst.n else None
    if claimed is None:
        report.violations.append(f"power vector has {len(sol.power)} entries for {inst.n} nodes")
    for v in inst.nodes:
        r = inst.requirements[v]
        report.nodes.append(NodeCheck(v, deg[v], r, claimed[v] if claimed else None, power[v]))
        if deg[v] < r:
            report.violations.append(f"node {v}: degree {deg[v]} below requirement {r}")
        if claimed is not None and claimed[v] != power[v]:
            report.violations.append(f"node {v}: power mismatch, claimed {claimed[v]}, actual {power[v]}")
    report.total = sum(power)
    if sol.total != report.total:
        report.violations.append(f"total power mismatch, claimed {sol.total}, actual {report.total}")
    return report
