"""Benchmark runner: solve seeded instances, compare against the oracle, check bounds.

A config is a JSON object, every key optional::

    {
      "algorithms": ["trivial", "logk", "khalf", "exact"],
      "gammas": [2],
      "seeds": {"start": 0, "count": 500},      # or an explicit list
      "family": {"n_min": 3, "n_max": 7, "p": 0.5, "max_cost": 10, "k": 3, "max_edges": 12},
      "oracle_limit": 16,
      "bipartite_oracle": false,
      "greedy_only": false
    }

Instance ``s<seed>`` has ``n = n_min + seed mod (n_max - n_min + 1)``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

from .bipartite import to_bipartite
from .generate import gen_random
from .instance import Instance, trivial_cover
from .khalf import solve_khalf
from .logk import logk_run
from .oracle import DEFAULT_LIMIT, exact_mpemc
from .verify import verify

ALGORITHMS = ("trivial", "logk", "khalf", "exact")

DEFAULT_FAMILY = {"n_min": 3, "n_max": 7, "p": 0.5, "max_cost": 10, "k": 3, "max_edges": 12}


@dataclass
class BenchRow:
    instance: str
    seed: int
    n: int
    m: int
    k: int
    algorithm: str
    power: int | None = None
    opt: int | None = None
    ratio: float | None = None
    tau: int | None = None
    opt_bipartite: int | None = None
    bound: str | None = None
    ok: bool = True
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0


@dataclass
class BenchReport:
    rows: list[BenchRow]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def to_jsonl(self, timing: bool = True) -> str:
        out = []
        for row in self.rows:
            doc = asdict(row)
            if not timing:
                del doc["elapsed"]
            out.append(json.dumps(doc, sort_keys=True))
        return "".join(line + "\n" for line in out)


def _seeds(spec: Any) -> list[int]:
    if spec is None:
        return []
    if isinstance(spec, dict):
        return list(range(spec.get("start", 0), spec.get("start", 0) + spec["count"]))
    return [int(s) for s in spec]


def bench_instance(seed: int, family: dict) -> Instance:
    fam = {**DEFAULT_FAMILY, **family}
    span = fam["n_max"] - fam["n_min"] + 1
    n = fam["n_min"] + seed % span
    return gen_random(seed, n, fam["p"], fam["max_cost"], fam["k"], fam.get("max_edges"))


def _variants(config: dict) -> list[tuple[str, str, Fraction | None]]:
    out = []
    for algo in config.get("algorithms", []):
        if algo not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algo!r}")
        if algo == "logk":
            for g in config.get("gammas", [2]):
                out.append((f"logk[gamma={g}]", algo, Fraction(str(g))))
        else:
            out.append((algo, algo, None))
    return sorted(out, key=lambda t: t[0])


def _run_seed(args: tuple[int, dict]) -> list[BenchRow]:
    seed, config = args
    inst = bench_instance(seed, config.get("family", {}))
    limit = config.get("oracle_limit", DEFAULT_LIMIT)
    m, k = len(inst.edges), inst.k
    opt = exact_mpemc(inst, limit).total if m <= limit else None
    opt_bip = None
    if config.get("bipartite_oracle") and 2 * m <= limit:
        opt_bip = exact_mpemc(to_bipartite(inst).flat, limit).total

    rows = []
    for label, algo, gamma in _variants(config):
        row = BenchRow(f"s{seed}", seed, inst.n, m, k, label, opt=opt)
        start = time.perf_counter()
        try:
            if algo == "trivial":
                sol = trivial_cover(inst)
                if opt is not None:
                    row.bound = f"<= {k + 1} * opt"
                    if sol.total > (k + 1) * opt:
                        row.failures.append("trivial bound (k+1)*opt violated")
            elif algo == "khalf":
                sol = solve_khalf(inst)
                if opt is not None:
                    row.bound = f"<= ({2 * k + 1}/2) * opt"
                    if 2 * sol.total > (2 * k + 1) * opt:
                        row.failures.append("(k+1/2)*opt bound violated")
            elif algo == "logk":
                run = logk_run(inst, gamma, greedy_only=config.get("greedy_only", False))
                sol = run.solution
                row.tau = run.tau
                row.opt_bipartite = opt_bip
                limit_power = 2 * run.power_bound
                row.bound = f"<= {limit_power}"
                if sol.total > limit_power:
                    row.failures.append("log-k power bound violated")
                if opt_bip is not None and run.tau > opt_bip:
                    row.failures.append("tau exceeds bipartite optimum")
            else:
                if m > limit:
                    raise ValueError(f"{m} edges exceeds the oracle limit {limit}")
                sol = exact_mpemc(inst, limit)
                row.bound = "== opt"
            row.elapsed = time.perf_counter() - start
            row.power = sol.total
            report = verify(inst, sol)
            row.failures += report.violations
            if opt is not None:
                row.ratio = round(sol.total / opt, 6) if opt else None
                if algo == "exact" and sol.total != opt:
                    row.failures.append("exact solver disagrees with the oracle")
                if sol.total < opt:
                    row.failures.append("power below the oracle optimum")
        except Exception as err:  # recorded per row; the run continues
            row.elapsed = time.perf_counter() - start
            row.failures.append(f"error: {type(err).__name__}: {err}")
        row.ok = not row.failures
        rows.append(row)
    return rows


def bench(config: dict, jobs: int = 1) -> BenchReport:
    """Run every configured algorithm on every seed; rows ordered by (instance, algorithm)."""
    work = [(seed, config) for seed in _seeds(config.get("seeds"))]
    if not work or not config.get("algorithms"):
        return BenchReport([])
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_run_seed, work))
    else:
        chunks = [_run_seed(item) for item in work]
    return BenchReport([row for chunk in chunks for row in chunk])
