"""Acceptance criteria 1-10, each checked at its stated tolerance.

Every criterion prints one ``ACCEPTANCE <n> PASS|FAIL`` line; the lines are
also repeated in the pytest terminal summary. Run standalone with
``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from decimal import ROUND_FLOOR, Decimal, getcontext
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import (  # noqa: E402
    brute_force_edge_cover,
    brute_force_matching,
    random_bipartite,
    random_multigraph,
    random_restricted,
    small_bipartite,
)
from mpemc.bench import bench, bench_instance  # noqa: E402
from mpemc.bipartite import to_bipartite  # noqa: E402
from mpemc.coverage import coverage_value, solve_bpbmem  # noqa: E402
from mpemc.edge_cover import min_cost_edge_cover  # noqa: E402
from mpemc.instance import deficiency_potential, trivial_cover  # noqa: E402
from mpemc.khalf import solve_khalf  # noqa: E402
from mpemc.logk import ReduceParams, completion, logk_run, reduce_step, round_count  # noqa: E402
from mpemc.matching import max_weight_matching  # noqa: E402
from mpemc.oracle import exact_bpbmem, exact_mpemc, exact_restricted  # noqa: E402
from mpemc.restricted import solve_restricted  # noqa: E402
from mpemc.verify import verify  # noqa: E402

pytestmark = pytest.mark.acceptance

SEEDS = range(500)
BIP_LIMIT = 24
RESULTS: dict[int, str] = {}


def _one_minus_inv_e_floor() -> Fraction:
    getcontext().prec = 60
    value = 1 - 1 / Decimal(1).exp()
    return Fraction(value.quantize(Decimal("1e-10"), rounding=ROUND_FLOOR))


FACTOR = _one_minus_inv_e_floor()


def record(number: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS[number] = line
    print(line)


class Suite:
    """Solutions and oracle values for the 500-instance feasibility suite."""

    def __init__(self):
        start = time.perf_counter()
        self.rows = []
        for seed in SEEDS:
            inst = bench_instance(seed, {})
            sols = {
                "trivial": trivial_cover(inst),
                "khalf": solve_khalf(inst),
                "exact": exact_mpemc(inst),
            }
            runs = {g: logk_run(inst, g) for g in (2, 4)}
            for g, run in runs.items():
                sols[f"logk[gamma={g}]"] = run.solution
            self.rows.append((seed, inst, sols, runs))
        self.elapsed = time.perf_counter() - start
        self.opt_bip = {}
        for seed, inst, _, _ in self.rows:
            if 2 * len(inst.edges) <= BIP_LIMIT:
                self.opt_bip[seed] = exact_mpemc(to_bipartite(inst).flat, BIP_LIMIT).total

    def opt(self, sols):
        return sols["exact"].total


@pytest.fixture(scope="module")
def suite():
    return Suite()


def test_criterion_1_feasibility(suite):
    family_ok = all(
        inst.n <= 7 and len(inst.edges) <= 12 and inst.k <= 3 and all(1 <= c <= 10 for *_, c in inst.edges)
        for _, inst, _, _ in suite.rows
    )
    start = time.perf_counter()
    bad = [
        (seed, name)
        for seed, inst, sols, _ in suite.rows
        for name, sol in sols.items()
        if not verify(inst, sol).ok
    ]
    elapsed = suite.elapsed + time.perf_counter() - start
    runs = sum(len(sols) for _, _, sols, _ in suite.rows)
    ok = family_ok and not bad and len(suite.rows) == 500 and elapsed < 60
    record(1, ok, f"{runs} solutions on {len(suite.rows)} instances, {len(bad)} verify failures, "
                  f"{elapsed:.1f}s (target < 60s)")
    assert ok, bad[:10]


def test_criterion_2_trivial_bound(suite):
    bad = [seed for seed, inst, sols, _ in suite.rows if sols["trivial"].total > (inst.k + 1) * suite.opt(sols)]
    worst = max(Fraction(s["trivial"].total, suite.opt(s)) for _, _, s, _ in suite.rows if suite.opt(s))
    record(2, not bad, f"trivial <= (k+1)*opt on {len(suite.rows)} instances, worst ratio {float(worst):.3f}")
    assert not bad


def test_criterion_3_khalf_bound(suite):
    bad = [seed for seed, inst, sols, _ in suite.rows if 2 * sols["khalf"].total > (2 * inst.k + 1) * suite.opt(sols)]
    worst = max(Fraction(s["khalf"].total, suite.opt(s)) for _, _, s, _ in suite.rows if suite.opt(s))
    record(3, not bad, f"2*khalf <= (2k+1)*opt on {len(suite.rows)} instances, worst ratio {float(worst):.3f}")
    assert not bad


def test_criterion_4_logk_bound(suite):
    bad = []
    for seed, inst, sols, runs in suite.rows:
        run = runs[2]
        params = ReduceParams.from_gamma(2)
        L = round_count(inst.k, params.theta)
        bound = 2 * (L * (1 + params.gamma) * run.tau + 2 * run.tau)
        if sols["logk[gamma=2]"].total > bound:
            bad.append((seed, "power"))
        if seed not in suite.opt_bip or run.tau > suite.opt_bip[seed]:
            bad.append((seed, "tau"))
    record(4, not bad, f"logk power bound and tau <= opt_bipartite on {len(suite.rows)} instances, "
                       f"{len(bad)} failures")
    assert not bad


def _bipartite_cases(count):
    """Bipartite images of seeded instances mixed with free-form bipartite graphs."""
    for seed in range(count):
        if seed % 2 == 0:
            yield small_bipartite(seed, max_edges=BIP_LIMIT)
        else:
            rng = random.Random(seed)
            yield random_bipartite(rng, rng.randint(1, 5), rng.randint(1, 5), rng.uniform(0.3, 0.9))


def _contract_at_opt(bip, params):
    """Run the full round schedule at tau = opt_bipartite; return (J, per-round failures)."""
    w = bip.thresholds()
    opt = exact_mpemc(bip.flat, BIP_LIMIT).total
    J = frozenset()
    failures = []
    for step in range(round_count(bip.k, params.theta)):
        before = deficiency_potential(w, bip.residual(J))
        found = reduce_step(bip, w, J, opt, params)
        if found is None:
            failures.append(f"round {step + 1}: tau too small")
            break
        J |= found
        if deficiency_potential(w, bip.residual(J)) > params.theta * before:
            failures.append(f"round {step + 1}: insufficient contraction")
    return opt, w, J, failures


def test_criterion_5_contraction():
    params = ReduceParams.from_gamma(2)
    bad = []
    cases = list(_bipartite_cases(200))
    for idx, bip in enumerate(cases):
        _, _, _, failures = _contract_at_opt(bip, params)
        bad += [(idx, f) for f in failures]
    record(5, not bad, f"reduce_step at tau=opt_bipartite on {len(cases)} bipartite instances, {len(bad)} failures")
    assert not bad, bad[:10]


def test_criterion_6_completion():
    params = ReduceParams.from_gamma(2)
    bad = []
    cases = list(_bipartite_cases(200))
    for idx, bip in enumerate(cases):
        opt, w, J, _ = _contract_at_opt(bip, params)
        for partial in (frozenset(), J):
            F = completion(bip, partial)
            potential = deficiency_potential(w, bip.residual(partial))
            if bip.power_b(F) > opt or bip.power_a(F) > potential:
                bad.append(idx)
    record(6, not bad, f"p_F(B) <= opt_bipartite and p_F(A) <= R_J on {len(cases)} bipartite instances")
    assert not bad


def test_criterion_7_bpbmem_factor():
    bad = []
    count = 0
    for seed in range(200):
        rng = random.Random(seed)
        bip = small_bipartite(seed) if seed % 2 == 0 else random_bipartite(rng, 3, 4, 0.8)
        w, r = bip.thresholds(), bip.requirements
        cand = [i for i in range(len(bip.edges)) if rng.random() < 0.9][:12]
        budget = rng.randint(0, 30)
        best = coverage_value(bip, w, r, exact_bpbmem(bip, w, r, cand, budget))
        found = solve_bpbmem(bip, w, r, cand, budget)
        got = coverage_value(bip, w, r, found)
        count += 1
        if got < FACTOR * best or bip.power_a(found) > budget or not found <= set(cand):
            bad.append(seed)
    record(7, not bad, f"val >= {FACTOR.numerator}/{FACTOR.denominator} * optimum on {count} instances")
    assert not bad


def test_criterion_8_matching_and_edge_cover():
    rng = random.Random(8)
    bad_matching = 0
    for _ in range(300):
        n = rng.randint(1, 10)
        edges = [(u, v, rng.randint(-3, 20)) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35]
        if max_weight_matching(edges).weight != brute_force_matching(edges):
            bad_matching += 1
    bad_cover = 0
    loops = 0
    graphs = 0
    while graphs < 300:
        n, edges, covered = random_multigraph(rng)
        if len(covered) < n:
            continue
        graphs += 1
        loops += any(u == v for u, v, _ in edges)
        if min_cost_edge_cover(n, edges).cost != brute_force_edge_cover(n, edges):
            bad_cover += 1
    ok = bad_matching == 0 and bad_cover == 0
    record(8, ok, f"matching 300 graphs ({bad_matching} mismatches), edge cover 300 multigraphs "
                  f"with {loops} containing loops ({bad_cover} mismatches)")
    assert ok


def test_criterion_9_restricted():
    rng = random.Random(9)
    bad = []
    for idx in range(300):
        ri = random_restricted(rng)
        pa = solve_restricted(ri)
        opt = exact_restricted(ri).total
        if 2 * pa.total > 3 * opt or pa.total > pa.cover_cost:
            bad.append(idx)
    record(9, not bad, f"2*sum(pi) <= 3*opt and sum(pi) <= cover cost on 300 instances")
    assert not bad


def test_criterion_10_determinism():
    config = {
        "algorithms": ["trivial", "logk", "khalf", "exact"],
        "gammas": [2, 4],
        "seeds": {"start": 0, "count": 100},
        "bipartite_oracle": True,
        "oracle_limit": BIP_LIMIT,
    }
    first = bench(config).to_jsonl(timing=False)
    second = bench(config).to_jsonl(timing=False)
    parallel = bench(config, jobs=2).to_jsonl(timing=False)
    ok = first == second == parallel and len(first.splitlines()) == 500
    record(10, ok, "bench report byte-identical across 2 serial runs and 1 parallel run (timing excluded)")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
