"""Logarithmic-in-k approximation for minimum-power edge multi-cover.

The instance is doubled into a bipartite one. For a guessed budget ``tau`` the
solver repeatedly buys an edge set of power at most ``(1 + gamma) * tau`` that
shrinks the deficiency potential ``R_J = sum_b w_b * r_J(b)`` by the factor
``theta``; after enough rounds the leftover requirements are finished off with
the cheapest edges at every B node. A binary search picks the least ``tau``
for which every round succeeds and the final potential is at most ``tau``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

from .bipartite import BipartiteInstance, from_bipartite, to_bipartite
from .coverage import solve_bpbmem
from .instance import (
    Instance,
    InvalidInstanceError,
    Solution,
    check_instance,
    deficiency_potential,
    power_profile,
    trivial_cover,
)

log = logging.getLogger(__name__)

THETA_DECIMALS = 10


@dataclass(frozen=True)
class ReduceParams:
    gamma: Fraction
    theta: Fraction

    @classmethod
    def from_gamma(cls, gamma: int | str | Fraction = 2) -> "ReduceParams":
        return cls(Fraction(gamma), contraction_factor(gamma))


@dataclass(frozen=True)
class TraceStep:
    tau: int
    round: int
    potential: int


@dataclass(frozen=True)
class LogKRun:
    solution: Solution
    tau: int
    params: ReduceParams
    rounds: int
    bipartite_edges: frozenset[int]
    bipartite_power: int
    trace: tuple[TraceStep, ...]

    @property
    def power_bound(self) -> Fraction:
        """``rounds * (1 + gamma) * tau + 2 * tau``, the bound on bipartite power."""
        return self.rounds * (1 + self.params.gamma) * self.tau + 2 * self.tau


def contraction_factor(gamma: int | str | Fraction) -> Fraction:
    """theta = 1 - (1 - 1/gamma)(1 - 1/e), rounded up at the 10th decimal."""
    g = Fraction(gamma)
    if g <= 1:
        raise ValueError(f"gamma must be > 1, got {gamma}")
    with localcontext() as ctx:
        ctx.prec = 60
        inv_e = Decimal(-1).exp()
        shrink = 1 - Decimal(g.denominator) / Decimal(g.numerator)
        theta = 1 - shrink * (1 - inv_e)
        theta = theta.quantize(Decimal(1).scaleb(-THETA_DECIMALS), rounding=ROUND_CEILING)
    return Fraction(theta)


def round_count(k: int, theta: Fraction) -> int:
    """ceil(log_{1/theta} k), computed exactly as the least L with k * theta^L <= 1."""
    rounds = 0
    scaled = Fraction(k)
    while scaled > 1:
        scaled *= theta
        rounds += 1
    return rounds


def cheap_edges(
    bip: BipartiteInstance,
    w: Sequence[int],
    residual: Sequence[int],
    potential: int,
    tau: int,
    gamma: int | Fraction,
    exclude: Iterable[int] = (),
) -> frozenset[int]:
    """Edges at b with ``c(e) * R <= tau * gamma * w_b * r_J(b)``.

    Returns the empty set when ``potential`` is 0 (nothing left to cover).
    """
    if potential == 0:
        return frozenset()
    g = Fraction(gamma)
    skip = set(exclude)
    out = []
    for i, (_, b, c) in enumerate(bip.edges):
        if i in skip:
            continue
        if c * potential * g.denominator <= tau * g.numerator * w[b] * residual[b]:
            out.append(i)
    return frozenset(out)


def reduce_step(
    bip: BipartiteInstance,
    w: Sequence[int],
    partial: Iterable[int],
    tau: int,
    params: ReduceParams,
    *,
    greedy_only: bool = False,
) -> frozenset[int] | None:
    """One contraction round.

    Returns the new edges ``I`` (disjoint from ``partial``) when they shrink
    the potential by ``theta``, or ``None`` when that fails, which certifies
    that ``tau`` is below the optimum.
    """
    J = frozenset(partial)
    residual = bip.residual(J)
    potential = deficiency_potential(w, residual)
    if potential == 0:
        return frozenset()
    cand = cheap_edges(bip, w, residual, potential, tau, params.gamma, exclude=J)
    found = solve_bpbmem(bip, w, residual, cand, tau, greedy_only=greedy_only)
    after = deficiency_potential(w, bip.residual(J | found))
    if after > params.theta * potential:
        return None
    assert bip.power_a(found) <= tau
    assert bip.power_b(found) <= params.gamma * tau
    return found


def completion(bip: BipartiteInstance, partial: Iterable[int]) -> frozenset[int]:
    """The r_J(b) cheapest edges outside J at every B node."""
    J = frozenset(partial)
    residual = bip.residual(J)
    chosen: list[int] = []
    for b in range(bip.n_b):
        need = residual[b]
        if need == 0:
            continue
        ranked = sorted((i for i in bip.at_b[b] if i not in J), key=lambda i: (bip.edges[i][2], i))
        if len(ranked) < need:
            raise InvalidInstanceError([f"node b{b}: residual requirement {need} exceeds free degree {len(ranked)}"])
        chosen.extend(ranked[:need])
    F = frozenset(chosen)
    w = bip.thresholds()
    assert bip.power_b(F) <= sum(w)
    assert bip.power_a(F) <= deficiency_potential(w, residual)
    return F


def _contract(
    bip: BipartiteInstance,
    w: Sequence[int],
    tau: int,
    params: ReduceParams,
    rounds: int,
    greedy_only: bool,
    trace: list[TraceStep],
) -> frozenset[int] | None:
    J: frozenset[int] = frozenset()
    potential = deficiency_potential(w, bip.residual(J))
    trace.append(TraceStep(tau, 0, potential))
    log.debug("tau=%d round=0 R=%d", tau, potential)
    for step in range(1, rounds + 1):
        found = reduce_step(bip, w, J, tau, params, greedy_only=greedy_only)
        if found is None:
            log.debug("tau=%d round=%d tau too small", tau, step)
            return None
        J |= found
        potential = deficiency_potential(w, bip.residual(J))
        trace.append(TraceStep(tau, step, potential))
        log.debug("tau=%d round=%d R=%d", tau, step, potential)
    if potential > tau:
        log.debug("tau=%d final R=%d exceeds tau", tau, potential)
        return None
    return J


def logk_run(
    inst: Instance, gamma: int | str | Fraction = 2, *, greedy_only: bool = False
) -> LogKRun:
    check_instance(inst)
    params = ReduceParams.from_gamma(gamma)
    bip = to_bipartite(inst)
    w = bip.thresholds()
    rounds = round_count(inst.k, params.theta)
    trace: list[TraceStep] = []

    if inst.k == 0:
        return LogKRun(power_profile(inst, ()), 0, params, 0, frozenset(), 0, ())

    results: dict[int, frozenset[int] | None] = {}

    def attempt(tau: int) -> frozenset[int] | None:
        if tau not in results:
            results[tau] = _contract(bip, w, tau, params, rounds, greedy_only, trace)
        return results[tau]

    hi = trivial_cover(bip.flat).total
    while attempt(hi) is None:
        # only reachable with greedy_only; the full solver succeeds for tau >= opt
        hi = 2 * hi + 1
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if attempt(mid) is None:
            lo = mid + 1
        else:
            hi = mid
    tau = hi
    J = results[tau]
    assert J is not None
    F = completion(bip, J)
    bip_edges = J | F
    bip_power = bip.power(bip_edges).total
    run = LogKRun(
        power_profile(inst, from_bipartite(bip_edges, bip)),
        tau,
        params,
        rounds,
        bip_edges,
        bip_power,
        tuple(trace),
    )
    assert bip_power <= run.power_bound
    return run


def solve_logk(inst: Instance, gamma: int | str | Fraction = 2, *, greedy_only: bool = False) -> Solution:
    return logk_run(inst, gamma, greedy_only=greedy_only).solution
