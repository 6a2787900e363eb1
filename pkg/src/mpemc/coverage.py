"""Power-budgeted maximum edge-multi-coverage on bipartite instances.

The objective ``val(I) = sum_b w_b * min(d_I(b), r(b))`` is maximised subject
to ``p_I(A) <= budget``. The A-side power is not additive over edges, so the
ground set is made of *star choices*: a center ``a`` together with a power
level, covering every candidate edge at ``a`` no dearer than the level. The
level is the knapsack cost of the choice. Picking several levels at one center
overpays, so the knapsack cost of a set of choices always bounds the true
A-side power from above, and the optimum of the reformulated problem equals
the optimum of the original one.

The solver is the partial-enumeration greedy for monotone submodular
maximisation under one knapsack: every feasible seed of at most three choices
is extended by density greedy and the best result is kept.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .bipartite import BipartiteInstance


@dataclass(frozen=True)
class StarChoice:
    center: int
    level: int
    covered: tuple[int, ...]


def coverage_value(
    bip: BipartiteInstance, w: Sequence[int], r: Sequence[int], edge_set: Iterable[int]
) -> int:
    deg = bip.degrees_b(edge_set)
    return sum(w[b] * min(deg[b], r[b]) for b in range(bip.n_b))


def star_choices(
    bip: BipartiteInstance,
    w: Sequence[int],
    r: Sequence[int],
    candidates: Iterable[int],
    budget: int | None = None,
) -> list[StarChoice]:
    """Star choices over the candidate edges that carry positive weight.

    A level is only emitted when it adds a valuable edge over the previous
    level at the same center; levels above ``budget`` are dropped.
    """
    by_center: dict[int, list[int]] = {}
    for i in sorted(set(candidates)):
        a, b, _ = bip.edges[i]
        if w[b] * r[b] > 0:
            by_center.setdefault(a, []).append(i)
    stars = []
    for a in sorted(by_center):
        ranked = sorted(by_center[a], key=lambda i: (bip.edges[i][2], i))
        covered: list[int] = []
        for pos, i in enumerate(ranked):
            covered.append(i)
            level = bip.edges[i][2]
            if pos + 1 < len(ranked) and bip.edges[ranked[pos + 1]][2] == level:
                continue
            if budget is not None and level > budget:
                break
            stars.append(StarChoice(a, level, tuple(covered)))
    return stars


class _State:
    """Chosen edges, B-side degrees and current value for one greedy run."""

    __slots__ = ("edges_b", "w", "r", "deg", "chosen", "value", "spent")

    def __init__(self, edges_b: Sequence[int], w: Sequence[int], r: Sequence[int]):
        self.edges_b = edges_b
        self.w = w
        self.r = r
        self.deg = [0] * len(r)
        self.chosen: set[int] = set()
        self.value = 0
        self.spent = 0

    def gain(self, star: StarChoice) -> int:
        extra: dict[int, int] = {}
        for i in star.covered:
            if i not in self.chosen:
                b = self.edges_b[i]
                extra[b] = extra.get(b, 0) + 1
        g = 0
        for b, add in extra.items():
            room = self.r[b] - self.deg[b]
            if room > 0:
                g += self.w[b] * min(room, add)
        return g

    def add(self, star: StarChoice) -> None:
        self.value += self.gain(star)
        for i in star.covered:
            if i not in self.chosen:
                self.chosen.add(i)
                self.deg[self.edges_b[i]] += 1
        self.spent += star.level


def _density_key(gain: int, star: StarChoice) -> tuple:
    # heapq is a min-heap: best density first, ties by (center, level)
    if star.level == 0:
        return (0, -gain, star.center, star.level)
    return (1, -Fraction(gain, star.level), star.center, star.level)


def _greedy(state: _State, stars: Sequence[StarChoice], skip: set[int], budget: int) -> None:
    """Density greedy: take the densest remaining choice if it fits, else drop it."""
    heap = []
    for j, star in enumerate(stars):
        if j in skip:
            continue
        g = state.gain(star)
        if g > 0:
            heap.append((_density_key(g, star), j))
    heapq.heapify(heap)
    while heap:
        _, j = heapq.heappop(heap)
        star = stars[j]
        g = state.gain(star)
        if g == 0:
            continue
        key = _density_key(g, star)
        if heap and key > heap[0][0]:
            # stale entry; gains only shrink, so reinsert and look again
            heapq.heappush(heap, (key, j))
            continue
        if state.spent + star.level <= budget:
            state.add(star)


def solve_bpbmem(
    bip: BipartiteInstance,
    w: Sequence[int],
    r: Sequence[int],
    candidates: Iterable[int],
    budget: int,
    *,
    greedy_only: bool = False,
) -> frozenset[int]:
    """Approximately maximise coverage value with A-side power at most ``budget``.

    The default mode carries the (1 - 1/e) guarantee. ``greedy_only`` returns
    the better of plain density greedy and the best single choice, which is
    much faster and only carries a weaker constant factor.
    """
    stars = star_choices(bip, w, r, candidates, budget)
    if not stars:
        return frozenset()
    edges_b = [b for _, b, _ in bip.edges]

    reachable = [0] * bip.n_b
    for star in stars:
        for i in star.covered:
            reachable[edges_b[i]] += 1
    ceiling = sum(w[b] * min(r[b], reachable[b]) for b in range(bip.n_b))

    best_value = -1
    best: set[int] = set()

    def consider(state: _State) -> bool:
        nonlocal best_value, best
        if state.value > best_value:
            best_value = state.value
            best = set(state.chosen)
        return best_value >= ceiling

    if greedy_only:
        state = _State(edges_b, w, r)
        _greedy(state, stars, set(), budget)
        if consider(state):
            return frozenset(best)
        for star in stars:
            single = _State(edges_b, w, r)
            single.add(star)
            consider(single)
        return frozenset(best)

    for size in range(4):
        for seed in combinations(range(len(stars)), size):
            centers = {stars[j].center for j in seed}
            if len(centers) < size:
                continue
            if sum(stars[j].level for j in seed) > budget:
                continue
            state = _State(edges_b, w, r)
            for j in seed:
                state.add(stars[j])
            _greedy(state, stars, set(seed), budget)
            if consider(state):
                return frozenset(best)
    return frozenset(best)
