"""Shared random instance builders for the test-suite."""

import random

import numpy as np

from mpemc.bipartite import BipartiteInstance, to_bipartite
from mpemc.generate import gen_random
from mpemc.restricted import RestrictedInstance


def random_bipartite(rng: random.Random, n_a: int, n_b: int, p: float, max_cost: int = 10, k: int = 3):
    edges = [(a, b, rng.randint(1, max_cost)) for a in range(n_a) for b in range(n_b) if rng.random() < p]
    deg = [0] * n_b
    for _, b, _ in edges:
        deg[b] += 1
    reqs = tuple(rng.randint(0, min(k, d)) for d in deg)
    return BipartiteInstance(n_a, n_b, tuple(edges), reqs, (-1,) * len(edges))


def small_bipartite(seed: int, max_edges: int = 12):
    """Bipartite image of a seeded instance small enough for the oracles."""
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    inst = gen_random(seed, n, rng.uniform(0.3, 1.0), 10, 3, max_edges // 2)
    return to_bipartite(inst)


def brute_force_matching(edges):
    """Best total weight over every matching, by recursive enumeration."""
    edges = [e for e in edges if e[0] != e[1]]
    best = 0

    def walk(i, used, total):
        nonlocal best
        if i == len(edges):
            best = max(best, total)
            return
        walk(i + 1, used, total)
        u, v, wt = edges[i]
        if u not in used and v not in used:
            walk(i + 1, used | {u, v}, total + wt)

    walk(0, frozenset(), 0)
    return best


def brute_force_edge_cover(n, edges):
    """Minimum cost over all covering subsets, enumerated with bitmasks."""
    m = len(edges)
    masks = np.arange(1 << m, dtype=np.int64)
    covered = np.zeros(1 << m, dtype=np.int64)
    cost = np.zeros(1 << m, dtype=np.int64)
    for i, (u, v, c) in enumerate(edges):
        take = (masks >> i) & 1
        covered |= take * ((1 << u) | (1 << v))
        cost += take * c
    ok = covered == (1 << n) - 1
    return int(cost[ok].min())


def random_multigraph(rng, max_edges=14):
    n = rng.randint(1, 7)
    edges = [(x, x, rng.randint(0, 12)) for x in range(n) if rng.random() < 0.5]
    while len(edges) < max_edges and rng.random() < 0.9:
        u, v = rng.randrange(n), rng.randrange(n)
        edges.append((u, v, rng.randint(0, 12)))
    covered = {x for u, v, _ in edges for x in (u, v)}
    for x in range(n):
        if x not in covered and len(edges) < max_edges:
            edges.append((x, rng.randrange(n), rng.randint(0, 12)))
            covered |= {x, edges[-1][1]}
    return n, edges[:max_edges], covered


def random_restricted(rng, max_edges=14):
    n = rng.randint(2, 7)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges = [(u, v, rng.randint(1, 10)) for u, v in pairs[: rng.randint(1, min(max_edges, len(pairs)))]]
    touched = sorted({x for u, v, _ in edges for x in (u, v)})
    targets = [x for x in touched if rng.random() < 0.7]
    lower = {x: rng.randint(0, 12) for x in targets}
    return RestrictedInstance(n, edges, targets, lower)
