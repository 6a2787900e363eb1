from __future__ import annotations

import random

from .instance import Instance


def gen_random(
    seed: int,
    n: int,
    p: float,
    max_cost: int,
    k: int,
    max_edges: int | None = None,
) -> Instance:
    """Seeded G(n, p) instance with costs in [1, max_cost].

    Each pair is kept with probability ``p``; if ``max_edges`` is set and more
    pairs survive, a seeded sample of ``max_edges`` of them is kept in index
    order. Requirements are drawn uniformly from ``[0, min(k, deg(v))]`` so
    the result is always feasible.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if max_cost < 1:
        raise ValueError(f"max_cost must be >= 1, got {max_cost}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if max_edges is not None and max_edges < 0:
        raise ValueError(f"max_edges must be >= 0, got {max_edges}")

    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.randint(1, max_cost)))
    if max_edges is not None and len(edges) > max_edges:
        keep = sorted(rng.sample(range(len(edges)), max_edges))
        edges = [edges[i] for i in keep]
    deg = [0] * n
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    reqs = [rng.randint(0, min(k, d)) for d in deg]
    return Instance(n, edges, reqs)
