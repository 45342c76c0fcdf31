"""Deterministic instance generators for tests and campaigns."""

from __future__ import annotations

import random

from .errors import GenerationExhausted, PreconditionViolated
from .fans import has_connectivity_at_least
from .graphs import Graph

# Rejection sampling sweeps these densities in order; the last rung is
# the complete graph, so generation can only fail on impossible asks.
_DENSITY_SCHEDULE = (0.55, 0.65, 0.75, 0.85, 0.95, 1.0)
_TRIES_PER_DENSITY = 8


def gen_complete_minus_matching(n: int, m: int) -> Graph:
    """K_n minus the fixed matching (0,1), (2,3), ..., (2m-2, 2m-1).

    The classic dense test family: removing a matching from K_n drops
    the connectivity from n-1 to n-2 but keeps every root choice rich in
    disjoint paths.
    """
    if n < 0 or m < 0 or 2 * m > n:
        raise PreconditionViolated(f"matching of size {m} does not fit in {n} vertices")
    removed = {(2 * i, 2 * i + 1) for i in range(m)}
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in removed
    ]
    return Graph(n, edges)


def gen_random_kconnected(n: int, k: int, seed: int) -> Graph:
    """A seeded random graph with vertex connectivity at least k.

    Samples Erdos-Renyi graphs of increasing density and keeps the first
    one that passes the connectivity check; identical arguments always
    return the identical graph.
    """
    if n < k + 1:
        raise PreconditionViolated(f"no graph on {n} vertices is {k}-connected")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for p in _DENSITY_SCHEDULE:
        for _ in range(_TRIES_PER_DENSITY):
            edges = [e for e in pairs if rng.random() < p]
            g = Graph(n, edges)
            if g.min_degree() < k:
                continue
            if has_connectivity_at_least(g, k):
                return g
    raise GenerationExhausted(
        f"no {k}-connected graph found for n={n}, seed={seed}"
    )
