"""Small graph builders shared by the tests."""

from __future__ import annotations

import random

from p10c7.graph import Graph, build_graph


def cycle(n: int) -> Graph:
    return build_graph(n, [(k, (k + 1) % n) for k in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(k, k + 1) for k in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def k33() -> Graph:
    return build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def c7_plus(extra: dict[int, list[int]]) -> Graph:
    """C7 on 0..6 (v_k is vertex k-1) plus vertices attached as listed."""
    edges = [(k, (k + 1) % 7) for k in range(7)]
    n = 7 + len(extra)
    for v, ns in extra.items():
        edges += [(v, w) for w in ns]
    return build_graph(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])
