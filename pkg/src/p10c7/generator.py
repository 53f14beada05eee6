"""Seeded generation of connected members of the class.

Families:

``a``  random connected bipartite graphs,
``b``  a C7 with vertices hung off it one at a time,
``c``  a C7 with a first layer plus complete bipartite blocks beyond it,
``d``  a named fixture, optionally grown further like ``b``.

Every proposal is kept only if the membership check accepts it, so the
structured proposals just raise the acceptance rate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .errors import GenerationFailure, InputError
from .graph import Graph, build_graph, connected_components
from .membership import check_membership

FAMILIES = ("a", "b", "c", "d")


def _c7_edges() -> list[tuple[int, int]]:
    return [(k, (k + 1) % 7) for k in range(7)]


def _v(k: int) -> int:
    """Vertex id of cycle position ``k`` (1-based, mod 7)."""
    return (k - 1) % 7


def _fixture(extra: list[list[int]]) -> Graph:
    """C7 on ids 0..6 plus vertices ``7, 8, ...`` adjacent to the listed ids."""
    edges = _c7_edges()
    for off, ns in enumerate(extra):
        edges += [(7 + off, w) for w in ns]
    return build_graph(7 + len(extra), edges)


# Fixtures use v_k = id k-1.  New vertices are numbered from 7 in list order.
FIXTURES: dict[str, Graph] = {
    "c7": _fixture([]),
    # a1 ~ v1, d1 ~ a1, d2 ~ d1, a3 ~ v3, d2
    "fig1-W1": _fixture([[_v(1)], [7], [8], [_v(3), 9]]),
    # b1 ~ v7, v2; d1 ~ b1; d2 ~ d1; b4 ~ v3, v5, d2
    "fig1-W2": _fixture([[_v(7), _v(2)], [7], [8], [_v(3), _v(5), 9]]),
    # b1 ~ v7, v2; d1 ~ b1; d2 ~ d1; a4 ~ v4, d2
    "fig1-W3": _fixture([[_v(7), _v(2)], [7], [8], [_v(4), 9]]),
    # an isolated vertex x in X1 between a6 and a3
    "x1-pair": _fixture([[_v(6)], [_v(3)], [7, 8]]),
    # the distance-3 example: b in B1, x ~ b, d ~ x, d' ~ d
    "d2-chain": _fixture([[_v(7), _v(2)], [7], [8], [9]]),
    # A-case 2 shape around i = 1: a1 in A6, w1, a2 in A2
    "typeA-2": _fixture([[_v(6)], [7], [_v(2), 8]]),
    # B-case 1 shape around i = 1: w2 - w1 - a1 with a1 in A3
    "typeB-1": _fixture([[_v(3)], [7], [8]]),
    # a Q1 block: K_{2,2} whose side {x, y} sees B1 and B2
    "q1-block": _fixture([[_v(7), _v(2)], [_v(1), _v(3)], [7], [8], [9, 10], [9, 10]]),
    # cleaned members carrying a 3-vertex component; found by random search
    "q1-core": _fixture([[_v(2), _v(7)], [_v(1), _v(3)], [7], [8], [9, 10], [_v(5), 11]]),
    "q4-core": _fixture([[_v(2), _v(7)], [_v(2), _v(7)], [7], [8], [9, 10], [_v(1), 11]]),
}


# Drawn shapes that fall outside the class; kept for diagnostic tests.
NON_MEMBER_FIXTURES: dict[str, Graph] = {
    # b1 ~ v7, v2; d1 ~ b1; d2 ~ d1; b2 ~ v1, v3, d2 (contains an induced C9)
    "fig1-W4": _fixture([[_v(7), _v(2)], [7], [8], [_v(1), _v(3), 9]]),
}


@dataclass(frozen=True)
class GenParams:
    n_target: int = 12
    attachment_density: float = 0.3
    family: str = "b"
    fixture: str | None = None
    # return the cleaned core of a larger member instead of the member itself
    core: bool = False
    # share of growth proposals that add an ear instead of a single vertex
    ear_rate: float = 0.5
    core_slack: int = 8


def _connected(g: Graph) -> bool:
    return g.n == 0 or len(connected_components(g)) == 1


def _bipartite(rng: random.Random, p: GenParams) -> Graph:
    n = max(1, p.n_target)
    if n == 1:
        return build_graph(1, [])
    side = [0, 1] + [rng.randint(0, 1) for _ in range(n - 2)]
    edges = {(0, 1)}
    # a random spanning tree first, so the graph is connected
    for v in range(2, n):
        partner = rng.choice([u for u in range(v) if side[u] != side[v]])
        edges.add((partner, v))
    for a in range(n):
        for b in range(a + 1, n):
            if side[a] != side[b] and rng.random() < p.attachment_density:
                edges.add((a, b))
    return build_graph(n, edges)


def _ear(rng: random.Random, g: Graph, room: int) -> Graph | None:
    """Join two existing vertices by a path through up to four new vertices."""
    k = rng.randint(1, min(4, room))
    u, w = rng.sample(list(g.vertices), 2)
    path = [u, *range(g.n, g.n + k), w]
    h = build_graph(g.n + k, g.edges() + list(zip(path, path[1:])))
    return h if check_membership(h).is_member else None


def _grow(rng: random.Random, g: Graph, p: GenParams, tries_per_vertex: int = 40) -> Graph:
    """Add vertices one at a time, keeping only proposals that stay in the class."""
    base = set(range(7))
    while g.n < p.n_target:
        new = g.n
        for _ in range(tries_per_vertex):
            if rng.random() < p.ear_rate:
                h = _ear(rng, g, p.n_target - g.n)
                if h is not None:
                    g = h
                    break
                continue
            others = [v for v in g.vertices if v not in base]
            kind = rng.random()
            k = rng.randint(1, 7)
            if kind < 0.3:
                ns = {_v(k)}
            elif kind < 0.55:
                ns = {_v(k - 1), _v(k + 1)}
            else:
                ns = set()
            if not ns:
                if not others:
                    continue
                ns.add(rng.choice(others))
            for w in others:
                if rng.random() < p.attachment_density / 2:
                    ns.add(w)
            edges = g.edges() + [(w, new) for w in ns]
            h = build_graph(new + 1, edges)
            if check_membership(h).is_member:
                g = h
                break
        else:
            raise GenerationFailure(f"could not grow past {g.n} vertices")
    return g


def _blocks(rng: random.Random, p: GenParams) -> Graph:
    g = _fixture([])
    layer = min(max(2, p.n_target - 11), 4)
    g = _grow(rng, g, GenParams(7 + layer, p.attachment_density, "b"))
    nc = [v for v in g.vertices if v >= 7 and any(w < 7 for w in g.neighbors(v))]
    while g.n < p.n_target:
        room = p.n_target - g.n
        s = rng.randint(1, min(3, room))
        t = rng.randint(1, min(3, max(1, room - s))) if room - s >= 1 else 0
        if t == 0:
            s, t = 1, 0
        n0 = g.n
        part1 = list(range(n0, n0 + s))
        part2 = list(range(n0 + s, n0 + s + t))
        at1 = rng.sample(nc, min(len(nc), rng.randint(1, 2))) if nc else [0]
        at2 = rng.sample(nc, min(len(nc), rng.randint(1, 2))) if nc else [0]
        edges = g.edges()
        edges += [(a, b) for a in part1 for b in part2]
        edges += [(a, w) for a in part1 for w in at1]
        edges += [(b, w) for b in part2 for w in at2]
        h = build_graph(n0 + s + t, edges)
        if check_membership(h).is_member:
            g = h
        elif rng.random() < 0.1:
            break
    return g


def _relabel(g: Graph) -> Graph:
    ids = {v: k for k, v in enumerate(g.vertices)}
    return build_graph(g.n, [(ids[a], ids[b]) for a, b in g.edges()])


def _core(seed: int, p: GenParams, max_attempts: int) -> Graph:
    """Cleaned core of a larger member, relabeled to ``0..n-1``, with ``9 <= n <= n_target``."""
    from .cleaning import Cleaned, clean

    if p.n_target < 9:
        raise InputError("cores are requested with n_target >= 9")
    big = replace(p, core=False, n_target=p.n_target + p.core_slack)
    for attempt in range(max_attempts):
        try:
            g = generate(seed * max_attempts + attempt, big, 20)
        except GenerationFailure:
            continue
        res = clean(g)
        if isinstance(res, Cleaned) and 9 <= res.graph.n <= p.n_target and _connected(res.graph):
            return _relabel(res.graph)
    raise GenerationFailure(f"no core of order 9..{p.n_target} after {max_attempts} attempts")


def generate(seed: int, params: GenParams | None = None, max_attempts: int = 200) -> Graph:
    """A connected member of the class, determined by ``seed`` and ``params``."""
    p = params or GenParams()
    if p.core:
        if p.family == "a":
            raise InputError("family a has no cores")
        return _core(seed, p, max_attempts)
    if p.family not in FAMILIES:
        raise InputError(f"unknown family {p.family!r}")
    if p.family != "a" and p.family != "d" and p.n_target < 7:
        raise InputError("families b and c need n_target >= 7")
    rng = random.Random(f"{seed}:{p.family}:{p.n_target}:{p.attachment_density}:{p.fixture}")
    for _ in range(max_attempts):
        try:
            if p.family == "a":
                g = _bipartite(rng, p)
            elif p.family == "b":
                g = _grow(rng, _fixture([]), p)
            elif p.family == "c":
                g = _blocks(rng, p)
            else:
                name = p.fixture or sorted(FIXTURES)[seed % len(FIXTURES)]
                if name not in FIXTURES:
                    raise InputError(f"unknown fixture {name!r}")
                g = FIXTURES[name]
                if p.n_target > g.n:
                    g = _grow(rng, g, p)
        except GenerationFailure:
            continue
        if _connected(g) and check_membership(g).is_member:
            return g
    raise GenerationFailure(f"no member after {max_attempts} attempts (seed {seed}, {p})")


def fixture(name: str) -> Graph:
    try:
        return FIXTURES[name] if name in FIXTURES else NON_MEMBER_FIXTURES[name]
    except KeyError:
        raise InputError(f"unknown fixture {name!r}") from None
