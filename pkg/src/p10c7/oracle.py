"""Brute-force reference answers for differential testing.

Nothing here imports the solver modules: structure classes, case tables and
searches are written out again in the plainest form so that agreement with
the fast code means something.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import InputError, OracleRefusal
from .graph import Coloring, CycleC7, Graph

DEFAULT_CAP = 20


def _guard(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise OracleRefusal(f"graph has {g.n} vertices, oracle cap is {cap}")


def _groups(g: Graph, z: Iterable[Iterable[int]] | None) -> dict[int, frozenset[int]]:
    """Vertex -> the full class of vertices forced equal to it."""
    cls: dict[int, set[int]] = {v: {v} for v in g.vertices}
    for s in z or ():
        s = [v for v in s]
        for v in s:
            if v not in cls:
                raise InputError(f"mono-set vertex {v} is not in the graph")
        merged = set().union(*(cls[v] for v in s)) if s else set()
        for v in merged:
            cls[v] = merged
    return {v: frozenset(s) for v, s in cls.items()}


# ---------------------------------------------------------------------------
# Coloring
# ---------------------------------------------------------------------------


def iter_colorings(
    g: Graph,
    p: Mapping[int, Iterable[int]] | None = None,
    z: Iterable[Iterable[int]] | None = None,
    cap: int = DEFAULT_CAP,
) -> Iterator[Coloring]:
    """All list colorings honoring ``z``, in lexicographic order over sorted vertices."""
    _guard(g, cap)
    order = list(g.vertices)
    if p is not None and set(p) != set(order):
        raise InputError("palette domain differs from the vertex set")
    groups = _groups(g, z)
    dom0 = {v: set(p[v]) if p is not None else {1, 2, 3} for v in order}

    def rec(k: int, col: dict[int, int], dom: dict[int, set[int]]) -> Iterator[Coloring]:
        while k < len(order) and order[k] in col:
            k += 1
        if k == len(order):
            yield dict(col)
            return
        v = order[k]
        for color in sorted(dom[v]):
            fresh = [u for u in groups[v] if u not in col]
            if any(color not in dom[u] for u in fresh):
                continue
            new_dom = {u: set(s) for u, s in dom.items()}
            ok = True
            for u in fresh:
                col[u] = color
                new_dom[u] = {color}
            for u in fresh:
                for w in g.neighbors(u):
                    if w in col and col[w] == color and w not in fresh:
                        ok = False
                    elif w in fresh:
                        ok = False
                    elif w not in col:
                        new_dom[w].discard(color)
                        if not new_dom[w]:
                            ok = False
            if ok:
                yield from rec(k + 1, col, new_dom)
            for u in fresh:
                del col[u]

    yield from rec(0, {}, dom0)


def brute_force_color(
    g: Graph,
    p: Mapping[int, Iterable[int]] | None = None,
    z: Iterable[Iterable[int]] | None = None,
    cap: int = DEFAULT_CAP,
) -> Coloring | None:
    return next(iter_colorings(g, p, z, cap), None)


def flat_color(
    g: Graph,
    p: Mapping[int, Iterable[int]] | None = None,
    z: Iterable[Iterable[int]] | None = None,
    cap: int = 8,
) -> Coloring | None:
    """Plain 3^n scan; the second, independent colorability check."""
    _guard(g, cap)
    order = list(g.vertices)
    edges = g.edges()
    sets = [list(s) for s in z or ()]
    for combo in itertools.product((1, 2, 3), repeat=len(order)):
        c = dict(zip(order, combo))
        if any(c[u] == c[w] for u, w in edges):
            continue
        if p is not None and any(c[v] not in set(p[v]) for v in order):
            continue
        if any(len({c[v] for v in s}) > 1 for s in sets):
            continue
        return c
    return None


# ---------------------------------------------------------------------------
# Structures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    cycles: dict[int, int]
    longest_path: int

    def is_member(self) -> bool:
        bad_cycle = any(k % 2 == 1 and k != 7 for k in self.cycles)
        return not bad_cycle and self.longest_path < 10


def brute_force_structures(g: Graph, cap: int = DEFAULT_CAP) -> StructureReport:
    """Count induced cycles by length and find the longest induced path."""
    _guard(g, cap)
    vs = list(g.vertices)
    adj = {v: set(g.neighbors(v)) for v in vs}
    cycles: dict[int, int] = {}
    longest = 0
    for r in range(1, len(vs) + 1):
        for sub in itertools.combinations(vs, r):
            s = set(sub)
            deg = {v: len(adj[v] & s) for v in sub}
            n_edges = sum(deg.values()) // 2
            if max(deg.values()) > 2:
                continue
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                u = stack.pop()
                for w in adj[u] & s:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != r:
                continue
            if r >= 3 and n_edges == r:
                cycles[r] = cycles.get(r, 0) + 1
            elif n_edges == r - 1:
                longest = max(longest, r)
    return StructureReport(dict(sorted(cycles.items())), longest)


def oracle_is_member(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    return brute_force_structures(g, cap).is_member()


# ---------------------------------------------------------------------------
# Predicates on colorings relative to a 7-cycle
# ---------------------------------------------------------------------------


def _cyc(c: CycleC7, k: int) -> int:
    return c.vertices[(k - 1) % 7]


class _Sets:
    """Attachment classes of ``g`` around ``cyc`` computed straight from definitions."""

    def __init__(self, g: Graph, cyc: CycleC7) -> None:
        on_cycle = set(cyc.vertices)
        self.g = g
        self.cyc = cyc
        self.att = {v: frozenset(cyc.index_of(u) for u in g.neighbors(v) if u in on_cycle)
                    for v in g.vertices if v not in on_cycle}
        self.nc = {v for v, a in self.att.items() if a}
        self.d = {v for v, a in self.att.items() if not a}

    def a(self, k: int) -> set[int]:
        k = (k - 1) % 7 + 1
        return {v for v, s in self.att.items() if s == {k}}

    def b(self, k: int) -> set[int]:
        pair = {(k - 2) % 7 + 1, k % 7 + 1}
        return {v for v, s in self.att.items() if s == pair}

    def x(self, k: int) -> set[int]:
        lo = self.a(k - 2) | self.b(k - 1)
        hi = self.a(k + 2) | self.b(k + 1)
        out = set()
        for v in self.d:
            ns = set(self.g.neighbors(v))
            if ns & self.d:
                continue
            if ns & lo and ns & hi:
                out.add(v)
        return out


# Slot: (name, domain, color). Domain tokens: "S-", "S+", ("A", k), ("B", k),
# "D", ("X", k); several tokens form a union. Colors: "m" = c(v_{i-2}),
# "p" = c(v_{i+2}), "q" = c(v_{i+1}), None = free.
_CASES: dict[tuple[str, int], tuple[list, list]] = {
    ("A", 1): ([("a1", ["S-"], "p"), ("w1", [("X", 0)], "q"), ("a2", ["S+"], "m"),
                ("w2", [("X", 0)], "q"), ("a2'", ["S+"], "m"), ("w3", ["D"], "q")], "path"),
    ("A", 2): ([("a1", [("A", -2), ("B", -3)], "p"), ("w1", ["D"], "q"),
                ("a2", [("A", 1), ("B", 2)], "m")], "path"),
    ("A", 3): ([("a1'", ["S-"], "q"), ("w1", ["D"], "m"), ("a1", ["S-"], "p"),
                ("w2", ["D"], "q"), ("a2", [("A", 3)], "m")], "path"),
    ("A", 4): ([("a1'", ["S-"], "q"), ("w1", ["D"], "m"), ("a1", ["S-"], "p"),
                ("a2", [("A", -3)], "q")], "path"),
    ("A", 5): ([("a1", ["S-"], "q"), ("w1", ["D"], "m"), ("a1'", ["S-"], "p"),
                ("w2", ["D"], "q"), ("a1''", ["S-"], "p"), ("w3", [("X", -2)], None)], "path"),
    ("A", 6): ([("a1", ["S-"], "q"), ("w1", ["D"], "m"), ("a1'", ["S-"], "p"),
                ("w2", ["D"], "q"), ("a1''", ["S-"], "p"), ("w3", ["D"], "q"),
                ("w4", ["D"], None), ("a2", ["S+"], "q")],
               [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1)]),
    ("B", 1): ([("w2", ["D"], "p"), ("w1", ["D"], "q"), ("a1", ["S+"], "m")], "path"),
    ("B", 2): ([("w2", ["D"], "m"), ("w1", ["D"], "q"), ("a1", ["S+"], "m")], "path"),
    ("B", 3): ([("w2", ["D"], "p"), ("w1", [("A", 3)], "q"), ("a1", ["S+"], "m")], "path"),
    ("B", 4): ([("a1'", ["S-"], "q"), ("w1", ["D"], "m"), ("a1", ["S-"], "p"),
                ("w2", ["D"], "q"), ("w3", ["D"], None), ("a2", [("A", 2)], "q")],
               [(0, 1), (1, 2), (2, 3), (3, 4), (5, 1)]),
}


def _domain(sets: _Sets, i: int, tokens: list) -> set[int]:
    out: set[int] = set()
    for t in tokens:
        if t == "S-":
            out |= sets.a(i - 2) | sets.b(i - 1)
        elif t == "S+":
            out |= sets.a(i + 2) | sets.b(i + 1)
        elif t == "D":
            out |= sets.d
        elif t[0] == "A":
            out |= sets.a(i + t[1])
        elif t[0] == "B":
            out |= sets.b(i + t[1])
        else:
            out |= sets.x(i + t[1])
    return out


def _has_case(g: Graph, cyc: CycleC7, i: int, c: Mapping[int, int], kind: str) -> bool:
    sets = _Sets(g, cyc)
    ref = {"m": c[_cyc(cyc, i - 2)], "p": c[_cyc(cyc, i + 2)], "q": c[_cyc(cyc, i + 1)]}
    s_minus = sets.a(i - 2) | sets.b(i - 1)
    for (k, _), (slots, shape) in _CASES.items():
        if k != kind:
            continue
        edges = [(j, j + 1) for j in range(len(slots) - 1)] if shape == "path" else shape
        adj_req = {frozenset(e) for e in edges}
        doms = []
        for _, tokens, col in slots:
            dom = _domain(sets, i, tokens)
            if col is not None:
                dom = {v for v in dom if c[v] == ref[col]}
            doms.append(sorted(dom))
        extra_b2 = (kind, _) == ("B", 2)

        def rec(chosen: list[int]) -> bool:
            j = len(chosen)
            if j == len(slots):
                if extra_b2 and set(g.neighbors(chosen[0])) & s_minus:
                    return False
                return True
            for v in doms[j]:
                if v in chosen:
                    continue
                if all(g.has_edge(v, chosen[t]) == (frozenset((t, j)) in adj_req) for t in range(j)):
                    if rec(chosen + [v]):
                        return True
            return False

        if rec([]):
            return True
    return False


def is_good(cyc: CycleC7, i: int, c: Mapping[int, int]) -> bool:
    a, b, d, e = (c[_cyc(cyc, i + k)] for k in (-2, -1, 2, 1))
    return len({a, b, d}) == 3 and e == b


def satisfies_mono(g: Graph, cyc: CycleC7, i: int, c: Mapping[int, int],
                   only: Iterable[int] | None = None) -> bool:
    sets = _Sets(g, cyc)
    lo = sets.a(i - 2) | sets.b(i - 1)
    hi = sets.a(i + 2) | sets.b(i + 1)
    targets = sets.x(i) if only is None else set(only)
    for x in targets:
        ns = set(g.neighbors(x))
        if len({c[v] for v in ns & lo}) > 1 or len({c[v] for v in ns & hi}) > 1:
            return False
    return True


def _predicate(g: Graph, cyc: CycleC7, i: int, name: str) -> Callable[[Mapping[int, int]], bool]:
    if name == "good":
        return lambda c: is_good(cyc, i, c)
    if name in ("typeA", "typeB"):
        kind = name[-1]
        refl = cyc.reflected_at(i)
        return lambda c: is_good(cyc, i, c) and (
            _has_case(g, cyc, i, c, kind) or _has_case(g, refl, i, c, kind)
        )
    if name == "mono":
        return lambda c: satisfies_mono(g, cyc, i, c)
    raise InputError(f"unknown predicate {name!r}")


def coloring_predicate_filter(
    g: Graph,
    c: CycleC7,
    i: int,
    predicate: str,
    p: Mapping[int, Iterable[int]] | None = None,
    cap: int = DEFAULT_CAP,
) -> Coloring | None:
    """Least proper coloring (optionally within ``p``) that satisfies ``predicate``."""
    test = _predicate(g, c, i, predicate)
    for col in iter_colorings(g, p, None, cap):
        if test(col):
            return col
    return None
