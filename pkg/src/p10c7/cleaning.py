"""Comparable-pair stripping, attachment classes around a 7-cycle, and cleaning.

A graph is *cleaned* when it has no comparable pair and, for every induced
C7 ``C``, every vertex lies within distance two of ``C`` and every component
of ``G - N[C]`` is a single vertex or a complete bipartite graph.  Cleaning
deletes vertices and logs how to color them back.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import InputError, StructuralDiagnostic
from .extension import (
    BipartitePartCollapsed,
    ComparableDeleted,
    D1DoubleDeleted,
    D2Deleted,
    ExtensionLog,
    replay,
)
from .graph import (
    UNREACHABLE,
    Coloring,
    CycleC7,
    Graph,
    bipartition,
    connected_components,
    distances_from_set,
    enumerate_induced_c7,
    find_comparable_pair,
)


def idx(k: int) -> int:
    """Cycle index arithmetic onto 1..7."""
    return (k - 1) % 7 + 1


# ---------------------------------------------------------------------------
# Comparable pairs
# ---------------------------------------------------------------------------


def remove_comparable_pairs(g: Graph, log: ExtensionLog | None = None) -> tuple[Graph, ExtensionLog]:
    log = ExtensionLog() if log is None else log
    while True:
        pair = find_comparable_pair(g)
        if pair is None:
            return g, log
        u, v = pair
        log.append(ComparableDeleted(u, v))
        g = g.without([u])


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleClassification:
    cycle: CycleC7
    a_sets: tuple[frozenset[int], ...]
    b_sets: tuple[frozenset[int], ...]
    d1: frozenset[int]
    d2: frozenset[int]
    d1_prime: frozenset[int]
    d1_double_prime: frozenset[int]
    beyond: frozenset[int]
    x_sets: tuple[frozenset[int], ...]
    x_all: frozenset[int]
    y_set: frozenset[int]
    attachment: dict[int, frozenset[int]] = field(repr=False, compare=False)

    def a(self, k: int) -> frozenset[int]:
        return self.a_sets[idx(k) - 1]

    def b(self, k: int) -> frozenset[int]:
        return self.b_sets[idx(k) - 1]

    def x(self, k: int) -> frozenset[int]:
        return self.x_sets[idx(k) - 1]

    def side_minus(self, i: int) -> frozenset[int]:
        return self.a(i - 2) | self.b(i - 1)

    def side_plus(self, i: int) -> frozenset[int]:
        return self.a(i + 2) | self.b(i + 1)

    @property
    def a_all(self) -> frozenset[int]:
        return frozenset().union(*self.a_sets)

    @property
    def b_all(self) -> frozenset[int]:
        return frozenset().union(*self.b_sets)

    @property
    def nc(self) -> frozenset[int]:
        """N(C): every vertex off the cycle with a cycle neighbor."""
        return self.a_all | self.b_all

    @property
    def d_all(self) -> frozenset[int]:
        """V - N[C]."""
        return self.x_all | self.y_set

    def a_index(self, v: int) -> int | None:
        s = self.attachment.get(v)
        return next(iter(s)) if s is not None and len(s) == 1 else None

    def b_index(self, v: int) -> int | None:
        s = self.attachment.get(v)
        if s is None or len(s) != 2:
            return None
        lo, hi = sorted(s)
        return idx(lo + 1) if hi - lo == 2 else idx(hi + 1)


def classify_cycle(g: Graph, c: CycleC7) -> CycleClassification:
    on_cycle = c.vertex_set
    pos = {v: k for k, v in enumerate(c.vertices, start=1)}
    a_sets: list[set[int]] = [set() for _ in range(7)]
    b_sets: list[set[int]] = [set() for _ in range(7)]
    attachment: dict[int, frozenset[int]] = {}
    for v in g.vertices:
        if v in on_cycle:
            continue
        hit = frozenset(pos[w] for w in g.neighbors(v) if w in on_cycle)
        if not hit:
            continue
        attachment[v] = hit
        if len(hit) == 1:
            a_sets[next(iter(hit)) - 1].add(v)
            continue
        if len(hit) == 2:
            lo, hi = sorted(hit)
            if hi - lo == 2:
                b_sets[lo].add(v)  # B_{lo+1}
                continue
            if hi - lo == 5:
                b_sets[hi % 7].add(v)  # {1,6} -> B_7, {2,7} -> B_1
                continue
        raise StructuralDiagnostic(
            "class-violation",
            f"vertex {v} sees cycle positions {sorted(hit)}",
            (v,),
        )
    dist = distances_from_set(g, c.vertices)
    d1 = frozenset(v for v, d in dist.items() if d == 2)
    d2 = frozenset(v for v, d in dist.items() if d == 3)
    beyond = frozenset(v for v, d in dist.items() if d == UNREACHABLE or d >= 4)
    d1_pp = frozenset(v for v in d1 if any(w in d2 for w in g.neighbors(v)))
    d_all = d1 | d2 | beyond
    x_all = frozenset(v for v in d_all if not any(w in d_all for w in g.neighbors(v)))
    a_f = tuple(frozenset(s) for s in a_sets)
    b_f = tuple(frozenset(s) for s in b_sets)
    x_sets = []
    for i in range(1, 8):
        lo = a_f[idx(i - 2) - 1] | b_f[idx(i - 1) - 1]
        hi = a_f[idx(i + 2) - 1] | b_f[idx(i + 1) - 1]
        x_sets.append(frozenset(
            v for v in x_all
            if any(w in lo for w in g.neighbors(v)) and any(w in hi for w in g.neighbors(v))
        ))
    return CycleClassification(
        cycle=c,
        a_sets=a_f,
        b_sets=b_f,
        d1=d1,
        d2=d2,
        d1_prime=d1 - d1_pp,
        d1_double_prime=d1_pp,
        beyond=beyond,
        x_sets=tuple(x_sets),
        x_all=x_all,
        y_set=d_all - x_all,
        attachment=attachment,
    )


@dataclass(frozen=True)
class SignList:
    owner: int
    indices: tuple[int, ...]
    is_good: bool

    def source_index(self) -> int:
        """Cycle index whose color the owner takes when it is colored back."""
        if self.is_good:
            return self.indices[0]
        lo, hi = self.indices
        # written as {i, i+2}: the owner takes the color of v_i
        return lo if idx(lo + 2) == hi else hi


def sign_list_of(g: Graph, c: CycleC7, cls: CycleClassification, x: int) -> SignList:
    if x not in cls.d1_double_prime:
        raise StructuralDiagnostic("sign-list", f"vertex {x} is not in D1''", (x,))
    hit = sorted({cls.b_index(w) for w in g.neighbors(x) if cls.b_index(w) is not None})
    if not hit:
        raise StructuralDiagnostic("sign-list", f"vertex {x} has no B-neighbor", (x,))
    if len(hit) == 1:
        j = hit[0]
        return SignList(x, tuple(sorted((idx(j - 1), idx(j + 1)))), False)
    if len(hit) == 2:
        for lo, hi in (hit, hit[::-1]):
            if idx(lo + 2) == hi:
                return SignList(x, (idx(lo + 1),), True)
    raise StructuralDiagnostic(
        "sign-list", f"vertex {x} has B-neighbors in classes {hit}", (x,)
    )


# ---------------------------------------------------------------------------
# Cleaning
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bipartite:
    coloring: Coloring


@dataclass(frozen=True)
class Cleaned:
    graph: Graph
    log: ExtensionLog


def check_nc_edge_claim(g: Graph, cls: CycleClassification) -> None:
    """Edges inside ``N(C)`` never join classes that would close a C3 or an induced C5."""
    for v in sorted(cls.nc):
        k = cls.a_index(v)
        if k is not None:
            banned = {("A", 0), ("A", 2), ("A", -2), ("B", 1), ("B", -1), ("B", 3), ("B", -3)}
        else:
            k = cls.b_index(v)
            banned = {("A", 1), ("A", -1), ("A", 3), ("A", -3), ("B", 0), ("B", 2), ("B", -2), ("B", 3), ("B", -3)}
        for u in g.neighbors(v):
            if u not in cls.nc:
                continue
            j = cls.a_index(u)
            kind = "A" if j is not None else "B"
            j = j if j is not None else cls.b_index(u)
            off = (j - k + 3) % 7 - 3
            if (kind, off) in banned:
                raise StructuralDiagnostic("nc-edge", f"edge {v}-{u} joins forbidden classes", (v, u))


def _check_cycle_claims(g: Graph, cls: CycleClassification) -> None:
    check_nc_edge_claim(g, cls)
    if cls.beyond:
        v = min(cls.beyond)
        raise StructuralDiagnostic("far-vertex", f"vertex {v} is at distance >= 4 from the cycle", (v,))
    for d in cls.d2:
        for w in g.neighbors(d):
            if w in cls.d2:
                raise StructuralDiagnostic("d2-edge", f"edge {d}-{w} inside D2", (d, w))
    a_all = cls.a_all
    for x in cls.d1_double_prime:
        for w in g.neighbors(x):
            if w in a_all:
                raise StructuralDiagnostic("d1-a-neighbor", f"D1'' vertex {x} sees A-vertex {w}", (x, w))
            if w in cls.d1:
                raise StructuralDiagnostic("d1-edge", f"D1'' vertex {x} sees D1 vertex {w}", (x, w))


def _delete_far(g: Graph, c: CycleC7, cls: CycleClassification, log: ExtensionLog) -> Graph:
    doomed = cls.d2 | cls.d1_double_prime
    if not doomed:
        return g
    for d in sorted(cls.d2):
        log.append(D2Deleted(d, g.neighbors(d)))
    for x in sorted(cls.d1_double_prime):
        s = sign_list_of(g, c, cls, x)
        log.append(D1DoubleDeleted(x, s.indices, c.vertices, c.v(s.source_index())))
    return g.without(doomed)


def _collapse_components(g: Graph, cls: CycleClassification, log: ExtensionLog) -> Graph:
    rest = g.induced(cls.d_all)
    nc = cls.nc
    doomed: set[int] = set()
    for comp in connected_components(rest):
        if len(comp) < 3:
            continue
        h = rest.induced(comp)
        sides = bipartition(h)
        if sides is None:
            raise StructuralDiagnostic("odd-component", "non-bipartite component off N[C]", tuple(sorted(comp)))
        part1 = [v for v in comp if sides[v] == sides[min(comp)]]
        part2 = [v for v in comp if sides[v] != sides[min(comp)]]
        if h.edge_count == len(part1) * len(part2):
            continue
        u, w = min(h.edges())
        reps = {sides[u]: u, sides[w]: w}
        for part in (part1, part2):
            ref = frozenset(x for x in g.neighbors(part[0]) if x in nc)
            for v in part:
                if frozenset(x for x in g.neighbors(v) if x in nc) != ref:
                    raise StructuralDiagnostic(
                        "p4-reduction",
                        f"side vertices {part[0]} and {v} differ on N(C)",
                        (part[0], v),
                    )
        for v in sorted(comp):
            if v not in (u, w):
                log.append(BipartitePartCollapsed(v, reps[sides[v]]))
                doomed.add(v)
    return g.without(doomed) if doomed else g


def _process_cycle(g: Graph, c: CycleC7, log: ExtensionLog) -> Graph:
    cls = classify_cycle(g, c)
    _check_cycle_claims(g, cls)
    g2 = _delete_far(g, c, cls, log)
    g2, _ = remove_comparable_pairs(g2, log)
    if not (c.vertex_set <= g2.vertex_set):
        return g2
    cls2 = classify_cycle(g2, c)
    g3 = _collapse_components(g2, cls2, log)
    if g3 is not g2:
        g3, _ = remove_comparable_pairs(g3, log)
    return g3


def clean(g: Graph) -> Bipartite | Cleaned:
    """Reduce a connected member to a cleaned induced subgraph.

    Returns ``Bipartite`` with a 2-coloring when ``g`` has no induced C7.
    """
    if next(enumerate_induced_c7(g), None) is None:
        col = bipartition(g)
        if col is None:
            raise StructuralDiagnostic("odd-cycle", "odd cycle without an induced C7")
        return Bipartite(col)
    log = ExtensionLog()
    g, _ = remove_comparable_pairs(g, log)
    for _ in range(g.n + 1):
        changed = False
        for c in enumerate_induced_c7(g):
            h = _process_cycle(g, c, log)
            if h.n != g.n:
                g = h
                changed = True
                break
        if not changed:
            return Cleaned(g, log)
    raise StructuralDiagnostic("clean-cap", "cleaning did not converge")


def extend_coloring(log: ExtensionLog | Iterable, c: Coloring) -> Coloring:
    return replay(log, c)


def cleaned_violations(g: Graph) -> list[str]:
    """Reasons ``g`` is not cleaned; empty when it is."""
    out = []
    pair = find_comparable_pair(g)
    if pair is not None:
        out.append(f"comparable pair {pair}")
    for c in enumerate_induced_c7(g):
        try:
            cls = classify_cycle(g, c)
        except StructuralDiagnostic as exc:
            out.append(str(exc))
            continue
        if cls.d2 or cls.beyond:
            out.append(f"cycle {c.vertices}: vertices beyond distance 2")
        rest = g.induced(cls.d_all)
        for comp in connected_components(rest):
            h = rest.induced(comp)
            sides = bipartition(h)
            if sides is None:
                out.append(f"cycle {c.vertices}: odd component {sorted(comp)}")
                continue
            k = sum(1 for v in comp if sides[v] == 1)
            if h.edge_count != k * (len(comp) - k):
                out.append(f"cycle {c.vertices}: component {sorted(comp)} not complete bipartite")
    return out


def require_connected(g: Graph) -> None:
    if len(connected_components(g)) > 1:
        raise InputError("cleaning expects a connected graph")
