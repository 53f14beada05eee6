"""Non-trivial components of ``G - N[C]`` for a cleaned graph and a 7-cycle ``C``.

Each such component is an edge or a complete bipartite graph.  The code here
sorts them into buckets by how their sides attach to the cycle, builds small
vertex sets whose colorings pin the lists inside the components, removes
colors that can never be needed, and streams the resulting restrictions.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field

from .cleaning import CycleClassification, classify_cycle
from .errors import ContractViolation, StructuralDiagnostic
from .graph import CycleC7, Graph, bipartition, connected_components
from .lists import (
    FULL,
    MASK_COLORS,
    POPCOUNT,
    SINGLE_COLOR,
    Restriction,
    cbit,
    fix_masks,
    iter_assignments,
)

BOUNDS = {"t11": 7, "t12": 28, "t13": 42, "t21": 21, "t22": 14, "t24": 238}


# ---------------------------------------------------------------------------
# Small helpers
# ---------------------------------------------------------------------------


def _hits(g: Graph, v: int, s: frozenset[int]) -> frozenset[int]:
    return frozenset(w for w in g.neighbors(v) if w in s)


def _hits_all(g: Graph, vs: Iterable[int], s: frozenset[int]) -> frozenset[int]:
    out: set[int] = set()
    for v in vs:
        out.update(w for w in g.neighbors(v) if w in s)
    return frozenset(out)


def _union(*sets: frozenset[int]) -> frozenset[int]:
    return frozenset().union(*sets)


def _sides(g: Graph, comp: frozenset[int]) -> tuple[frozenset[int], frozenset[int]]:
    h = g.induced(comp)
    col = bipartition(h)
    if col is None:
        raise StructuralDiagnostic("component-shape", "odd component off N[C]", tuple(sorted(comp)))
    first = col[min(comp)]
    p = frozenset(v for v in comp if col[v] == first)
    q = comp - p
    if h.edge_count != len(p) * len(q):
        raise StructuralDiagnostic("component-shape", "component off N[C] is not complete bipartite",
                                   tuple(sorted(comp)))
    return p, q


def _natural(masks: Mapping[int, int], vertices) -> bool:
    return all(POPCOUNT[masks[v]] == 3 for v in vertices)


def nontrivial_components(g: Graph, cls: CycleClassification) -> list[frozenset[int]]:
    rest = g.induced(cls.d_all)
    return [comp for comp in connected_components(rest) if len(comp) >= 2]


def cycle_color(masks: Mapping[int, int], c: CycleC7, k: int) -> int:
    m = masks[c.v(k)]
    if POPCOUNT[m] != 1:
        raise ContractViolation(f"cycle vertex {c.v(k)} has list {list(MASK_COLORS[m])}")
    return SINGLE_COLOR[m]


def check_d_edge_claim(g: Graph, cls: CycleClassification) -> None:
    """Across an edge ``d1 d2`` off ``N[C]``, certain neighbors of ``d2`` see those of ``d1``."""
    d = cls.d_all
    for d1 in sorted(d):
        for d2 in g.neighbors(d1):
            if d2 not in d:
                continue
            for a in g.neighbors(d1):
                k = cls.a_index(a)
                if k is not None:
                    zone = _union(*(cls.a(k + s) for s in (1, -1, 3, -3)), cls.b(k + 2), cls.b(k - 2))
                else:
                    k = cls.b_index(a)
                    if k is None:
                        continue
                    zone = _union(cls.a(k + 2), cls.a(k - 2), cls.b(k + 1), cls.b(k - 1))
                for w in g.neighbors(d2):
                    if w in zone and not g.has_edge(a, w):
                        raise StructuralDiagnostic(
                            "d-edge-claim", f"{a} and {w} across edge {d1}-{d2} are not adjacent",
                            (d1, d2, a, w),
                        )


# ---------------------------------------------------------------------------
# Reducibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReducibleVertex:
    vertex: int
    color: int


@dataclass(frozen=True)
class ReducibleComponent:
    u1: frozenset[int]
    u2: frozenset[int]
    colors: tuple[int, int]


def _seen_colors(g: Graph, masks: Mapping[int, int], vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= masks.get(v, 0)
    return m


def find_reducible(
    g: Graph, cls: CycleClassification, masks: Mapping[int, int]
) -> ReducibleVertex | ReducibleComponent | None:
    for v in sorted(cls.d_all):
        if v not in masks or POPCOUNT[masks[v]] != 3:
            continue
        free = FULL & ~_seen_colors(g, masks, g.neighbors(v))
        if free:
            return ReducibleVertex(v, MASK_COLORS[free][0])
    nc = cls.nc
    for comp in nontrivial_components(g, cls):
        comp = frozenset(v for v in comp if v in masks)
        if len(comp) < 2:
            continue
        u1, u2 = _sides(g, comp)
        if not u1 or not u2:
            continue
        out1 = _seen_colors(g, masks, _hits_all(g, u1, nc))
        out2 = _seen_colors(g, masks, _hits_all(g, u2, nc))
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i == j or out1 & cbit(i) or out2 & cbit(j):
                    continue
                if not all(masks[a] & cbit(i) for a in u1) or not all(masks[b] & cbit(j) for b in u2):
                    continue
                if all(masks[a] == cbit(i) for a in u1) and all(masks[b] == cbit(j) for b in u2):
                    continue
                return ReducibleComponent(u1, u2, (i, j))
    return None


def make_nonreducible(g: Graph, cls: CycleClassification, masks: Mapping[int, int]) -> dict[int, int]:
    """Apply reductions until none is left.  The result may be infeasible."""
    cur = dict(masks)
    while True:
        r = find_reducible(g, cls, cur)
        if r is None:
            return cur
        if isinstance(r, ReducibleVertex):
            fixed = {r.vertex: cbit(r.color)}
        else:
            i, j = r.colors
            fixed = {v: cbit(i) for v in r.u1}
            fixed.update({v: cbit(j) for v in r.u2})
        nxt = fix_masks(g, cur, fixed)
        if nxt is None:
            for v, m in fixed.items():
                cur[v] &= m
            return cur
        cur = nxt


# ---------------------------------------------------------------------------
# Partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """A non-trivial component with its signed side ``signed`` and the other side.

    For an edge ``d1 d2`` the signed side is ``{d1}``.  ``index`` is the
    witness cycle index, ``sign`` records the orientation where the bucket
    distinguishes one.
    """

    vertices: frozenset[int]
    signed: frozenset[int]
    unsigned: frozenset[int]
    index: int | None
    sign: int = 1

    @property
    def key(self) -> int:
        return min(self.vertices)


@dataclass(frozen=True)
class ComponentPartition:
    w1: tuple[Component, ...] = ()
    w2: tuple[Component, ...] = ()
    w3: tuple[Component, ...] = ()
    w4: tuple[Component, ...] = ()
    w5: tuple[Component, ...] = ()
    q1: tuple[Component, ...] = ()
    q2: tuple[Component, ...] = ()
    q3: tuple[Component, ...] = ()
    q4: tuple[Component, ...] = ()

    def buckets(self) -> dict[str, tuple[Component, ...]]:
        return {name: getattr(self, name) for name in ("w1", "w2", "w3", "w4", "w5", "q1", "q2", "q3", "q4")}

    def components(self) -> list[Component]:
        return sorted((k for b in self.buckets().values() for k in b), key=lambda k: k.key)

    def is_empty(self) -> bool:
        return not self.components()


def _edge_bucket(g: Graph, cls: CycleClassification, d1: int, d2: int) -> tuple[str, int, int, int, int]:
    """(bucket, index, sign, signed end, other end) for an order-2 component."""
    a_hit = lambda v, k: bool(_hits(g, v, cls.a(k)))  # noqa: E731
    b_hit = lambda v, k: bool(_hits(g, v, cls.b(k)))  # noqa: E731
    ends = ((d1, d2), (d2, d1))
    for i in range(1, 8):
        for p, q in ends:
            if a_hit(p, i) and a_hit(q, i + 2):
                return "w1", i, 1, p, q
    for i in range(1, 8):
        for p, q in ends:
            if b_hit(p, i) and b_hit(q, i + 3):
                return "w2", i, 1, p, q
    for i in range(1, 8):
        for p, q in ends:
            for s in (1, -1):
                if b_hit(p, i) and a_hit(q, i + 3 * s):
                    return "w3", i, s, p, q
    for i in range(1, 8):
        for p, q in ends:
            if b_hit(p, i) and b_hit(q, i + 1):
                return "w4", i, 1, p, q
    return "w5", 0, 1, d1, d2


def _q_level(g: Graph, cls: CycleClassification, u: frozenset[int], i: int, gap: int) -> bool:
    return bool(_hits_all(g, u, cls.b(i))) and bool(_hits_all(g, u, cls.b(i + gap)))


def partition_components(
    g: Graph, c: CycleC7, cls: CycleClassification, masks: Mapping[int, int] | None = None
) -> ComponentPartition:
    """Bucket every non-trivial component; first match wins.

    With ``masks`` given, an edge component in the last two buckets whose
    lists are all still full is reported as a diagnostic.  A narrowed list
    can block the reducibility argument that keeps those buckets empty, so
    such components are left to residual branching instead.
    """
    check_d_edge_claim(g, cls)
    out: dict[str, list[Component]] = {k: [] for k in ComponentPartition().buckets()}
    big: list[tuple[frozenset[int], frozenset[int], frozenset[int]]] = []
    for comp in nontrivial_components(g, cls):
        if len(comp) == 2:
            d1, d2 = sorted(comp)
            name, i, s, p, q = _edge_bucket(g, cls, d1, d2)
            k = Component(comp, frozenset({p}), frozenset({q}), i or None, s)
            out[name].append(k)
            if name in ("w4", "w5") and masks is not None and _natural(masks, comp):
                raise StructuralDiagnostic(name, f"component {sorted(comp)} falls in {name.upper()}",
                                           tuple(sorted(comp)))
            continue
        p, q = _sides(g, comp)
        big.append((comp, p, q))
    for comp, p, q in big:
        placed = False
        for name, gap in (("q1", 1), ("q2", 3), ("q3", 2)):
            for i in range(1, 8):
                for u1, u2 in ((p, q), (q, p)):
                    if _q_level(g, cls, u1, i, gap):
                        out[name].append(_q_component(g, cls, comp, u1, u2, i, name))
                        placed = True
                        break
                if placed:
                    break
            if placed:
                break
        if not placed:
            u1, u2 = (p, q) if len(p) >= len(q) else (q, p)
            idxs = [i for i in range(1, 8) if _hits_all(g, u1, cls.b(i))]
            out["q4"].append(Component(comp, u1, u2, idxs[0] if idxs else None))
    for i in range(1, 8):
        at_i = [k for k in out["q2"] if k.index == i]
        if len(at_i) > 1:
            raise StructuralDiagnostic("q2-multiple", f"{len(at_i)} components in Q2 at index {i}",
                                       tuple(sorted(v for k in at_i for v in k.vertices)))
    return ComponentPartition(**{k: tuple(sorted(v, key=lambda x: x.key)) for k, v in out.items()})


def _q_component(g, cls, comp, u1, u2, i, name) -> Component:
    if name != "q3":
        return Component(comp, u1, u2, i)
    # every signed vertex shares its neighborhood in B_{i+2} (sign +1) or in B_i (sign -1)
    for s, k in ((1, i + 2), (-1, i)):
        if len({_hits(g, u, cls.b(k)) for u in u1}) == 1:
            return Component(comp, u1, u2, i, s)
    raise StructuralDiagnostic("q3-shape", "signed side differs on both B classes", tuple(sorted(comp)))


# ---------------------------------------------------------------------------
# Dominating sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DominatingSets:
    t11: frozenset[int] = frozenset()
    t12: frozenset[int] = frozenset()
    t13: frozenset[int] = frozenset()
    t21: frozenset[int] = frozenset()
    t22: frozenset[int] = frozenset()
    provenance: dict[int, tuple[str, ...]] = field(default_factory=dict, compare=False)

    def union(self) -> frozenset[int]:
        return self.t11 | self.t12 | self.t13 | self.t21 | self.t22

    def sizes(self) -> dict[str, int]:
        return {k: len(getattr(self, k)) for k in ("t11", "t12", "t13", "t21", "t22")}


def _witness_outside(g: Graph, anchor: int, avoid: int, why: str) -> int:
    """Least neighbor of ``anchor`` that is not adjacent to ``avoid``."""
    cands = [w for w in g.neighbors(anchor) if w != avoid and not g.has_edge(w, avoid)]
    if not cands:
        raise StructuralDiagnostic("missing-witness", f"{why}: N({anchor}) lies inside N({avoid})",
                                   (anchor, avoid))
    return min(cands)


def _minimal(comps: list[Component], key) -> Component:
    """Component whose ``key`` set is smallest; ties by least vertex."""
    return min(comps, key=lambda k: (len(key(k)), sorted(key(k)), k.key))


def _dominated(g: Graph, comp: Component, t: frozenset[int]) -> bool:
    return any(v in t or any(w in t for w in g.neighbors(v)) for v in comp.vertices)


def build_dominating_sets(g: Graph, c: CycleC7, cls: CycleClassification, part: ComponentPartition) -> DominatingSets:
    prov: dict[int, list[str]] = {}

    def add(target: set[int], vs: Iterable[int], why: str) -> None:
        for v in vs:
            target.add(v)
            prov.setdefault(v, []).append(why)

    t11: set[int] = set()
    for k in part.w1:
        add(t11, [min(cls.a(k.index))], "K2(a)")

    t12: set[int] = set()
    for i in range(1, 8):
        group = [k for k in part.w2 if k.index == i]
        if not group:
            continue
        one = lambda k: next(iter(k.signed))  # noqa: E731
        two = lambda k: next(iter(k.unsigned))  # noqa: E731
        d = _minimal(group, lambda k: _hits(g, one(k), cls.b(i)))
        dp = _minimal(group, lambda k: _hits(g, two(k), cls.b(i + 3)))
        b_i = min(_hits(g, one(d), cls.b(i)))
        b_i3 = min(_hits(g, two(d), cls.b(i + 3)))
        bp_i = min(_hits(g, one(dp), cls.b(i)))
        bp_i3 = min(_hits(g, two(dp), cls.b(i + 3)))
        w1 = _witness_outside(g, c.v(i + 3), b_i3, "K2(b)")
        w2 = _witness_outside(g, c.v(i), bp_i, "K2(b)")
        add(t12, [b_i, bp_i3, w1, w2], f"K2(b) i={i}")

    t13: set[int] = set()
    for i in range(1, 8):
        for s in (1, -1):
            group = [k for k in part.w3 if k.index == i and k.sign == s]
            if not group:
                continue
            one = lambda k: next(iter(k.signed))  # noqa: E731
            two = lambda k: next(iter(k.unsigned))  # noqa: E731
            d = _minimal(group, lambda k: _hits(g, one(k), cls.b(i)))
            dp = _minimal(group, lambda k: _hits(g, two(k), cls.a(i + 3 * s)))
            b_i = min(_hits(g, one(d), cls.b(i)))
            ap = min(_hits(g, two(dp), cls.a(i + 3 * s)))
            w1 = _witness_outside(g, c.v(i), b_i, "K2(c)")
            add(t13, [b_i, ap, w1], f"K2(c) i={i} sign={s:+d}")

    nc = cls.nc
    t21: set[int] = set()
    for i in range(1, 8):
        group = [k for k in part.q1 if k.index == i]
        if not group:
            continue
        k = group[0]
        x = min(u for u in k.signed if _hits(g, u, cls.b(i)))
        y = min(u for u in k.signed if _hits(g, u, cls.b(i + 1)))
        zs = [u for u in sorted(k.unsigned) if _hits(g, u, nc)]
        if not zs:
            raise StructuralDiagnostic("missing-witness", "Q1 unsigned side misses N(C)", tuple(sorted(k.vertices)))
        add(t21, [min(_hits(g, x, cls.b(i))), min(_hits(g, y, cls.b(i + 1))), min(_hits(g, zs[0], nc))],
            f"Q1 i={i}")

    t22: set[int] = set()
    for k in part.q2:
        x = min(u for u in k.signed if _hits(g, u, cls.b(k.index)))
        add(t22, [x, min(k.unsigned)], f"Q2 i={k.index}")

    ds = DominatingSets(frozenset(t11), frozenset(t12), frozenset(t13), frozenset(t21), frozenset(t22),
                        {v: tuple(w) for v, w in prov.items()})
    for name, bound in BOUNDS.items():
        if name != "t24" and len(getattr(ds, name)) > bound:
            raise StructuralDiagnostic("bound", f"|{name}| = {len(getattr(ds, name))} exceeds {bound}")
    for fam, t in ((part.w1, ds.t11), (part.w2, ds.t12), (part.w3, ds.t13), (part.q1, ds.t21), (part.q2, ds.t22)):
        for k in fam:
            if not _dominated(g, k, t):
                raise StructuralDiagnostic("domination", f"component {sorted(k.vertices)} is not dominated",
                                           tuple(sorted(k.vertices)))
    return ds


# ---------------------------------------------------------------------------
# Color removals
# ---------------------------------------------------------------------------


def _active(masks: Mapping[int, int], comp: Component) -> bool:
    return any(POPCOUNT[masks.get(v, 0)] == 3 for v in comp.vertices)


def reduce_q3(
    g: Graph, c: CycleC7, cls: CycleClassification, part: ComponentPartition, masks: Mapping[int, int]
) -> dict[int, int] | None:
    """Drop the colors a Q3 component can always avoid.  ``None`` if a list empties."""
    fixed: dict[int, int] = {}
    for k in part.q3:
        if not _active(masks, k):
            continue
        i = k.index
        # sign -1 mirrors the cycle so that B_i and B_{i+2} trade places
        m = (lambda j: j) if k.sign == 1 else (lambda j, i=i: 2 * i + 2 - j)
        col = lambda j: cycle_color(masks, c, m(j))  # noqa: E731
        first, third = col(i + 1), col(i + 3)
        if first != third:
            for v in k.unsigned:
                fixed[v] = fixed.get(v, FULL) & ~cbit(first)
            continue
        for v in k.unsigned:
            fixed[v] = fixed.get(v, FULL) & ~cbit(first)
        if col(i - 1) == first:
            for v in k.signed:
                fixed[v] = fixed.get(v, FULL) & cbit(first)
    if not fixed:
        return dict(masks)
    return fix_masks(g, masks, fixed)


@dataclass(frozen=True)
class Q4Result:
    masks: dict[int, int] | None
    t24: frozenset[int]
    groups: dict[str, tuple[int, ...]]


def _common_neighbor(g, members: Iterable[int], pool: frozenset[int], why: str) -> int:
    common = set(pool)
    for u in members:
        common &= _hits(g, u, pool)
    if not common:
        raise StructuralDiagnostic("q4-witness", f"{why}: no vertex sees every member", tuple(sorted(members)))
    return min(common)


def _all_but_one(g, comps: list[Component], side, pool: frozenset[int], why: str) -> tuple[int, Component | None]:
    """A vertex of ``pool`` seeing the chosen side of every component but at most one."""
    for b in sorted(pool):
        missed = [k for k in comps if not all(g.has_edge(b, u) for u in side(k))]
        if len(missed) <= 1:
            return b, (missed[0] if missed else None)
    raise StructuralDiagnostic("q4-witness", f"{why}: no vertex covers all but one component",
                               tuple(sorted(v for k in comps for v in k.vertices)))


def _edge_of(g: Graph, k: Component | None) -> list[int]:
    if k is None:
        return []
    u = min(k.signed)
    return [u, min(w for w in g.neighbors(u) if w in k.unsigned)]


def reduce_q4(
    g: Graph, c: CycleC7, cls: CycleClassification, part: ComponentPartition, masks: Mapping[int, int]
) -> Q4Result:
    nc = cls.nc
    t24: set[int] = set()
    groups: dict[str, list[int]] = {}
    fixed: dict[int, int] = {}
    for i in range(1, 8):
        at_i = [k for k in part.q4 if k.index == i]
        buckets: dict[tuple, list[Component]] = {}
        for k in at_i:
            u2n = _hits_all(g, k.unsigned, nc)
            u1n = _hits_all(g, k.signed, nc)
            if u2n & cls.a(i + 3):
                key = ("1", 1)
            elif u2n & cls.a(i - 3):
                key = ("1", -1)
            elif u2n & cls.b(i + 3):
                key = ("2", 1)
            elif u2n & cls.b(i - 3):
                key = ("2", -1)
            elif u2n <= _union(cls.b(i - 1), cls.a(i), cls.b(i + 1)):
                if u1n & cls.a(i + 3):
                    key = ("3,1", 1)
                elif u1n & cls.a(i - 3):
                    key = ("3,1", -1)
                else:
                    continue  # reducible: the signed side sees one side of v_i only
            elif u2n <= _union(cls.a(i - 2), cls.b(i - 1), cls.b(i + 1), cls.a(i + 2)):
                if u1n <= _union(cls.a(i - 1), cls.b(i), cls.a(i + 3)):
                    key = ("3,2", 1)
                elif u1n <= _union(cls.a(i - 3), cls.b(i), cls.a(i + 1)):
                    key = ("3,2", -1)
                elif _natural(masks, k.vertices):
                    raise StructuralDiagnostic("q4-shape", "signed side of a Q4 component straddles v_i",
                                               tuple(sorted(k.vertices)))
                else:
                    continue
            elif _natural(masks, k.vertices):
                raise StructuralDiagnostic("q4-shape", "unsigned side of a Q4 component has no admissible attachment",
                                           tuple(sorted(k.vertices)))
            else:
                continue
            buckets.setdefault(key, []).append(k)
        for (kind, s), comps in sorted(buckets.items(), key=lambda kv: (kv[0][0], -kv[0][1])):
            label = f"Q4 i={i} {kind} {'+' if s == 1 else '-'}"
            groups[label] = tuple(k.key for k in comps)
            if kind == "1":
                pool = cls.a(i + 3 * s)
                a = _common_neighbor(g, [u for k in comps for u in k.unsigned], pool, label)
                b, k1 = _all_but_one(g, comps, lambda k: k.signed, cls.b(i), label)
                t24.update([a, b, *_edge_of(g, k1)])
            elif kind == "2":
                b, k1 = _all_but_one(g, comps, lambda k: k.unsigned, cls.b(i + 3 * s), label)
                w = _witness_outside(g, c.v(i + 3 * s), b, label)
                rest = [k for k in comps if k is not k1]
                extra: list[int] = []
                if rest:
                    v = min((u for k in rest for u in k.signed if _hits(g, u, cls.b(i))),
                            key=lambda u: (len(_hits(g, u, cls.b(i))), u))
                    k2 = next(k for k in rest if v in k.signed)
                    extra = [min(_hits(g, v, cls.b(i))), min(k2.unsigned)]
                t24.update([b, w, *extra, *_edge_of(g, k1)])
            elif kind == "3,1":
                b, k1 = _all_but_one(g, comps, lambda k: k.unsigned, cls.b(i - s), label)
                w = _witness_outside(g, c.v(i - s), b, label)
                rest = [k for k in comps if k is not k1]
                extra = []
                if rest:
                    pool = cls.a(i + 3 * s)
                    cand = [u for k in rest for u in k.signed if _hits(g, u, pool)]
                    if cand:
                        v = min(cand, key=lambda u: (len(_hits(g, u, pool)), u))
                        extra = [min(_hits(g, v, pool))]
                t24.update([b, w, *extra, *_edge_of(g, k1)])
            else:
                for k in comps:
                    if not _active(masks, k):
                        continue
                    col = lambda j: cycle_color(masks, c, i + s * j)  # noqa: E731
                    alpha, beta = col(-1), col(0)
                    if col(1) != alpha or col(2) != beta:
                        continue
                    if col(-2) == beta and col(3) == alpha:
                        continue
                    for v in k.signed:
                        fixed[v] = fixed.get(v, FULL) & ~cbit(beta)
                    for v in k.unsigned:
                        fixed[v] = fixed.get(v, FULL) & ~cbit(alpha)
    if len(t24) > BOUNDS["t24"]:
        raise StructuralDiagnostic("bound", f"|t24| = {len(t24)} exceeds {BOUNDS['t24']}")
    new = fix_masks(g, masks, fixed) if fixed else dict(masks)
    return Q4Result(new, frozenset(t24), groups)


# ---------------------------------------------------------------------------
# The stream
# ---------------------------------------------------------------------------


@dataclass
class YStats:
    """Counters shared by a run; the pipeline reports them."""

    residual_branches: int = 0
    sizes: dict[str, int] = field(default_factory=dict)

    def record(self, name: str, size: int) -> None:
        self.sizes[name] = max(self.sizes.get(name, 0), size)


def _component_vertices(g: Graph, cls: CycleClassification) -> frozenset[int]:
    return _union(*nontrivial_components(g, cls)) if cls.d_all else frozenset()


def lemma_y_restrictions(parent: Restriction, c: CycleC7, stats: YStats | None = None) -> Iterator[Restriction]:
    """Restrictions of ``parent`` with every non-trivial-component list of length at most two.

    ``parent`` is colorable exactly when some yielded restriction is.
    """
    g = parent.subgraph
    for k in range(1, 8):
        if c.v(k) not in parent.masks:
            raise ContractViolation(f"cycle vertex {c.v(k)} is not kept")
        cycle_color(parent.masks, c, k)
    if not parent.feasible:
        return
    cls = classify_cycle(g, c)
    masks = make_nonreducible(g, cls, parent.masks)
    if not all(masks.values()):
        return
    part = partition_components(g, c, cls, masks)
    if part.is_empty():
        yield parent.derive(masks, tag="Y")
        return
    dom = build_dominating_sets(g, c, cls, part)
    q4 = reduce_q4(g, c, cls, part, masks)
    if stats is not None:
        for name, size in dom.sizes().items():
            stats.record(name, size)
        stats.record("t24", len(q4.t24))
    if q4.masks is None:
        return
    inside = _component_vertices(g, cls)
    pinned = dom.union()
    for m2 in iter_assignments(g, q4.masks, q4.t24):
        m2 = make_nonreducible(g, cls, m2)
        if not all(m2.values()):
            continue
        m3 = reduce_q3(g, c, cls, part, m2)
        if m3 is None:
            continue
        for m4 in iter_assignments(g, m3, pinned):
            left = [v for v in inside if POPCOUNT[m4[v]] == 3]
            if not left:
                yield parent.derive(m4, tag="Y")
                continue
            if stats is not None:
                stats.residual_branches += 1
            for m5 in iter_assignments(g, m4, left):
                yield parent.derive(m5, tag="Y-residual")
