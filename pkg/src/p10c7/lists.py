"""Palettes, monochromatic sets, restrictions and the 2-SAT finisher.

Lists are subsets of ``{1, 2, 3}``.  Public functions take and return
``dict[int, frozenset[int]]``; the search code works on bit masks
(color ``k`` is bit ``k - 1``) through the ``*_masks`` helpers, which is
where the time goes.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import ContractViolation, InputError
from .extension import LiftStep
from .graph import Coloring, Graph

Palette = dict[int, frozenset[int]]
MonoSets = tuple[frozenset[int], ...]

FULL = 0b111
MASK_COLORS = {m: tuple(k for k in (1, 2, 3) if m >> (k - 1) & 1) for m in range(8)}
POPCOUNT = {m: len(MASK_COLORS[m]) for m in range(8)}
SINGLE_COLOR = {1: 1, 2: 2, 4: 3}

DEBUG = os.environ.get("P10C7_DEBUG", "") not in ("", "0")


def cbit(color: int) -> int:
    return 1 << (color - 1)


def to_mask(colors: Iterable[int]) -> int:
    m = 0
    for k in colors:
        if k not in (1, 2, 3):
            raise InputError(f"color {k} is not in {{1, 2, 3}}")
        m |= 1 << (k - 1)
    return m


def to_masks(p: Mapping[int, Iterable[int]]) -> dict[int, int]:
    return {v: to_mask(cs) for v, cs in p.items()}


def from_masks(masks: Mapping[int, int]) -> Palette:
    return {v: frozenset(MASK_COLORS[m]) for v, m in masks.items()}


def full_palette(g: Graph) -> Palette:
    return {v: frozenset((1, 2, 3)) for v in g.vertices}


# ---------------------------------------------------------------------------
# Updating
# ---------------------------------------------------------------------------


def propagate(g: Graph, masks: dict[int, int], seeds: Iterable[int] | None = None) -> bool:
    """Singleton propagation in place over the vertices keyed in ``masks``.

    Neighbors outside ``masks`` are ignored, so ``g`` may be a supergraph.
    Returns ``False`` as soon as a list becomes empty.
    """
    if seeds is None:
        stack = [v for v, m in masks.items() if POPCOUNT[m] == 1]
    else:
        stack = [v for v in seeds if POPCOUNT[masks[v]] == 1]
    if any(m == 0 for m in masks.values()):
        return False
    while stack:
        v = stack.pop()
        b = masks[v]
        for w in g.neighbors(v):
            mw = masks.get(w)
            if mw is None or not mw & b:
                continue
            mw &= ~b
            masks[w] = mw
            if mw == 0:
                return False
            if POPCOUNT[mw] == 1:
                stack.append(w)
    return True


def update_palette(g: Graph, p: Mapping[int, Iterable[int]]) -> Palette:
    if set(p) != g.vertex_set:
        raise InputError("palette domain differs from the vertex set")
    masks = to_masks(p)
    propagate(g, masks)
    return from_masks(masks)


def is_infeasible(p: Mapping[int, Iterable[int]]) -> bool:
    return any(not set(cs) for cs in p.values())


# ---------------------------------------------------------------------------
# Monochromatic sets
# ---------------------------------------------------------------------------


def merge_mono_sets(sets: Iterable[Iterable[int]]) -> MonoSets:
    """Union overlapping sets; singletons and empties are dropped.

    Equal color is transitive, so the merged family carries the same
    constraint as the input.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for s in sets:
        members = sorted(set(s))
        for v in members:
            parent.setdefault(v, v)
        for v in members[1:]:
            a, b = find(members[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return tuple(sorted((frozenset(gr) for gr in groups.values() if len(gr) > 1), key=min))


def _check_disjoint(z: Sequence[Iterable[int]]) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for s in z:
        s = frozenset(s)
        if seen & s:
            raise ContractViolation(f"mono-sets overlap on {sorted(seen & s)}")
        seen |= s
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# 2-SAT
# ---------------------------------------------------------------------------


def _tarjan(n_nodes: int, succ: list[list[int]]) -> list[int]:
    """Iterative Tarjan; component ids come out in reverse topological order."""
    index = [-1] * n_nodes
    low = [0] * n_nodes
    on_stack = [False] * n_nodes
    comp = [-1] * n_nodes
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n_nodes):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pos = work[-1]
            if pos < len(succ[v]):
                work[-1] = (v, pos + 1)
                w = succ[v][pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
    return comp


def solve_2sat_masks(g: Graph, masks: Mapping[int, int], mono: Iterable[frozenset[int]] = ()) -> Coloring | None:
    """Colour the vertices keyed in ``masks`` (lists of size at most two).

    ``mono`` must be pairwise disjoint; members outside ``masks`` are ignored.
    Each mono-set is contracted to one variable whose list is the
    intersection of its members' lists.
    """
    rep: dict[int, int] = {v: v for v in masks}
    for s in mono:
        present = sorted(v for v in s if v in masks)
        for v in present:
            rep[v] = present[0]
    glist: dict[int, int] = {}
    for v, m in masks.items():
        r = rep[v]
        glist[r] = glist.get(r, FULL) & m
    for r, m in glist.items():
        if m == 0:
            return None
        if POPCOUNT[m] == 3:
            raise ContractViolation(f"vertex {r} has a list of size 3")
    groups = sorted(glist)
    var = {r: k for k, r in enumerate(groups)}
    lit_color = []  # (color when false, color when true)
    for r in groups:
        cs = MASK_COLORS[glist[r]]
        lit_color.append((cs[0], cs[-1]))
    n = len(groups)
    succ: list[list[int]] = [[] for _ in range(2 * n)]

    def node(x: int, value: bool) -> int:
        return 2 * x + (1 if value else 0)

    def forbid(x: int, a: bool, y: int, b: bool) -> None:
        # clause: not (x == a and y == b)
        succ[node(x, a)].append(node(y, not b))
        succ[node(y, b)].append(node(x, not a))

    for k, r in enumerate(groups):
        if POPCOUNT[glist[r]] == 1:
            succ[node(k, True)].append(node(k, False))
    for u in masks:
        ru = rep[u]
        for w in g.neighbors(u):
            if w not in masks or w < u:
                continue
            rw = rep[w]
            if ru == rw:
                return None
            x, y = var[ru], var[rw]
            for a in (False, True):
                for b in (False, True):
                    if lit_color[x][a] == lit_color[y][b]:
                        forbid(x, a, y, b)
    comp = _tarjan(2 * n, succ)
    value = []
    for k in range(n):
        f, t = comp[node(k, False)], comp[node(k, True)]
        if f == t:
            return None
        value.append(t < f)
    return {v: lit_color[var[rep[v]]][value[var[rep[v]]]] for v in masks}


def solve_2sat_lists(g: Graph, p: Mapping[int, Iterable[int]], z: Iterable[Iterable[int]] = ()) -> Coloring | None:
    if set(p) != g.vertex_set:
        raise InputError("palette domain differs from the vertex set")
    sets = _check_disjoint(list(z))
    for s in sets:
        if not s <= g.vertex_set:
            raise ContractViolation(f"mono-set {sorted(s)} leaves the vertex set")
    return solve_2sat_masks(g, to_masks(p), sets)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def verify_coloring(
    g: Graph,
    c: Mapping[int, int],
    p: Mapping[int, Iterable[int]] | None = None,
    z: Iterable[Iterable[int]] | None = None,
) -> bool:
    if set(c) != g.vertex_set:
        raise InputError("coloring domain differs from the vertex set")
    for u, w in g.edges():
        if c[u] == c[w]:
            return False
    if any(k not in (1, 2, 3) for k in c.values()):
        return False
    if p is not None:
        for v, cs in p.items():
            if v in c and c[v] not in set(cs):
                return False
    if z is not None:
        for s in z:
            if len({c[v] for v in s if v in c}) > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# Restrictions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Restriction:
    """A restriction of an instance on ``graph``.

    The kept vertices are the keys of ``masks``.  ``lift`` is the chain of
    undo records from the root instance down to this one, oldest first.
    """

    graph: Graph
    masks: Mapping[int, int]
    mono: MonoSets = ()
    lift: tuple[LiftStep, ...] = ()
    tags: tuple[str, ...] = field(default=(), compare=False)

    @property
    def kept_vertices(self) -> frozenset[int]:
        return frozenset(self.masks)

    @property
    def palette(self) -> Palette:
        return from_masks(self.masks)

    @property
    def subgraph(self) -> Graph:
        return self.graph.induced(self.masks)

    @property
    def feasible(self) -> bool:
        return all(self.masks.values())

    def max_list(self) -> int:
        return max((POPCOUNT[m] for m in self.masks.values()), default=0)

    def derive(
        self,
        masks: Mapping[int, int] | None = None,
        add_mono: Iterable[Iterable[int]] = (),
        steps: Iterable[LiftStep] = (),
        tag: str | None = None,
    ) -> Restriction:
        new_masks = dict(self.masks if masks is None else masks)
        mono = self.mono
        extra = [frozenset(s) for s in add_mono]
        if extra or masks is not None:
            kept = [frozenset(v for v in s if v in new_masks) for s in (*mono, *extra)]
            mono = merge_mono_sets(kept)
        child = Restriction(
            self.graph,
            new_masks,
            mono,
            self.lift + tuple(steps),
            self.tags + ((tag,) if tag else ()),
        )
        if DEBUG:
            check_restriction(self, child)
        return child


def root_restriction(g: Graph, p: Mapping[int, Iterable[int]] | None = None) -> Restriction:
    masks = {v: FULL for v in g.vertices} if p is None else to_masks(p)
    if set(masks) != g.vertex_set:
        raise InputError("palette domain differs from the vertex set")
    return Restriction(g, masks)


def check_restriction(parent: Restriction, child: Restriction) -> None:
    keep = child.masks
    extra = set(keep) - set(parent.masks)
    if extra:
        raise ContractViolation(f"clause (a): vertices {sorted(extra)} are not in the parent")
    for v, m in keep.items():
        if m & ~parent.masks[v]:
            raise ContractViolation(f"clause (b): list of {v} grows")
    for s in parent.mono:
        inner = frozenset(v for v in s if v in keep)
        if len(inner) > 1 and not any(inner <= t for t in child.mono):
            raise ContractViolation(f"clause (c): mono-set {sorted(inner)} is not covered")


def make_restriction(
    parent: Restriction,
    keep: Iterable[int],
    subpalette: Mapping[int, Iterable[int]],
    mono: Iterable[Iterable[int]],
    lift: Iterable[LiftStep] = (),
) -> Restriction:
    keep = frozenset(keep)
    if set(subpalette) != keep:
        raise ContractViolation("subpalette domain differs from the kept vertices")
    masks = to_masks(subpalette)
    child = Restriction(
        parent.graph,
        masks,
        merge_mono_sets(frozenset(v for v in s if v in keep) for s in mono),
        parent.lift + tuple(lift),
        parent.tags,
    )
    check_restriction(parent, child)
    return child


# ---------------------------------------------------------------------------
# Palette enumeration helpers
# ---------------------------------------------------------------------------


def fix_masks(g: Graph, masks: Mapping[int, int], fixed: Mapping[int, int]) -> dict[int, int] | None:
    """Copy of ``masks`` with ``fixed`` (vertex -> mask) intersected in, updated.

    ``None`` when some list empties.
    """
    out = dict(masks)
    for v, m in fixed.items():
        out[v] &= m
    if not propagate(g, out, fixed):
        return None
    return out


def iter_assignments(g: Graph, masks: Mapping[int, int], vertices: Iterable[int]) -> Iterator[dict[int, int]]:
    """Every way to give ``vertices`` singleton lists, updated, skipping dead ends.

    Order is lexicographic over ascending vertices and colors.  Vertices
    already fixed by earlier choices contribute their one color.
    """
    order = sorted(set(v for v in vertices if v in masks))

    def rec(k: int, cur: dict[int, int]) -> Iterator[dict[int, int]]:
        if k == len(order):
            yield cur
            return
        v = order[k]
        for color in MASK_COLORS[cur[v]]:
            nxt = fix_masks(g, cur, {v: cbit(color)})
            if nxt is not None:
                yield from rec(k + 1, nxt)

    start = dict(masks)
    if propagate(g, start):
        yield from rec(0, start)
