"""Decide 3-colorability of a member of the class and build a coloring.

Each connected component is cleaned first.  A cleaned component with an
induced 7-cycle is then split into restrictions by guessing how one of its
7-cycles is colored; every restriction ends with lists of length at most two
and is finished by the 2-SAT backend.  The first colorable restriction is
lifted back through every deletion record and checked on the input graph.
"""

from __future__ import annotations

import itertools
import os
import time
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .cleaning import Bipartite, classify_cycle, clean, extend_coloring
from .components import YStats, lemma_y_restrictions, make_nonreducible
from .errors import ExtensionError, InputError, StructuralDiagnostic
from .extension import IsolatedMonoDeleted, replay
from .graph import CycleC7, Graph, bipartition, connected_components, enumerate_induced_c7
from .isolated import lemma_one_set_restrictions, mono_restriction
from .lists import (
    FULL,
    MASK_COLORS,
    POPCOUNT,
    SINGLE_COLOR,
    Restriction,
    cbit,
    fix_masks,
    iter_assignments,
    propagate,
    root_restriction,
    solve_2sat_masks,
    verify_coloring,
)
from .membership import MembershipReport, check_membership

Coloring = dict[int, int]

# ---------------------------------------------------------------------------
# Colorings of a single 7-cycle
# ---------------------------------------------------------------------------

BASE_PATTERNS = {
    "I": (1, 2, 3, 1, 3, 2, 3),
    "II": (1, 2, 3, 2, 3, 1, 3),
    "III": (1, 2, 3, 2, 3, 2, 3),
}


@dataclass(frozen=True)
class ColoringType:
    tag: str

    @property
    def base_pattern(self) -> str:
        word = "".join("ijk"[k - 1] for k in BASE_PATTERNS[self.tag])
        return word + word[0]


TYPE_I, TYPE_II, TYPE_III = ColoringType("I"), ColoringType("II"), ColoringType("III")
TYPES = (TYPE_I, TYPE_II, TYPE_III)


def _symmetries(seq: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for start in range(7):
        for step in (1, -1):
            yield tuple(seq[(start + step * k) % 7] for k in range(7))


def _relabel(seq: Sequence[int]) -> tuple[int, ...]:
    names: dict[int, int] = {}
    return tuple(names.setdefault(k, len(names) + 1) for k in seq)


def classify_c7_coloring(colors: Sequence[int]) -> ColoringType:
    """Type of a proper coloring given in cycle order ``v1..v7``."""
    seq = tuple(colors)
    if len(seq) != 7 or any(k not in (1, 2, 3) for k in seq):
        raise InputError("expected seven colors from {1, 2, 3}")
    if any(seq[k] == seq[(k + 1) % 7] for k in range(7)):
        raise InputError("the coloring is not proper on the cycle")
    forms = {_relabel(s) for s in _symmetries(seq)}
    hits = [t for t in TYPES if BASE_PATTERNS[t.tag] in forms]
    if len(hits) != 1:
        raise StructuralDiagnostic("c7-type", f"coloring {seq} matches {len(hits)} types")
    return hits[0]


def _oriented_palettes(g: Graph, c: CycleC7, t: ColoringType) -> Iterator[tuple[CycleC7, dict[int, int]]]:
    """(orientation, updated masks) for every coloring of ``c`` of type ``t``.

    The orientation puts the coloring in the base pattern, up to renaming colors.
    """
    seen: set[tuple[int, ...]] = set()
    base = BASE_PATTERNS[t.tag]
    for start in range(1, 8):
        for step in (1, -1):
            oc = c.oriented(start, step)
            for perm in itertools.permutations((1, 2, 3)):
                fixed = {oc.v(k + 1): perm[base[k] - 1] for k in range(7)}
                key = tuple(fixed[v] for v in c.vertices)
                if key in seen:
                    continue
                seen.add(key)
                masks = {v: FULL for v in g.vertices}
                for v, col in fixed.items():
                    masks[v] = cbit(col)
                if propagate(g, masks, fixed):
                    yield oc, masks


def enumerate_cycle_palettes(g: Graph, c: CycleC7, t: ColoringType) -> Iterator[dict[int, tuple[int, ...]]]:
    for _, masks in _oriented_palettes(g, c, t):
        yield {v: MASK_COLORS[m] for v, m in masks.items()}


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


@dataclass
class SolveStats:
    cycles: int = 0
    palettes: int = 0
    leaves: int = 0
    duplicate_leaves: int = 0
    residual_leaves: int = 0
    components: int = 0
    elapsed: float = 0.0
    y: YStats = field(default_factory=YStats)

    def as_dict(self) -> dict:
        return {
            "cycles": self.cycles,
            "palettes": self.palettes,
            "leaves": self.leaves,
            "duplicate_leaves": self.duplicate_leaves,
            "residual_leaves": self.residual_leaves,
            "residual_y_branches": self.y.residual_branches,
            "components": self.components,
            "elapsed": round(self.elapsed, 4),
            "set_sizes": dict(self.y.sizes),
        }


@dataclass(frozen=True)
class Colorable:
    coloring: Coloring
    stats: SolveStats = field(compare=False)


@dataclass(frozen=True)
class NotColorable:
    stats: SolveStats = field(compare=False)


@dataclass(frozen=True)
class BudgetExceeded:
    stats: SolveStats = field(compare=False)


@dataclass(frozen=True)
class NotMember:
    report: MembershipReport


SolveResult = Colorable | NotColorable | BudgetExceeded | NotMember


@dataclass(frozen=True)
class Budget:
    leaves: int = 10**7
    seconds: float = 60.0

    @classmethod
    def from_env(cls) -> Budget:
        """``P10C7_BUDGET`` holds ``leaves`` or ``leaves:seconds``."""
        raw = os.environ.get("P10C7_BUDGET", "").strip()
        if not raw:
            return cls()
        head, _, tail = raw.partition(":")
        try:
            return cls(int(head), float(tail) if tail else cls.seconds)
        except ValueError:
            raise InputError(f"bad P10C7_BUDGET value {raw!r}") from None


class _OutOfBudget(Exception):
    pass


# ---------------------------------------------------------------------------
# Restriction streams
# ---------------------------------------------------------------------------


class _Run:
    """State of one solve call on one cleaned, connected, non-bipartite graph."""

    def __init__(self, h: Graph, stats: SolveStats, budget: Budget, deadline: float) -> None:
        self.h = h
        self.stats = stats
        self.budget = budget
        self.deadline = deadline
        self.seen: set = set()

    # -- helpers ---------------------------------------------------------

    def col(self, r: Restriction, c: CycleC7, k: int) -> int:
        return SINGLE_COLOR[r.masks[c.v(k)]]

    def nonreducible(self, r: Restriction, c: CycleC7) -> Restriction | None:
        if not r.feasible or not c.vertex_set <= r.kept_vertices:
            return None
        cls = classify_cycle(r.subgraph, c)
        masks = make_nonreducible(r.subgraph, cls, r.masks)
        if not all(masks.values()):
            return None
        return r.derive(masks)

    def xbar(self, r: Restriction, c: CycleC7) -> dict[int, list[int]]:
        cls = classify_cycle(r.subgraph, c)
        return {k: sorted(x for x in cls.x(k) if POPCOUNT[r.masks[x]] == 3) for k in range(1, 8)}

    def fix(self, r: Restriction, fixed: Mapping[int, int], tag: str) -> Restriction | None:
        masks = fix_masks(r.subgraph, r.masks, fixed)
        return None if masks is None else r.derive(masks, tag=tag)

    def one_set(self, r: Restriction, c: CycleC7, i: int) -> Iterator[Restriction]:
        for r1 in lemma_one_set_restrictions(r, c, i):
            r2 = self.nonreducible(r1, c)
            if r2 is not None:
                yield r2

    def y(self, r: Restriction | None, c: CycleC7) -> Iterator[Restriction]:
        if r is None:
            return
        yield from lemma_y_restrictions(r, c, self.stats.y)

    def y_both(self, r: Restriction | None, c: CycleC7, cp: CycleC7 | None) -> Iterator[Restriction]:
        """The component stream for ``c``, then for ``cp`` once its lists are pinned."""
        for r1 in self.y(r, c):
            if cp is None or not cp.vertex_set <= r1.kept_vertices:
                yield r1
                continue
            loose = [v for v in cp.vertices if POPCOUNT[r1.masks[v]] > 1]
            for masks in iter_assignments(r1.subgraph, r1.masks, loose):
                yield from self.y(self.nonreducible(r1.derive(masks, tag="C'"), cp), cp)

    # -- type I ----------------------------------------------------------

    def type_one(self, r0: Restriction, c: CycleC7) -> Iterator[Restriction]:
        r = self.nonreducible(r0, c)
        if r is None:
            return
        xs = self.xbar(r, c)
        if xs[2] and not xs[1]:
            c = c.oriented(2, -1)
            xs = self.xbar(r, c)
        if xs[1]:
            if xs[2] or xs[3]:
                raise StructuralDiagnostic("x-bar", "X1 together with X2 or X3 has long lists",
                                           tuple(xs[1] + xs[2] + xs[3]))
            if not xs[7]:
                for r1 in self.one_set(r, c, 1):
                    yield from self.y(r1, c)
                return
            yield from self._x1_pairs(r, c, xs[1])
            cls = None
            for r1 in self.one_set(r, c, 7):
                cls = classify_cycle(r1.subgraph, c)
                yield from self.y(self.nonreducible(mono_restriction(r1, c, cls, 1, tag="X1-mono"), c), c)
            return
        yield from self._x3_x7(r, c, xs)

    def _x1_pairs(self, r: Restriction, c: CycleC7, x1: list[int]) -> Iterator[Restriction]:
        g = r.subgraph
        cls = classify_cycle(g, c)
        one = cbit(self.col(r, c, 1))
        done: set[tuple[int, int]] = set()
        for x in x1:
            for a6 in (w for w in g.neighbors(x) if w in cls.side_minus(1)):
                for a3 in (w for w in g.neighbors(x) if w in cls.side_plus(1)):
                    if (a6, a3) in done:
                        continue
                    done.add((a6, a3))
                    branch = self.fix(r, {a6: one, a3: one}, "a6a3")
                    if branch is None:
                        continue
                    cp = CycleC7((x, a3, c.v(3), c.v(4), c.v(5), c.v(6), a6), canonical=False)
                    cp = cp if cp.is_induced_in(g) else None
                    for r1 in self.one_set(branch, c, 1):
                        yield from self.y_both(r1, c, cp)

    def _x3_x7(self, r: Restriction, c: CycleC7, xs: dict[int, list[int]]) -> Iterator[Restriction]:
        if xs[3] and xs[7]:
            yield from self._x3_branch(r, c, xs[3])
            flip = c.oriented(2, -1)
            yield from self._x3_branch(r, flip, self.xbar(r, flip)[3])
            g = r.subgraph
            cls = classify_cycle(g, c)
            fixed: dict[int, int] = {}
            for x in xs[3]:
                if any(w in cls.a(1) for w in g.neighbors(x)):
                    fixed[x] = FULL & ~cbit(self.col(r, c, 2))
            for x in xs[7]:
                if any(w in cls.a(2) for w in g.neighbors(x)):
                    fixed[x] = fixed.get(x, FULL) & ~cbit(self.col(r, c, 1))
            yield from self.y(self.nonreducible(self.fix(r, fixed, "X3X7") or _dead(r), c), c)
            return
        for k in (3, 7):
            if xs[k]:
                for r1 in self.one_set(r, c, k):
                    yield from self.y(r1, c)
                return
        yield from self.y(r, c)

    def _x3_branch(self, r: Restriction, c: CycleC7, x3: list[int]) -> Iterator[Restriction]:
        g = r.subgraph
        cls = classify_cycle(g, c)
        three = cbit(self.col(r, c, 3))
        done: set[int] = set()
        for x in x3:
            for a1 in (w for w in g.neighbors(x) if w in cls.a(1)):
                if a1 in done:
                    continue
                done.add(a1)
                branch = self.fix(r, {a1: three}, "a1")
                if branch is None:
                    continue
                cp = None
                for a5 in (w for w in g.neighbors(x) if w in cls.side_plus(3)):
                    cand = CycleC7((x, a5, c.v(5), c.v(6), c.v(7), c.v(1), a1), canonical=False)
                    if cand.is_induced_in(g):
                        cp = cand
                        break
                for r1 in self.one_set(branch, c, 3):
                    yield from self.y_both(r1, c, cp)

    # -- type II ---------------------------------------------------------

    def type_two(self, r0: Restriction, c: CycleC7) -> Iterator[Restriction]:
        g = r0.subgraph
        cls = classify_cycle(g, c)
        want: dict[int, int] = {}

        def force(xk: int, zone, color: int) -> None:
            for x in cls.x(xk):
                for w in g.neighbors(x):
                    if w in zone:
                        want[w] = want.get(w, FULL) & cbit(color)

        force(1, cls.a(3) | cls.b(2), self.col(r0, c, 2))
        force(2, cls.a(7) | cls.b(1), self.col(r0, c, 1))
        force(4, cls.a(6) | cls.b(5), self.col(r0, c, 3))
        force(6, cls.a(4) | cls.b(5), self.col(r0, c, 3))
        r = self.nonreducible(self.fix(r0, want, "II-forced") or _dead(r0), c)
        if r is None:
            return
        yield from self._x3_x7(r, c, self.xbar(r, c))

    # -- type III --------------------------------------------------------

    def type_three(self, r0: Restriction, c: CycleC7) -> Iterator[Restriction]:
        g = r0.subgraph
        cls = classify_cycle(g, c)
        want: dict[int, int] = {}
        for xk, zone, k in ((3, cls.a(5) | cls.b(4), 2), (6, cls.a(4) | cls.b(5), 3)):
            for x in cls.x(xk):
                for w in g.neighbors(x):
                    if w in zone:
                        want[w] = want.get(w, FULL) & cbit(self.col(r0, c, k))
        r = self.fix(r0, want, "III-forced")
        if r is None:
            return
        groups: list[frozenset[int]] = []
        steps = []
        for k in (1, 2, 7):
            lo, hi = cls.side_minus(k), cls.side_plus(k)
            for x in sorted(cls.x(k)):
                ns = g.neighbors(x)
                minus = frozenset(w for w in ns if w in lo)
                plus = frozenset(w for w in ns if w in hi)
                groups += [s for s in (minus, plus) if len(s) > 1]
                if POPCOUNT[r.masks[x]] == 3 and all(w in lo or w in hi for w in ns):
                    steps.append(IsolatedMonoDeleted(x, ns, (1, 2, 3), (minus, plus)))
        gone = {s.vertex for s in steps}
        masks = {v: m for v, m in r.masks.items() if v not in gone}
        yield from self.y(self.nonreducible(r.derive(masks, add_mono=groups, steps=steps, tag="III-mono"), c), c)

    # -- driver ----------------------------------------------------------

    def restrictions(self, cycles: list[CycleC7]) -> Iterator[Restriction]:
        root = root_restriction(self.h)
        for tag, handler, pool in (("I", self.type_one, cycles), ("II", self.type_two, cycles),
                                   ("III", self.type_three, cycles[:1])):
            t = ColoringType(tag)
            for c in pool:
                for oc, masks in _oriented_palettes(self.h, c, t):
                    self.stats.palettes += 1
                    yield from handler(root.derive(masks, tag=tag), oc)

    def tick(self) -> None:
        self.stats.leaves += 1
        if self.stats.leaves > self.budget.leaves or time.monotonic() > self.deadline:
            raise _OutOfBudget

    def finish(self, r: Restriction) -> Coloring | None:
        if not r.feasible:
            return None
        key = (frozenset(r.masks.items()), r.mono)
        if key in self.seen:
            self.stats.duplicate_leaves += 1
            return None
        self.seen.add(key)
        sub = r.subgraph
        loose = [v for v, m in r.masks.items() if POPCOUNT[m] == 3]
        if loose:
            self.stats.residual_leaves += 1
            leaves = iter_assignments(sub, r.masks, loose)
        else:
            leaves = iter([dict(r.masks)])
        for masks in leaves:
            self.tick()
            col = solve_2sat_masks(sub, masks, r.mono)
            if col is not None:
                return replay(r.lift, col)
        return None

    def solve(self) -> Coloring | None:
        cycles = list(enumerate_induced_c7(self.h))
        if not cycles:
            raise StructuralDiagnostic("no-c7", "non-bipartite cleaned graph without an induced C7")
        self.stats.cycles += len(cycles)
        for r in self.restrictions(cycles):
            got = self.finish(r)
            if got is not None:
                return got
        return None


def _dead(r: Restriction) -> Restriction:
    """An infeasible child, used where a fix empties a list."""
    masks = dict(r.masks)
    masks[next(iter(masks))] = 0
    return r.derive(masks)


def _solve_connected(g: Graph, stats: SolveStats, budget: Budget, deadline: float) -> Coloring | None:
    res = clean(g)
    if isinstance(res, Bipartite):
        return dict(res.coloring)
    h = res.graph
    colors: Coloring = {}
    for comp in connected_components(h):
        part = h.induced(comp)
        two = bipartition(part)
        if two is not None:
            colors.update(two)
            continue
        got = _Run(part, stats, budget, deadline).solve()
        if got is None:
            return None
        colors.update(got)
    return extend_coloring(res.log, colors)


def solve(g: Graph, budget: Budget | None = None, assume_member: bool = False) -> SolveResult:
    """3-color ``g`` or show that no 3-coloring exists.

    Unless ``assume_member`` is set, membership is checked first.
    """
    if not assume_member:
        report = check_membership(g)
        if not report.is_member:
            return NotMember(report)
    budget = Budget.from_env() if budget is None else budget
    stats = SolveStats()
    start = time.monotonic()
    deadline = start + budget.seconds
    coloring: Coloring = {}
    try:
        for comp in connected_components(g):
            stats.components += 1
            got = _solve_connected(g.induced(comp), stats, budget, deadline)
            if got is None:
                stats.elapsed = time.monotonic() - start
                return NotColorable(stats)
            coloring.update(got)
    except _OutOfBudget:
        stats.elapsed = time.monotonic() - start
        return BudgetExceeded(stats)
    stats.elapsed = time.monotonic() - start
    if not verify_coloring(g, coloring):
        raise ExtensionError("lifted coloring fails on the input graph")
    return Colorable(coloring, stats)
