"""Isolated vertices of ``G - N[C]``: the sets ``X_i`` and the restriction stream for one of them.

A vertex of ``X_i`` sees both ``A_{i-2} | B_{i-1}`` (its minus side) and
``A_{i+2} | B_{i+1}`` (its plus side).  When its neighbors on each side are
forced to share a color, it can be deleted and colored last.  Otherwise one
of its induced paths through the two sides closes a new 7-cycle ``C'``, and
guessing a handful of colors around ``C'`` shrinks the lists of ``X_i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .cleaning import CycleClassification, classify_cycle
from .errors import ContractViolation, StructuralDiagnostic
from .extension import IsolatedMonoDeleted
from .graph import CycleC7, Graph
from .lists import MASK_COLORS, POPCOUNT, SINGLE_COLOR, Restriction, cbit, fix_masks


def compute_x_sets(g: Graph, c: CycleC7, cls: CycleClassification | None = None) -> CycleClassification:
    """Classification of ``g`` around ``c``; every isolated vertex off ``N[C]`` must land in some ``X_i``."""
    cls = classify_cycle(g, c) if cls is None else cls
    placed = frozenset().union(*cls.x_sets)
    stray = sorted(cls.x_all - placed)
    if stray:
        raise StructuralDiagnostic("x-set", f"isolated vertex {stray[0]} fits no X_i", (stray[0],))
    return cls


def _cycle_color(masks: Mapping[int, int], c: CycleC7, k: int) -> int:
    m = masks[c.v(k)]
    if POPCOUNT[m] != 1:
        raise ContractViolation(f"cycle vertex {c.v(k)} has list {list(MASK_COLORS[m])}")
    return SINGLE_COLOR[m]


def _long_lists(masks: Mapping[int, int], vs: Iterable[int]) -> list[int]:
    return sorted(v for v in vs if POPCOUNT[masks.get(v, 0)] == 3)


def mono_restriction(
    parent: Restriction,
    c: CycleC7,
    cls: CycleClassification,
    i: int,
    only: Iterable[int] | None = None,
    tag: str = "mono",
) -> Restriction:
    """Delete the length-3 members of ``X_i`` and make each side of each one monochromatic.

    A member with a neighbor outside its two sides is kept, since the two
    mono-sets would not leave it a free color.
    """
    g = parent.subgraph
    masks = parent.masks
    pool = cls.x(i) if only is None else cls.x(i) & frozenset(only)
    lo, hi = cls.side_minus(i), cls.side_plus(i)
    steps = []
    groups: list[frozenset[int]] = []
    for x in _long_lists(masks, pool):
        ns = g.neighbors(x)
        if not all(w in lo or w in hi for w in ns):
            continue
        minus = frozenset(w for w in ns if w in lo)
        plus = frozenset(w for w in ns if w in hi)
        steps.append(IsolatedMonoDeleted(x, ns, (1, 2, 3), (minus, plus)))
        groups += [s for s in (minus, plus) if len(s) > 1]
    if not steps:
        return parent.derive(dict(masks), tag=tag)
    gone = {s.vertex for s in steps}
    kept = {v: m for v, m in masks.items() if v not in gone}
    return parent.derive(kept, add_mono=groups, steps=steps, tag=tag)


# ---------------------------------------------------------------------------
# kP3 matchings
# ---------------------------------------------------------------------------


def _p3s(g: Graph, cls: CycleClassification, u: Iterable[int], i: int) -> list[tuple[int, int, int]]:
    lo, hi = cls.side_minus(i), cls.side_plus(i)
    out = []
    for x in sorted(u):
        for a in g.neighbors(x):
            if a not in lo:
                continue
            for b in g.neighbors(x):
                if b in hi and not g.has_edge(a, b):
                    out.append((a, x, b))
    return out


def has_kp3_matching(g: Graph, cls: CycleClassification, u: Iterable[int], k: int, i: int) -> bool:
    """True when ``k`` pairwise disjoint and pairwise non-adjacent P3s run minus side, ``u``, plus side."""
    if k <= 0:
        return True
    paths = _p3s(g, cls, u, i)

    def apart(p, q) -> bool:
        return all(s != t and not g.has_edge(s, t) for s in p for t in q)

    def rec(start: int, chosen: list) -> bool:
        if len(chosen) == k:
            return True
        for j in range(start, len(paths)):
            p = paths[j]
            if all(apart(p, q) for q in chosen) and rec(j + 1, chosen + [p]):
                return True
        return False

    return rec(0, [])


# ---------------------------------------------------------------------------
# Type A / type B tuples
# ---------------------------------------------------------------------------

# Each case lists (name, domain tokens, color reference) per vertex, then its
# edge pattern.  Domains are relative to index i: "S-" and "S+" are the two
# sides, "D" is V - N[C], ("A", k) is A_{i+k} and so on.  Color references:
# "m" is the color of v_{i-2}, "p" that of v_{i+2}, "q" that of v_{i+1}.
_PATH = "path"
CASES: dict[tuple[str, int], tuple[tuple, object]] = {
    ("A", 1): ((("a1", ("S-",), "p"), ("w1", (("X", 0),), "q"), ("a2", ("S+",), "m"),
                ("w2", (("X", 0),), "q"), ("a2'", ("S+",), "m"), ("w3", ("D",), "q")), _PATH),
    ("A", 2): ((("a1", (("A", -2), ("B", -3)), "p"), ("w1", ("D",), "q"),
                ("a2", (("A", 1), ("B", 2)), "m")), _PATH),
    ("A", 3): ((("a1'", ("S-",), "q"), ("w1", ("D",), "m"), ("a1", ("S-",), "p"),
                ("w2", ("D",), "q"), ("a2", (("A", 3),), "m")), _PATH),
    ("A", 4): ((("a1'", ("S-",), "q"), ("w1", ("D",), "m"), ("a1", ("S-",), "p"),
                ("a2", (("A", -3),), "q")), _PATH),
    # w1 sits next to a1, so its color is that of v_{i-2}
    ("A", 5): ((("a1", ("S-",), "q"), ("w1", ("D",), "m"), ("a1'", ("S-",), "p"),
                ("w2", ("D",), "q"), ("a1''", ("S-",), "p"), ("w3", (("X", -2),), None)), _PATH),
    ("A", 6): ((("a1", ("S-",), "q"), ("w1", ("D",), "m"), ("a1'", ("S-",), "p"),
                ("w2", ("D",), "q"), ("a1''", ("S-",), "p"), ("w3", ("D",), "q"),
                ("w4", ("D",), None), ("a2", ("S+",), "q")),
               ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1))),
    ("B", 1): ((("w2", ("D",), "p"), ("w1", ("D",), "q"), ("a1", ("S+",), "m")), _PATH),
    ("B", 2): ((("w2", ("D",), "m"), ("w1", ("D",), "q"), ("a1", ("S+",), "m")), _PATH),
    ("B", 3): ((("w2", ("D",), "p"), ("w1", (("A", 3),), "q"), ("a1", ("S+",), "m")), _PATH),
    # the extra edge joins a2 to w1
    ("B", 4): ((("a1'", ("S-",), "q"), ("w1", ("D",), "m"), ("a1", ("S-",), "p"),
                ("w2", ("D",), "q"), ("w3", ("D",), None), ("a2", (("A", 2),), "q")),
               ((0, 1), (1, 2), (2, 3), (3, 4), (5, 1))),
}


@dataclass(frozen=True)
class TypeWitness:
    kind: str
    case_index: int
    orientation: int
    vertices: tuple[int, ...]
    color_assignment: tuple[tuple[int, int], ...]


def _domain(cls: CycleClassification, i: int, tokens: tuple) -> frozenset[int]:
    out: set[int] = set()
    for t in tokens:
        if t == "S-":
            out |= cls.side_minus(i)
        elif t == "S+":
            out |= cls.side_plus(i)
        elif t == "D":
            out |= cls.d_all
        elif t[0] == "A":
            out |= cls.a(i + t[1])
        elif t[0] == "B":
            out |= cls.b(i + t[1])
        else:
            out |= cls.x(i + t[1])
    return frozenset(out)


def iter_witnesses(
    g: Graph, c: CycleC7, cls: CycleClassification, i: int, masks: Mapping[int, int], kind: str, orientation: int
) -> Iterator[TypeWitness]:
    """Every tuple matching a case of ``kind`` whose colors fit ``masks``, cases ascending."""
    ref = {"m": _cycle_color(masks, c, i - 2), "p": _cycle_color(masks, c, i + 2),
           "q": _cycle_color(masks, c, i + 1)}
    for (k, j), (slots, shape) in sorted(CASES.items()):
        if k != kind:
            continue
        edges = [(t, t + 1) for t in range(len(slots) - 1)] if shape == _PATH else list(shape)
        need = {frozenset(e) for e in edges}
        doms = []
        for _, tokens, col in slots:
            dom = _domain(cls, i, tokens)
            bitset = cbit(ref[col]) if col is not None else 7
            doms.append(sorted(v for v in dom if masks.get(v, 0) & bitset))

        def rec(chosen: list[int]) -> Iterator[list[int]]:
            t = len(chosen)
            if t == len(slots):
                yield chosen
                return
            for v in doms[t]:
                if v in chosen:
                    continue
                if all(g.has_edge(v, chosen[s]) == (frozenset((s, t)) in need) for s in range(t)):
                    yield from rec(chosen + [v])

        for tup in rec([]):
            if (k, j) == ("B", 2) and any(w in cls.side_minus(i) for w in g.neighbors(tup[0])):
                continue
            colors = tuple((v, ref[col]) for v, (_, _, col) in zip(tup, slots) if col is not None)
            yield TypeWitness(k, j, orientation, tuple(tup), colors)


def _oriented_views(g: Graph, c: CycleC7, i: int):
    yield 1, c, classify_cycle(g, c)
    r = c.reflected_at(i)
    yield -1, r, classify_cycle(g, r)


def _apply(g: Graph, masks: Mapping[int, int], w: TypeWitness) -> dict[int, int] | None:
    return fix_masks(g, masks, {v: cbit(col) for v, col in w.color_assignment})


def enumerate_typeA(parent: Restriction, c: CycleC7, i: int) -> Iterator[Restriction]:
    g = parent.subgraph
    x_i = classify_cycle(g, c).x(i)
    seen: set[frozenset] = set()
    for s, view, vcls in _oriented_views(g, c, i):
        for w in iter_witnesses(g, view, vcls, i, parent.masks, "A", s):
            new = _apply(g, parent.masks, w)
            if new is None or _long_lists(new, x_i):
                continue
            key = frozenset(new.items())
            if key not in seen:
                seen.add(key)
                yield parent.derive(new, tag=f"A{w.case_index}")


def enumerate_typeB(parent: Restriction, c: CycleC7, i: int) -> Iterator[Restriction]:
    g = parent.subgraph
    cls = classify_cycle(g, c)
    x_i = cls.x(i)
    third = _cycle_color(parent.masks, c, i + 1)
    seen: set[frozenset] = set()
    for s, view, vcls in _oriented_views(g, c, i):
        for w in iter_witnesses(g, view, vcls, i, parent.masks, "B", s):
            new = _apply(g, parent.masks, w)
            if new is None:
                continue
            left = _long_lists(new, x_i)
            if has_kp3_matching(g, cls, left, 2, i):
                continue
            if not left:
                kids = [new]
            else:
                x = left[0]
                kids = [fix_masks(g, new, {x: cbit(third)}), fix_masks(g, new, {x: 7 & ~cbit(third)})]
            for kid in kids:
                if kid is None:
                    continue
                key = frozenset(kid.items())
                if key not in seen:
                    seen.add(key)
                    yield parent.derive(kid, tag=f"B{w.case_index}")


def derived_cycle(c: CycleC7, i: int, x: int, minus: int, plus: int) -> CycleC7:
    """``v_{i-3} v_{i-2} minus x plus v_{i+2} v_{i+3}`` indexed so that ``x`` sits at ``i``."""
    seq = [0] * 7
    for k, v in zip(range(-3, 4), (c.v(i - 3), c.v(i - 2), minus, x, plus, c.v(i + 2), c.v(i + 3))):
        seq[(i + k - 1) % 7] = v
    return CycleC7(tuple(seq), canonical=False).normalized_flag()


def lemma_one_set_restrictions(parent: Restriction, c: CycleC7, i: int) -> Iterator[Restriction]:
    """Restrictions of ``parent`` that together are colorable exactly when ``parent`` is.

    None of them keeps a length-3 list on the original ``X_i`` except where
    a deleted vertex had a neighbor off its two sides.
    """
    g = parent.subgraph
    masks = parent.masks
    for k in range(1, 8):
        if c.v(k) not in masks:
            raise ContractViolation(f"cycle vertex {c.v(k)} is not kept")
        _cycle_color(masks, c, k)
    m, p = _cycle_color(masks, c, i - 2), _cycle_color(masks, c, i + 2)
    if m == p:
        raise ContractViolation(f"v_{i - 2} and v_{i + 2} share color {m}")
    if not parent.feasible:
        return
    cls = compute_x_sets(g, c)
    yield mono_restriction(parent, c, cls, i, tag="R1")
    third = 6 - m - p
    lo, hi = cls.side_minus(i), cls.side_plus(i)
    for x in _long_lists(masks, cls.x(i)):
        for a_lo in (w for w in g.neighbors(x) if w in lo):
            for a_hi in (w for w in g.neighbors(x) if w in hi):
                if g.has_edge(a_lo, a_hi):
                    continue
                cp = derived_cycle(c, i, x, a_lo, a_hi)
                if not cp.is_induced_in(g):
                    continue
                for xcol in (m, p):
                    fixed = fix_masks(g, masks, {x: cbit(xcol), a_lo: cbit(third), a_hi: cbit(third)})
                    if fixed is None:
                        continue
                    branch = parent.derive(fixed, tag="L1")
                    yield from enumerate_typeA(branch, cp, i)
                    yield from enumerate_typeB(branch, cp, i)
                    yield mono_restriction(branch, cp, classify_cycle(g, cp), i, only=cls.x(i), tag="R2")
