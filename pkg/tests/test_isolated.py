import random

import pytest

from p10c7.cleaning import classify_cycle
from p10c7.errors import ContractViolation
from p10c7.extension import IsolatedMonoDeleted, replay
from p10c7.generator import GenParams, fixture, generate
from p10c7.graph import CycleC7, enumerate_induced_c7
from p10c7.isolated import (
    compute_x_sets,
    derived_cycle,
    enumerate_typeA,
    enumerate_typeB,
    has_kp3_matching,
    lemma_one_set_restrictions,
    mono_restriction,
)
from p10c7.lists import FULL, Restriction, propagate, to_mask, verify_coloring
from p10c7.oracle import brute_force_color, coloring_predicate_filter
from p10c7.pipeline import TYPES, _oriented_palettes
from util import c7_plus

C = CycleC7(tuple(range(7)))


def v(k):
    return (k - 1) % 7


def fixed(g, colors, c=C):
    m = {u: FULL for u in g.vertices}
    for k, col in enumerate(colors, 1):
        m[c.v(k)] = to_mask([col])
    assert propagate(g, m)
    return m


# v_{i-2} and v_{i+2} differ for i = 1: colors of v6 and v3
GOOD = (1, 2, 3, 1, 2, 1, 2)


def test_x_set_examples():
    assert compute_x_sets(fixture("x1-pair"), C).x(1) == {9}
    cls = compute_x_sets(c7_plus({}), C)
    assert all(not cls.x(i) for i in range(1, 8))
    g = c7_plus({7: [v(6), v(1)], 8: [v(1), v(3)], 9: [7, 8]})
    assert compute_x_sets(g, C).x(1) == {9}


def test_mono_restriction_identity_when_nothing_long():
    g = c7_plus({})
    r = Restriction(g, fixed(g, GOOD))
    out = mono_restriction(r, C, classify_cycle(g, C), 1)
    assert out.masks == r.masks and not out.mono


def test_mono_restriction_deletes_x():
    g = fixture("x1-pair")
    r = Restriction(g, fixed(g, GOOD))
    assert len(r.palette[9]) == 3
    out = mono_restriction(r, C, classify_cycle(g, C), 1)
    assert 9 not in out.masks
    (step,) = out.lift
    assert isinstance(step, IsolatedMonoDeleted) and step.vertex == 9
    assert step.groups == (frozenset({7}), frozenset({8}))
    col = brute_force_color(out.subgraph, out.palette, out.mono)
    assert verify_coloring(g, replay(out.lift, col))


def _mono_matches_oracle(g, c, i, masks):
    """Restriction colorable iff the parent has a coloring meeting the mono condition."""
    r = Restriction(g, masks)
    out = mono_restriction(r, c, classify_cycle(g, c), i)
    col = brute_force_color(out.subgraph, out.palette, out.mono)
    if col is not None:
        assert verify_coloring(g, replay(out.lift, col), r.palette)
    want = coloring_predicate_filter(g, c, i, "mono", r.palette) is not None
    return (col is not None) == want


def _all_deletable(g, cls, i):
    sides = cls.side_minus(i) | cls.side_plus(i)
    return all(set(g.neighbors(x)) <= sides for x in cls.x(i))


def test_mono_restriction_matches_oracle_predicate():
    n = 0
    for s in range(20):
        g = generate(s, GenParams(n_target=13, family="b", attachment_density=0.5, core=True))
        for c in enumerate_induced_c7(g):
            cls = classify_cycle(g, c)
            for i in range(1, 8):
                if not cls.x(i) or not _all_deletable(g, cls, i):
                    continue
                for oc, m in list(_oriented_palettes(g, c, TYPES[0]))[:4]:
                    if oc != c:
                        continue
                    assert _mono_matches_oracle(g, c, i, m)
                    n += 1
    assert n > 0


def test_kp3_examples():
    g = fixture("x1-pair")
    cls = classify_cycle(g, C)
    assert not has_kp3_matching(g, cls, [], 1, 1)
    assert has_kp3_matching(g, cls, [9], 1, 1)
    # two X1 vertices sharing the A6 end
    h = c7_plus({7: [v(6)], 8: [v(3)], 9: [7, 8], 10: [v(3)], 11: [7, 10]})
    hc = classify_cycle(h, C)
    assert hc.x(1) == {9, 11}
    assert not has_kp3_matching(h, hc, [9, 11], 2, 1)


def test_typeA_empty_without_tuples():
    g = c7_plus({})
    assert list(enumerate_typeA(Restriction(g, fixed(g, GOOD)), C, 1)) == []
    assert list(enumerate_typeB(Restriction(g, fixed(g, GOOD)), C, 1)) == []


def test_typeA_case2():
    g = fixture("typeA-2")
    r = Restriction(g, fixed(g, GOOD))
    out = list(enumerate_typeA(r, C, 1))
    assert out and out[0].tags[-1] == "A2"
    # a1 takes v3's color, w1 v2's color, a2 v6's color
    assert (out[0].palette[7], out[0].palette[8], out[0].palette[9]) == ({3}, {2}, {1})


def test_typeB_case1():
    g = fixture("typeB-1")
    r = Restriction(g, fixed(g, GOOD))
    out = list(enumerate_typeB(r, C, 1))
    assert out and all(t.tags[-1].startswith("B") for t in out)


def test_typeB_splits_a_long_vertex():
    # typeB-1 with x in X1 hit by the fix, and a second X1 vertex x' untouched by it.
    # Not a member; only the split itself is under test.
    g = c7_plus({7: [v(3)], 8: [7], 9: [8], 10: [v(6)], 11: [10, 7], 12: [v(6)], 13: [v(3)], 14: [12, 13]})
    assert classify_cycle(g, C).x(1) == {11, 14}
    out = [k for k in enumerate_typeB(Restriction(g, fixed(g, GOOD)), C, 1) if k.tags[-1] == "B1"]
    # v2 carries color 2, so x' is split into {2} and {1, 3}
    assert [k.palette[14] for k in out] == [{2}, {1, 3}]
    assert all(len(k.palette[11]) <= 2 for k in out)


def test_derived_cycle_is_induced():
    g = fixture("x1-pair")
    cp = derived_cycle(C, 1, 9, 7, 8)
    assert cp.is_induced_in(g)
    assert cp.v(1) == 9 and cp.v(7) == 7 and cp.v(2) == 8


def test_one_set_needs_distinct_side_colors():
    g = fixture("x1-pair")
    m = fixed(g, (1, 2, 3, 1, 2, 3, 2))
    with pytest.raises(ContractViolation):
        list(lemma_one_set_restrictions(Restriction(g, m), C, 1))


def test_one_set_without_long_x_is_just_r1():
    g = c7_plus({})
    r = Restriction(g, fixed(g, GOOD))
    (only,) = lemma_one_set_restrictions(r, C, 1)
    assert only.tags[-1] == "R1" and only.masks == r.masks


def _one_set_agrees(g, c, i, masks):
    parent = Restriction(g, masks)
    want = brute_force_color(g, parent.palette) is not None
    got = False
    for r in lemma_one_set_restrictions(parent, c, i):
        col = brute_force_color(r.subgraph, r.palette, r.mono)
        if col is not None:
            assert verify_coloring(g, replay(r.lift[len(parent.lift):], col), parent.palette)
            got = True
    return want == got


@pytest.mark.parametrize("family", ["b", "d"])
def test_one_set_stream_equivalence(family):
    rng = random.Random(family)
    n = 0
    for s in range(12):
        g = generate(s, GenParams(n_target=13, family=family, attachment_density=0.5, core=True))
        for c in enumerate_induced_c7(g):
            cls = classify_cycle(g, c)
            for i in (i for i in range(1, 8) if cls.x(i)):
                for oc, masks in _oriented_palettes(g, c, TYPES[rng.randrange(3)]):
                    if oc != c or masks[c.v(i - 2)] == masks[c.v(i + 2)]:
                        continue
                    m = dict(masks)
                    for u in rng.sample(sorted(cls.nc), min(2, len(cls.nc))):
                        m[u] &= rng.choice([3, 5, 6])
                    if propagate(g, m):
                        assert _one_set_agrees(g, c, i, m)
                        n += 1
    assert n > 5
