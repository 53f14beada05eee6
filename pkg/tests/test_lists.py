import random

import pytest

from p10c7.errors import ContractViolation, InputError
from p10c7.extension import FreeColorDeleted
from p10c7.lists import (
    make_restriction,
    merge_mono_sets,
    root_restriction,
    solve_2sat_lists,
    update_palette,
    verify_coloring,
)
from p10c7.oracle import brute_force_color
from util import cycle, path, random_graph

FULL = frozenset({1, 2, 3})


def test_update_examples():
    g = cycle(7)
    p = {v: FULL for v in g}
    p[0] = frozenset({1})
    out = update_palette(g, p)
    assert out[1] == out[6] == frozenset({2, 3})
    assert out[3] == FULL
    assert update_palette(g, out) == out
    e = update_palette(path(2), {0: {1}, 1: {1}})
    assert e[1] == frozenset() or e[0] == frozenset()


def test_update_preserves_colorability():
    rng = random.Random(1)
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 10), 0.35)
        p = {v: set(rng.sample([1, 2, 3], rng.choice([1, 2, 3, 3]))) for v in g}
        before = brute_force_color(g, p) is not None
        q = update_palette(g, p)
        after = all(q.values()) and brute_force_color(g, q) is not None
        assert before == after


def test_2sat_examples():
    g = cycle(7)
    assert solve_2sat_lists(g, {v: {1, 2} for v in g}) is None
    p = {v: {1, 2} for v in g}
    p[6] = {3}
    c = solve_2sat_lists(g, p)
    assert c[6] == 3 and verify_coloring(g, c, p)
    c = solve_2sat_lists(path(3), {v: {1, 2} for v in range(3)}, [{0, 2}])
    assert c[0] == c[2] != c[1]


def test_2sat_contract():
    with pytest.raises(ContractViolation):
        solve_2sat_lists(path(2), {0: {1, 2, 3}, 1: {1}})
    with pytest.raises(ContractViolation):
        solve_2sat_lists(path(3), {v: {1, 2} for v in range(3)}, [{0, 1}, {1, 2}])


def test_2sat_agrees_with_brute_force():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random() * 0.5)
        p = {v: set(rng.sample([1, 2, 3], rng.choice([1, 2, 2, 2]))) for v in g}
        order = list(range(n))
        rng.shuffle(order)
        z, k = [], 0
        while k + 1 < n and rng.random() < 0.4:
            size = rng.randint(2, 3)
            z.append(set(order[k:k + size]))
            k += size
        got = solve_2sat_lists(g, p, z)
        want = brute_force_color(g, p, z)
        assert (got is None) == (want is None)
        if got is not None:
            assert verify_coloring(g, got, p, z)


def test_verify_examples():
    g = cycle(7)
    good = dict(zip(range(7), [1, 2, 1, 2, 1, 2, 3]))
    assert verify_coloring(g, good)
    bad = dict(good)
    bad[6] = 1
    assert not verify_coloring(g, bad)
    assert not verify_coloring(g, good, z=[{0, 1}])
    with pytest.raises(InputError):
        verify_coloring(g, {0: 1})


def test_merge_mono_sets():
    assert merge_mono_sets([{1, 2}, {2, 3}, {5, 6}, {7}]) == (frozenset({1, 2, 3}), frozenset({5, 6}))


def test_make_restriction_clauses():
    g = path(3)
    root = root_restriction(g)
    same = make_restriction(root, g.vertices, root.palette, root.mono)
    assert same.masks == root.masks and same.mono == root.mono
    step = FreeColorDeleted(1, (0, 2))
    child = make_restriction(root, [0, 2], {0: FULL, 2: FULL}, [{0, 2}], [step])
    assert child.mono == (frozenset({0, 2}),) and child.lift == (step,)
    small = make_restriction(root, g.vertices, {0: {1}, 1: FULL, 2: FULL}, ())
    with pytest.raises(ContractViolation, match="clause \\(b\\)"):
        make_restriction(small, g.vertices, root.palette, ())
    with pytest.raises(ContractViolation, match="clause \\(c\\)"):
        make_restriction(child, [0, 2], {0: FULL, 2: FULL}, ())
