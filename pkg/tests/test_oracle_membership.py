import random

import pytest

from p10c7.errors import OracleRefusal
from p10c7.graph import CycleC7, build_graph
from p10c7.membership import check_membership, find_induced_odd_cycle_neq7
from p10c7.oracle import (
    brute_force_color,
    brute_force_structures,
    coloring_predicate_filter,
    flat_color,
    is_good,
    oracle_is_member,
)
from util import complete, cycle, k33, path, random_graph


def test_brute_force_color_examples():
    assert brute_force_color(complete(4)) is None
    assert brute_force_color(cycle(7)) == {0: 1, 1: 2, 2: 1, 3: 2, 4: 1, 5: 2, 6: 3}
    assert brute_force_color(cycle(7), {v: {1, 2} for v in range(7)}) is None


def test_mono_sets_in_oracle():
    g = path(3)
    c = brute_force_color(g, {v: {1, 2} for v in range(3)}, [{0, 2}])
    assert c[0] == c[2] != c[1]
    assert brute_force_color(g, None, [{0, 1}]) is None


def test_oracle_cap():
    with pytest.raises(OracleRefusal):
        brute_force_color(build_graph(25, []))


def test_backtracking_agrees_with_flat_scan():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.random() * 0.7)
        p = {v: set(rng.sample([1, 2, 3], rng.randint(1, 3))) for v in g.vertices}
        z = []
        if n >= 3 and rng.random() < 0.5:
            z = [set(rng.sample(range(n), 2))]
        assert brute_force_color(g, p, z) == flat_color(g, p, z)


def test_structures_examples():
    r = brute_force_structures(cycle(7))
    assert r.cycles == {7: 1} and r.longest_path == 6
    r = brute_force_structures(complete(4))
    assert r.cycles == {3: 4} and r.longest_path == 2
    # K3,3 has nine induced 4-cycles and no induced 6-cycle (every 6-cycle has chords)
    r = brute_force_structures(k33())
    assert r.cycles == {4: 9} and r.longest_path == 3


def test_good_predicate():
    c = CycleC7(tuple(range(7)))
    col = coloring_predicate_filter(cycle(7), c, 1, "good")
    assert col is not None and is_good(c, 1, col)
    assert coloring_predicate_filter(cycle(7), c, 1, "typeA") is None


def test_membership_examples():
    r = check_membership(cycle(7))
    assert r.is_member and not r.is_bipartite
    r = check_membership(cycle(9))
    assert not r.is_member and len(r.bad_cycle) == 9
    r = check_membership(path(10))
    assert not r.is_member and r.bad_path == tuple(range(10))
    assert find_induced_odd_cycle_neq7(complete(3)) == (0, 1, 2)
    assert find_induced_odd_cycle_neq7(k33()) is None


def test_chorded_c7_witness():
    g = build_graph(7, [(k, (k + 1) % 7) for k in range(7)] + [(0, 3)])
    found = find_induced_odd_cycle_neq7(g)
    # the chord v1v4 leaves a C4 (v1..v4) and a C5 (v4..v7, v1); brute force agrees
    assert brute_force_structures(g).cycles == {4: 1, 5: 1}
    assert found == (0, 3, 4, 5, 6)


def test_membership_agrees_with_structures():
    rng = random.Random(5)
    for _ in range(400):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.random() * 0.6)
        assert check_membership(g).is_member == oracle_is_member(g)


def test_membership_hereditary():
    rng = random.Random(9)
    checked = 0
    while checked < 50:
        g = random_graph(rng, rng.randint(5, 11), 0.3)
        if not check_membership(g).is_member:
            continue
        checked += 1
        keep = [v for v in g.vertices if rng.random() < 0.7]
        assert check_membership(g.induced(keep)).is_member
