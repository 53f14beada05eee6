import itertools
import random

import pytest

import p10c7.pipeline as pipeline
from p10c7.errors import InputError
from p10c7.generator import GenParams, fixture, generate
from p10c7.graph import CycleC7, build_graph
from p10c7.lists import verify_coloring
from p10c7.oracle import brute_force_color
from p10c7.pipeline import (
    TYPES,
    Budget,
    BudgetExceeded,
    Colorable,
    NotColorable,
    NotMember,
    classify_c7_coloring,
    enumerate_cycle_palettes,
    solve,
)
from util import complete, cycle, k33

C = CycleC7(tuple(range(7)))
PROPER = [s for s in itertools.product((1, 2, 3), repeat=7) if all(s[k] != s[(k + 1) % 7] for k in range(7))]


def test_type_examples():
    assert classify_c7_coloring((1, 2, 3, 1, 3, 2, 3)).tag == "I"
    assert classify_c7_coloring((1, 2, 3, 2, 3, 1, 3)).tag == "II"
    assert classify_c7_coloring((1, 2, 3, 2, 3, 2, 3)).tag == "III"
    assert [t.base_pattern for t in TYPES] == ["ijkikjki", "ijkjkiki", "ijkjkjki"]


def test_improper_input_rejected():
    with pytest.raises(InputError):
        classify_c7_coloring((1, 1, 2, 3, 2, 3, 2))
    with pytest.raises(InputError):
        classify_c7_coloring((1, 2, 3))


def test_type_counts():
    counts = {t.tag: 0 for t in TYPES}
    for s in PROPER:
        counts[classify_c7_coloring(s).tag] += 1
    assert len(PROPER) == 126
    assert counts == {"I": 42, "II": 42, "III": 42}


@pytest.mark.parametrize("t", TYPES, ids=lambda t: t.tag)
def test_palettes_match_brute_force(t):
    g = cycle(7)
    got = [tuple(next(iter(p[v])) for v in range(7)) for p in enumerate_cycle_palettes(g, C, t)]
    assert len(got) == len(set(got))
    assert set(got) == {s for s in PROPER if classify_c7_coloring(s) == t}


def test_type_one_under_fixed_permutation():
    # the base word has no rotational or mirror symmetry, so all 14 images are distinct
    g = cycle(7)
    base = (1, 2, 3, 1, 3, 2, 3)
    words = {tuple(base[(s + d * k) % 7] for k in range(7)) for s in range(7) for d in (1, -1)}
    got = {tuple(next(iter(p[v])) for v in range(7)) for p in enumerate_cycle_palettes(g, C, TYPES[0])}
    assert words <= got and len(words) == 14


def test_c7_and_bipartite():
    r = solve(cycle(7))
    assert isinstance(r, Colorable) and verify_coloring(cycle(7), r.coloring)
    r = solve(k33())
    assert isinstance(r, Colorable) and set(r.coloring.values()) <= {1, 2}


def test_non_member():
    r = solve(complete(4))
    assert isinstance(r, NotMember) and len(r.report.bad_cycle) == 3


def test_disconnected_input():
    g = generate(1, GenParams(n_target=10, family="b"))
    edges = g.edges() + [(u + g.n, w + g.n) for u, w in cycle(7).edges()]
    h = build_graph(g.n + 7, edges)
    r = solve(h)
    assert isinstance(r, Colorable) and verify_coloring(h, r.coloring)
    assert r.stats.components == 2


def test_budget_exceeded():
    g = fixture("q1-core")
    r = solve(g, Budget(leaves=0, seconds=60))
    assert isinstance(r, BudgetExceeded)
    assert r.stats.leaves == 1


def test_not_colorable_path(monkeypatch):
    monkeypatch.setattr(pipeline, "_solve_connected", lambda *a: None)
    assert isinstance(solve(cycle(7)), NotColorable)


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("P10C7_BUDGET", "50:2.5")
    assert Budget.from_env() == Budget(50, 2.5)
    monkeypatch.setenv("P10C7_BUDGET", "junk")
    with pytest.raises(InputError):
        Budget.from_env()


@pytest.mark.parametrize("name", ["q1-core", "q4-core", "x1-pair", "typeA-2", "typeB-1", "fig1-W1", "d2-chain"])
def test_fixtures(name):
    g = fixture(name)
    r = solve(g)
    assert isinstance(r, Colorable) == (brute_force_color(g) is not None)
    assert verify_coloring(g, r.coloring)


@pytest.mark.parametrize("family", ["a", "b", "c", "d"])
def test_differential(family):
    rng = random.Random(family)
    for s in range(25):
        n = rng.randint(7, 14)
        p = GenParams(n_target=n, family=family, attachment_density=0.5,
                      core=family != "a" and n >= 9 and s % 2 == 1)
        g = generate(s, p)
        r = solve(g, assume_member=True)
        assert isinstance(r, Colorable) == (brute_force_color(g) is not None)
        if isinstance(r, Colorable):
            assert verify_coloring(g, r.coloring)
