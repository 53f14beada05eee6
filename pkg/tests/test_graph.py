import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p10c7.errors import InputError
from p10c7.graph import (
    UNREACHABLE,
    CycleC7,
    bipartition,
    build_graph,
    connected_components,
    distances_from_set,
    enumerate_induced_c7,
    find_comparable_pair,
    find_induced_path,
    induced_subgraph,
    is_induced_path,
)
from p10c7.oracle import brute_force_structures
from util import c7_plus, complete, cycle, k33, path, random_graph


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return build_graph(n, chosen)


def test_build_graph_basics():
    c = cycle(7)
    assert c.edge_count == 7
    assert build_graph(3, []).edge_count == 0
    k4 = complete(4)
    assert all(k4.degree(v) == 3 for v in k4)


def test_build_graph_errors():
    with pytest.raises(InputError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InputError):
        build_graph(3, [(1, 1)])


def test_duplicate_edges_collapse():
    g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_induced_subgraph():
    p6 = induced_subgraph(cycle(7), range(6))
    assert p6.edge_count == 5 and is_induced_path(p6, range(6))
    g = cycle(7)
    assert induced_subgraph(g, g.vertices) == g
    assert induced_subgraph(complete(4), [0, 2, 3]).edge_count == 3
    with pytest.raises(InputError):
        induced_subgraph(g, [0, 99])


def test_induced_subgraph_keeps_ids():
    h = induced_subgraph(cycle(7), [2, 3, 4])
    assert h.vertices == (2, 3, 4)
    assert h.neighbors(3) == (2, 4)


def test_find_induced_path_examples():
    assert find_induced_path(cycle(7), 6) == (0, 1, 2, 3, 4, 5)
    assert find_induced_path(cycle(7), 7) is None
    assert find_induced_path(path(10), 10) == tuple(range(10))
    with pytest.raises(InputError):
        find_induced_path(cycle(7), 0)


def test_enumerate_c7_examples():
    assert [c.vertices for c in enumerate_induced_c7(cycle(7))] == [tuple(range(7))]
    assert list(enumerate_induced_c7(k33())) == []
    # b adjacent to v7 and v2 (ids 6 and 1)
    g = c7_plus({7: [6, 1]})
    found = list(enumerate_induced_c7(g))
    assert len(found) == 2
    assert brute_force_structures(g).cycles.get(7) == 2
    assert all(c.is_induced_in(g) and c.canonical for c in found)


def test_cycle_indexing():
    c = CycleC7(tuple(range(7)))
    assert c.v(0) == c.v(7) == 6
    assert c.v(9) == 1
    r = c.reflected_at(1)
    assert r.v(1) == c.v(1) and r.v(2) == c.v(0) and r.v(0) == c.v(2)
    o = c.oriented(3, -1)
    assert o.v(1) == c.v(3) and o.v(2) == c.v(2)
    assert c.to_canonical() == c
    with pytest.raises(InputError):
        CycleC7((0, 1, 2))


def test_comparable_pair_examples():
    assert find_comparable_pair(c7_plus({7: [0]})) == (7, 1)
    assert find_comparable_pair(cycle(7)) is None
    assert find_comparable_pair(build_graph(2, [])) == (0, 1)


def test_distances():
    g = cycle(7)
    assert set(distances_from_set(g, range(7)).values()) == {0}
    assert distances_from_set(c7_plus({7: [0]}), range(7))[7] == 1
    d = distances_from_set(build_graph(3, [(0, 1)]), [0])
    assert d[2] == UNREACHABLE
    with pytest.raises(InputError):
        distances_from_set(g, [])


def test_bipartition_examples():
    col = bipartition(k33())
    assert col is not None and all(col[a] != col[b] for a, b in k33().edges())
    assert bipartition(cycle(7)) is None
    assert set(bipartition(build_graph(4, [])).values()) == {1}


def test_components():
    comps = connected_components(build_graph(5, [(0, 1), (3, 4)]))
    assert comps == [frozenset({0, 1}), frozenset({2}), frozenset({3, 4})]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_induced_subgraph_identity(g):
    assert induced_subgraph(g, g.vertices) == g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10), st.integers(1, 10), st.randoms(use_true_random=False))
def test_path_absence_is_hereditary(g, k, rnd):
    found = find_induced_path(g, k)
    if found is not None:
        assert len(found) == k and is_induced_path(g, found)
        return
    keep = [v for v in g.vertices if rnd.random() < 0.7]
    if keep:
        assert find_induced_path(induced_subgraph(g, keep), k) is None


def test_c7_count_and_path_length_match_brute_force():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(7, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.3, 0.4]))
        rep = brute_force_structures(g)
        assert sum(1 for _ in enumerate_induced_c7(g)) == rep.cycles.get(7, 0)
        longest = max(k for k in range(1, n + 1) if find_induced_path(g, k) is not None)
        assert longest == rep.longest_path


def test_comparable_pair_matches_brute_force():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 12), rng.random() * 0.6)
        brute = [
            (u, v)
            for u in g.vertices
            for v in g.vertices
            if u != v and not g.has_edge(u, v) and g.neighbor_set(u) <= g.neighbor_set(v)
        ]
        got = find_comparable_pair(g)
        assert (got is None) == (not brute)
        if brute:
            assert got == min(brute)
