import random

import pytest

from p10c7.cleaning import (
    Bipartite,
    Cleaned,
    check_nc_edge_claim,
    classify_cycle,
    clean,
    cleaned_violations,
    extend_coloring,
    remove_comparable_pairs,
    sign_list_of,
)
from p10c7.errors import StructuralDiagnostic
from p10c7.extension import ComparableDeleted, ExtensionLog
from p10c7.generator import GenParams, fixture, generate
from p10c7.graph import CycleC7, build_graph, enumerate_induced_c7
from p10c7.lists import verify_coloring
from p10c7.oracle import brute_force_color
from util import c7_plus, cycle, k33

C = CycleC7(tuple(range(7)))


def v(k):
    return (k - 1) % 7


def test_pendant_is_comparable():
    g = c7_plus({7: [v(1)]})
    h, log = remove_comparable_pairs(g)
    assert h.vertex_set == frozenset(range(7))
    (step,) = log.steps
    assert step.vertex == 7 and step.witness in (v(2), v(7))
    c = brute_force_color(h)
    assert extend_coloring(log, c)[7] == c[step.witness]


def test_comparable_examples():
    h, log = remove_comparable_pairs(cycle(7))
    assert h == cycle(7) and len(log) == 0
    h, log = remove_comparable_pairs(build_graph(3, []))
    assert h.n == 1 and len(log) == 2


def test_classify_examples():
    g = c7_plus({7: [v(7), v(2)], 8: [v(1)], 9: [v(6)], 10: [v(3)], 11: [9, 10]})
    cls = classify_cycle(g, C)
    assert cls.b(1) == {7}
    assert cls.a(1) == {8}
    assert cls.a(6) == {9} and cls.a(3) == {10}
    assert 11 in cls.x(1)
    assert cls.a_index(8) == 1 and cls.b_index(7) == 1


def test_classify_rejects_three_cycle_neighbors():
    g = c7_plus({7: [v(1), v(3), v(5)]})
    with pytest.raises(StructuralDiagnostic):
        classify_cycle(g, C)


def _sign_graph(b_neighbors):
    """x at distance 2 with a distance-3 neighbor, so x lies in D1''."""
    extra = {7: [v(7), v(2)], 8: [v(6), v(1)], 9: [v(1), v(3)]}
    nb = {1: 7, 7: 8, 2: 9}
    extra[10] = [nb[k] for k in b_neighbors]
    extra[11] = [10]
    return c7_plus(extra)


def test_sign_lists():
    for bs, want, good in (([7, 2], (1,), True), ([2], (1, 3), False), ([7], (1, 6), False)):
        g = _sign_graph(bs)
        cls = classify_cycle(g, C)
        assert 10 in cls.d1_double_prime
        s = sign_list_of(g, C, cls, 10)
        assert s.indices == want and s.is_good is good


def test_bipartite_branch():
    res = clean(k33())
    assert isinstance(res, Bipartite)
    assert verify_coloring(k33(), res.coloring)
    assert set(res.coloring.values()) <= {1, 2}


def test_c7_is_already_clean():
    res = clean(cycle(7))
    assert isinstance(res, Cleaned)
    assert res.graph == cycle(7) and len(res.log) == 0


def test_d2_chain_example():
    g = fixture("d2-chain")
    res = clean(g)
    assert isinstance(res, Cleaned)
    assert 10 not in res.graph and 9 not in res.graph
    assert cleaned_violations(res.graph) == []
    c = brute_force_color(res.graph)
    assert (c is None) == (brute_force_color(g) is None)
    assert verify_coloring(g, extend_coloring(res.log, c))


def test_extend_empty_log_is_identity():
    c = {0: 1, 1: 2}
    assert extend_coloring(ExtensionLog(), c) == c
    assert extend_coloring([ComparableDeleted(2, 0)], c) == {0: 1, 1: 2, 2: 1}


def test_odd_cycle_without_c7_is_diagnosed():
    with pytest.raises(StructuralDiagnostic):
        clean(cycle(5))


@pytest.mark.parametrize("family", ["b", "c", "d"])
def test_cleaning_preserves_colorability(family):
    rng = random.Random(family)
    for s in range(25):
        g = generate(s, GenParams(n_target=rng.randint(8, 14), family=family, attachment_density=0.5))
        res = clean(g)
        if isinstance(res, Bipartite):
            assert verify_coloring(g, res.coloring)
            continue
        h = res.graph
        assert cleaned_violations(h) == []
        c = brute_force_color(h)
        assert (c is None) == (brute_force_color(g) is None)
        if c is not None:
            assert verify_coloring(g, extend_coloring(res.log, c))


def test_cleaned_graph_has_nothing_beyond_distance_two():
    for s in range(10):
        h = clean(generate(s, GenParams(n_target=14, family="b", attachment_density=0.5))).graph
        for cyc in enumerate_induced_c7(h):
            cls = classify_cycle(h, cyc)
            assert not cls.d2 and not cls.beyond
            assert cls.x_all | cls.y_set == h.vertex_set - cyc.vertex_set - cls.nc


@pytest.mark.parametrize("extra, fires", [
    ({7: [v(1)], 8: [v(3), 7]}, True),          # A1 - A3 closes a C5
    ({7: [v(1)], 8: [v(4), 7]}, False),         # A1 - A4 is allowed
    ({7: [v(7), v(2)], 8: [v(3), v(5), 7]}, True),  # B1 - B4
    ({7: [v(7), v(2)], 8: [v(4), v(6), 7]}, True),  # B1 - B5
    ({7: [v(7), v(2)], 8: [v(1), v(3), 7]}, False),  # B1 - B2 is allowed
])
def test_nc_edge_claim(extra, fires):
    g = c7_plus(extra)
    cls = classify_cycle(g, C)
    if fires:
        with pytest.raises(StructuralDiagnostic) as e:
            check_nc_edge_claim(g, cls)
        assert e.value.kind == "nc-edge"
    else:
        check_nc_edge_claim(g, cls)


def test_nc_edge_claim_holds_on_members():
    for s in range(30):
        g = generate(s, GenParams(n_target=12, family="b", attachment_density=0.6))
        for c in enumerate_induced_c7(g):
            check_nc_edge_claim(g, classify_cycle(g, c))
