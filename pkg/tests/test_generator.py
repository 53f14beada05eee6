import pytest

from p10c7.cleaning import Cleaned, classify_cycle, clean
from p10c7.cli import format_dimacs
from p10c7.errors import InputError
from p10c7.generator import FIXTURES, NON_MEMBER_FIXTURES, GenParams, fixture, generate
from p10c7.graph import CycleC7, bipartition, connected_components, enumerate_induced_c7
from p10c7.membership import check_membership

C = CycleC7(tuple(range(7)))


def test_family_a_is_bipartite_member():
    for s in range(10):
        g = generate(s, GenParams(n_target=10, family="a"))
        assert bipartition(g) is not None
        assert check_membership(g).is_member


def test_family_b_contains_c7():
    for s in range(10):
        g = generate(s, GenParams(n_target=8, family="b"))
        assert g.n == 8 and check_membership(g).is_member
        assert next(enumerate_induced_c7(g), None) is not None


@pytest.mark.parametrize("family", ["a", "b", "c", "d"])
def test_members_connected_and_deterministic(family):
    for s in range(6):
        p = GenParams(n_target=12, family=family, attachment_density=0.4)
        g = generate(s, p)
        assert check_membership(g).is_member
        assert len(connected_components(g)) == 1
        assert format_dimacs(g) == format_dimacs(generate(s, p))


def test_core_option():
    for s in range(5):
        g = generate(s, GenParams(n_target=14, family="b", attachment_density=0.5, core=True))
        assert 9 <= g.n <= 14 and check_membership(g).is_member
        res = clean(g)
        assert isinstance(res, Cleaned) and res.graph.n == g.n


def test_fig1_w2_fixture():
    g = fixture("fig1-W2")
    assert check_membership(g).is_member
    cls = classify_cycle(g, C)
    assert 7 in cls.b(1) and 10 in cls.b(4)
    assert g.has_edge(7, 8) and g.has_edge(8, 9) and g.has_edge(9, 10)


def test_fixtures_are_members():
    for name, g in FIXTURES.items():
        assert check_membership(g).is_member, name
    for name, g in NON_MEMBER_FIXTURES.items():
        assert not check_membership(g).is_member, name


def test_bad_params():
    with pytest.raises(InputError):
        generate(0, GenParams(family="z"))
    with pytest.raises(InputError):
        fixture("nope")
    with pytest.raises(InputError):
        generate(0, GenParams(family="a", core=True))
