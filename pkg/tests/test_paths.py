from math import comb

import pytest

from jellyfish.paths import (
    EndpointSet,
    d_max,
    descent_count,
    e_max,
    enumerate_families,
    family_size,
    is_valid_endpoint_set,
    make_family,
    require_endpoints,
    valid_endpoint_sets,
    wallach_facets,
)
from jellyfish.poset import CaseError, Group, GroupCase, WallachCase, build_poset, order_leq


def _dim(case: GroupCase) -> int:
    # dimension of the rank-bounded matrix variety
    k = case.k
    if case.group is Group.GL:
        return k * (case.p + case.q - k)
    if case.group is Group.SP:
        return k * (2 * case.n - 2 * k - 1)
    return k * (2 * case.n - k + 1) // 2


@pytest.mark.parametrize(
    "case",
    [GroupCase.gl(k, p, q) for p in range(1, 6) for q in range(1, 6) for k in range(1, min(p, q))]
    + [GroupCase.sp(k, n) for n in range(3, 9) for k in range(1, n // 2)]
    + [GroupCase.o(k, n) for n in range(2, 7) for k in range(1, n)],
)
def test_d_max_is_variety_dimension(case):
    assert d_max(case) == _dim(case)
    assert family_size(e_max(case), case) == d_max(case)


@pytest.mark.parametrize("p, q", [(2, 3), (3, 3), (3, 5), (4, 4)])
def test_segre_degree(p, q):
    case = GroupCase.gl(1, p, q)
    assert len(enumerate_families(e_max(case), case)) == comb(p + q - 2, p - 1)


@pytest.mark.parametrize("n", range(3, 9))
def test_grassmannian_degree(n):
    case = GroupCase.sp(1, n)
    catalan = comb(2 * (n - 2), n - 2) // (n - 1)
    assert len(enumerate_families(e_max(case), case)) == catalan


@pytest.mark.parametrize("n", range(2, 7))
def test_veronese_degree(n):
    case = GroupCase.o(1, n)
    assert len(enumerate_families(e_max(case), case)) == 2 ** (n - 1)


@pytest.mark.parametrize("case", [GroupCase.gl(2, 3, 4), GroupCase.sp(2, 6), GroupCase.o(2, 4)])
def test_families_are_nonintersecting_chains(case):
    poset = build_poset(case)
    for E in valid_endpoint_sets(case):
        for F in enumerate_families(E, case):
            assert len(F.paths) == case.k
            assert F.size == len(F.points)  # disjoint
            for path in F.paths:
                assert all(pt in poset for pt in path)
                assert all(order_leq(a, b, case) or order_leq(b, a, case) for a, b in zip(path, path[1:]))
            assert F.corners <= F.points
            assert descent_count(F.label, case.group is Group.O) == len(F.corners)


def test_o_endpoint_sets_are_all_subsets():
    case = GroupCase.o(2, 5)
    assert len(valid_endpoint_sets(case)) == comb(5, 2)


def test_gl_endpoint_validity():
    case = GroupCase.gl(3, 8, 10)
    assert is_valid_endpoint_set(EndpointSet((2, 4, 5), ()), case)
    bad = EndpointSet((8,), (10, 9))
    assert not is_valid_endpoint_set(bad, case)
    with pytest.raises(CaseError):
        require_endpoints(bad, case)


def test_endpoint_parse_format():
    E = EndpointSet.parse("2*,4*,5", Group.GL)
    assert E.rows == (2, 4) and E.cols == (5,)
    assert EndpointSet.parse(E.format(Group.GL), Group.GL) == E
    assert EndpointSet.parse("1,5", Group.SP).rows == (1, 5)


def test_sp_example_families():
    # the first family is corner-free, its label all zeros
    fams = enumerate_families(EndpointSet((2, 4)), GroupCase.sp(2, 7))
    assert fams[0].label == "00000000 0000" and not fams[0].corners
    assert fams[1].label == "00000010 0000"


def test_make_family_rejects_bad_paths():
    case = GroupCase.sp(1, 4)
    with pytest.raises(CaseError):
        make_family(case, EndpointSet((1,)), [[(1, 2), (3, 4)]])


@pytest.mark.parametrize(
    "wcase, count, size",
    [(WallachCase("Dn", 1, 5), 2, 7), (WallachCase("E6"), 12, 11), (WallachCase("E7", 2), 3, 26)],
)
def test_wallach_facets(wcase, count, size):
    facets = wallach_facets(wcase)
    assert len(facets) == count
    assert {F.size for F in facets} == {size}


def test_descent_count():
    assert descent_count("0101") == 1
    assert descent_count("1010") == 2
    assert descent_count("01 10") == 1
    assert descent_count("01", terminal_ones=True) == 1
