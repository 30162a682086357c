"""Property tests for the structural invariants."""

from itertools import product
from math import comb

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from jellyfish.oracle import _flipped_incomparable, _product_incomparable, splits
from jellyfish.paths import (
    d_max,
    enumerate_families,
    family_size,
    valid_endpoint_sets,
)
from jellyfish.poset import Group, GroupCase, antidiagonal, build_poset, order_leq
from jellyfish.render import parse_ascii, render
from jellyfish.series import RationalSeries, expand, p_e_series, reduce
from jellyfish.stanley import Monomial, lambda_from_tau, weight
from jellyfish.tableaux import (
    Shape,
    ShapedTableau,
    all_shapes,
    assign_bin,
    bin_sizes,
    count_ssyt,
    enumerate_ssyt,
    enumerate_tableaux,
    is_semistandard,
)

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def cases(draw, max_dim=6, groups=(Group.GL, Group.SP, Group.O)):
    g = draw(st.sampled_from(groups))
    if g is Group.GL:
        p = draw(st.integers(1, max_dim))
        q = draw(st.integers(1, max_dim))
        return GroupCase.gl(draw(st.integers(1, min(p, q))), p, q)
    if g is Group.SP:
        n = draw(st.integers(2, max_dim + 1))
        return GroupCase.sp(draw(st.integers(1, n // 2)), n)
    n = draw(st.integers(1, max_dim))
    return GroupCase.o(draw(st.integers(1, n)), n)


# -- poset --------------------------------------------------------------------------------


@pytest.mark.parametrize("d", range(1, 13))
def test_point_counts_closed_forms(d):
    for other in range(1, 13):
        assert len(build_poset(GroupCase.gl(1, d, other))) == d * other
    if d > 1:
        assert len(build_poset(GroupCase.sp(1, d))) == comb(d, 2)
    assert len(build_poset(GroupCase.o(1, d))) == comb(d + 1, 2)


SMALL_POSETS = [GroupCase.gl(1, 5, 7), GroupCase.gl(1, 7, 7), GroupCase.sp(1, 10), GroupCase.o(1, 9), GroupCase.o(1, 5)]


@pytest.mark.parametrize("case", SMALL_POSETS, ids=str)
def test_order_is_partial_order_and_covers_are_its_reduction(case):
    pts = build_poset(case).points
    assert len(pts) <= 50
    leq = {(a, b): order_leq(a, b, case) for a, b in product(pts, pts)}
    for a in pts:
        assert leq[a, a]
    for a, b in product(pts, pts):
        if a != b:
            assert not (leq[a, b] and leq[b, a])
    for a, b, c in product(pts, pts, pts):
        if leq[a, b] and leq[b, c]:
            assert leq[a, c]
    reduction = {
        (a, b)
        for a, b in product(pts, pts)
        if a != b and leq[a, b] and not any(c not in (a, b) and leq[a, c] and leq[c, b] for c in pts)
    }
    assert reduction == set(build_poset(case).covers)


@given(cases(groups=(Group.GL, Group.SP)))
@SETTINGS
def test_antidiagonals_are_antichains(case):
    poset = build_poset(case)
    ell = 1
    while True:
        try:
            layer = antidiagonal(poset, ell)
        except Exception:
            break
        for a, b in product(layer, layer):
            assert a == b or not order_leq(a, b, case)
        ell += 1


# -- paths ----------------------------------------------------------------------------------


@given(cases(max_dim=5))
@SETTINGS
def test_families_share_size_and_are_disjoint(case):
    for E in valid_endpoint_sets(case)[:6]:
        fams = enumerate_families(E, case)
        assert fams
        assert {F.size for F in fams} == {family_size(E, case)}
        for F in fams[:50]:
            assert len(F.points) == F.size
    assert max(family_size(E, case) for E in valid_endpoint_sets(case)) == d_max(case)


@given(st.integers(1, 7), st.integers(1, 7), st.data())
@SETTINGS
def test_gl_single_path_counts_are_binomial(p, q, data):
    case = GroupCase.gl(1, p, q)
    E = data.draw(st.sampled_from(valid_endpoint_sets(case)))
    end = (E.rows[0], q) if E.rows else (p, E.cols[0])
    assert len(enumerate_families(E, case)) == comb(end[0] + end[1] - 2, end[0] - 1)


@given(st.integers(2, 9), st.data())
@SETTINGS
def test_sp_single_path_counts_are_ballot_numbers(n, data):
    case = GroupCase.sp(1, n)
    E = data.draw(st.sampled_from(valid_endpoint_sets(case)))
    downs, rights = E.rows[0] - 1, n - 2
    want = comb(downs + rights, downs) - (comb(downs + rights, downs - 1) if downs else 0)
    assert len(enumerate_families(E, case)) == want


# -- tableaux ---------------------------------------------------------------------------------


@st.composite
def cases_with_shapes(draw, max_size=3, max_dim=4):
    case = draw(cases(max_dim=max_dim))
    shapes = all_shapes(case, max_size)
    return case, draw(st.sampled_from(shapes))


@given(cases_with_shapes())
@SETTINGS
def test_bins_partition_all_tableaux(cs):
    case, shape = cs
    sizes = bin_sizes(case, shape)
    if case.group is Group.GL:
        total = count_ssyt(shape.plus, case.q) * count_ssyt(shape.minus, case.p)
    else:
        total = count_ssyt(shape.plus, case.n)
    assert sum(sizes.values()) == total
    valid = set(valid_endpoint_sets(case))
    for T in enumerate_tableaux(case, shape)[:30]:
        assert assign_bin(T, case, shape) in valid


@given(st.data())
@SETTINGS
def test_gl_bin_depends_on_first_columns_only(data):
    case = GroupCase.gl(2, 3, 3)
    shape = data.draw(st.sampled_from([Shape((2,), ()), Shape((2,), (1,)), Shape((3,), (2,)), Shape((2, 1), ())]))
    tabs = enumerate_tableaux(case, shape)
    T = data.draw(st.sampled_from(tabs))
    same_first = [U for U in tabs if U.first_column("plus") == T.first_column("plus")
                  and U.first_column("minus") == T.first_column("minus")]
    assert {assign_bin(U, case, shape) for U in same_first} == {assign_bin(T, case, shape)}


@given(st.sampled_from([(1,), (2,), (1, 1), (2, 1), (3, 2)]), st.integers(1, 4))
@SETTINGS
def test_ssyt_enumeration_is_semistandard(shape, n):
    tabs = enumerate_ssyt(shape, n)
    assert len(set(tabs)) == len(tabs)
    assert all(is_semistandard(T.rows, n) for T in tabs)


# -- series ------------------------------------------------------------------------------------


@given(
    st.dictionaries(st.integers(0, 8), st.integers(-5, 5), max_size=5),
    st.lists(st.tuples(st.integers(1, 4), st.integers(1, 3)), min_size=1, max_size=3),
)
@SETTINGS
def test_reduce_preserves_expansion(num, den):
    s = RationalSeries.from_terms(num, den)
    assert expand(reduce(s), 20) == expand(s, 20)


@given(cases(max_dim=5))
@SETTINGS
def test_p_e_numerators_positive(case):
    for E in valid_endpoint_sets(case)[:8]:
        P = p_e_series(E, case)
        assert all(c >= 0 for c in P.numerator)
        assert P.numerator[0] == 1


# -- stanley -----------------------------------------------------------------------------------


@st.composite
def f_monomials(draw, case):
    pts = list(build_poset(case).points)
    exps = draw(st.dictionaries(st.sampled_from(pts), st.integers(1, 3), max_size=4))
    return Monomial(tuple(exps.items()))


@given(st.data())
@SETTINGS
def test_weight_is_additive_with_one_shift(data):
    case = data.draw(cases(max_dim=4))
    shape = data.draw(st.sampled_from(all_shapes(case, 2)))
    T = data.draw(st.sampled_from(enumerate_tableaux(case, shape)))
    a = data.draw(f_monomials(case))
    b = data.draw(f_monomials(case))
    base = ShapedTableau((), ()) if case.group is Group.GL else ShapedTableau()
    ma = Monomial(a.exponents, T)
    mb = Monomial(b.exponents, base)
    one = weight(Monomial((), base), case).entries
    wa, wb = weight(ma, case).entries, weight(mb, case).entries
    got = weight(ma.times(mb), case).entries
    assert got == tuple(x + y - z for x, y, z in zip(wa, wb, one))


@given(cases(max_dim=4))
@SETTINGS
def test_lambda_from_tau_injective(case):
    shapes = all_shapes(case, 4)
    images = {lambda_from_tau(case, s).entries for s in shapes}
    assert len(images) == len(shapes)


@given(cases(max_dim=4), st.data())
@SETTINGS
def test_render_round_trip(case, data):
    E = data.draw(st.sampled_from(valid_endpoint_sets(case)))
    fams = enumerate_families(E, case)
    F = data.draw(st.sampled_from(fams))
    back = parse_ascii(render(F, "ascii"))
    assert back.paths == F.paths and back.corners == F.corners


# -- oracle ------------------------------------------------------------------------------------


@given(st.data())
@SETTINGS
def test_split_supports_are_antichains(data):
    case = data.draw(st.sampled_from([GroupCase.sp(2, 6), GroupCase.gl(2, 3, 3), GroupCase.o(2, 4)]))
    shape = data.draw(st.sampled_from(all_shapes(case, 2)))
    T = data.draw(st.sampled_from(enumerate_tableaux(case, shape)))
    pts = sorted(build_poset(case).points)
    S = data.draw(st.lists(st.sampled_from(pts), min_size=1, max_size=4, unique=True))
    incomparable = _flipped_incomparable if case.group is Group.O else _product_incomparable
    for sp in splits(S, T, case):
        sp.validate()
        assert set(sp.points) <= set(S)
        assert all(incomparable(a, b) for a in sp.points for b in sp.points if a != b)
        assert len(sp.points) + sp.t + sp.w == case.k + 1
