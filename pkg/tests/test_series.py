from math import comb

import pytest

from jellyfish.poset import GroupCase, WallachCase
from jellyfish.series import (
    RationalSeries,
    add,
    bernstein_degree,
    chain_length,
    covariant_series,
    cyclotomic,
    equal,
    expand,
    invariant_series,
    maximal_chains,
    mul,
    one_minus,
    over_single_base,
    poly_divmod,
    poly_mul,
    q_e_series,
    reduce,
    scale,
    so_invariant_series,
    to_latex,
    to_text,
    wallach_series,
)
from jellyfish.tableaux import Shape


def rs(num, *den):
    return RationalSeries.from_terms(num, den)


def test_poly_helpers():
    assert one_minus(2, 3) == (1, 0, -3, 0, 3, 0, -1)
    q, r = poly_divmod(poly_mul((1, 1), (1, 2, 3)), (1, 1))
    assert q == (1, 2, 3) and not any(r)
    assert cyclotomic(6) == (1, -1, 1)


def test_reduce_cancels_and_preserves_expansion():
    s = rs({0: 1, 2: -1}, (2, 3))  # (1-t^2)/(1-t^2)^3
    red = reduce(s)
    assert red == rs({0: 1}, (2, 2))
    assert expand(s, 12) == expand(red, 12)
    mixed = rs({0: 1, 3: 1}, (2, 1), (3, 2))  # (1+t^3)/((1-t^2)(1-t^3)^2)
    assert expand(reduce(mixed), 20) == expand(mixed, 20)


def test_add_and_equal():
    a = rs({0: 1}, (2, 1))
    b = rs({2: 1}, (2, 2))
    s = add(a, b)
    assert expand(s, 10) == [x + y for x, y in zip(expand(a, 10), expand(b, 10))]
    assert equal(s, reduce(s))
    assert expand(scale(a, 3, 1), 5) == [0, 3, 0, 3, 0, 3]
    assert expand(mul(a, b), 6) == [0, 0, 1, 0, 3, 0, 6]


def test_text_and_latex():
    s = rs({3: 70, 5: -14, 7: -14, 9: 6}, (2, 14))
    assert to_latex(s).replace(" ", "") == r"\frac{70t^3-14t^5-14t^7+6t^9}{(1-t^2)^{14}}"
    assert "(1-t^2)^14" in to_text(s)


@pytest.mark.parametrize("p, q", [(2, 3), (3, 3), (3, 4)])
def test_segre_series(p, q):
    coeffs = expand(invariant_series(GroupCase.gl(1, p, q)), 10)
    assert [coeffs[2 * e] for e in range(6)] == [comb(p + e - 1, e) * comb(q + e - 1, e) for e in range(6)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_veronese_series(n):
    coeffs = expand(invariant_series(GroupCase.o(1, n)), 10)
    assert [coeffs[2 * e] for e in range(6)] == [comb(n + 2 * e - 1, 2 * e) for e in range(6)]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_plucker_series(n):
    # degree e piece of the Grassmannian Gr(2,n): two-row rectangle (e,e) count
    coeffs = expand(invariant_series(GroupCase.sp(1, n)), 10)
    want = [comb(n + e - 1, e) * comb(n + e - 2, e) // (e + 1) for e in range(6)]
    assert [coeffs[2 * e] for e in range(6)] == want


def test_free_range_is_polynomial_ring():
    s = invariant_series(GroupCase.sp(4, 6))
    assert s == rs({0: 1}, (2, 15))


def test_covariant_series_shift_and_reduction():
    cs = covariant_series(GroupCase.o(3, 7), Shape((1,)))
    assert expand(cs.reduced, 15) == expand(cs.unreduced(), 15)
    assert expand(cs.reduced, 0) == [0]
    assert cs.reduced.numerator[1] == 7  # t^1 coefficient: the 7 linear covariants


@pytest.mark.parametrize("E, n, k", [((2, 4, 5), 8, 3), ((1, 2), 5, 2), ((1, 3, 4), 4, 3), ((2,), 6, 1)])
def test_q_e_matches_chain_enumeration(E, n, k):
    chains = maximal_chains(E, n, k)
    assert {c.size for c in chains} == {chain_length(E, n, k)}
    q = q_e_series(E, n, k)
    counts = {}
    for c in chains:
        counts[k * len(c.corners)] = counts.get(k * len(c.corners), 0) + 1
    assert q == rs(counts, (k, chain_length(E, n, k)))


def test_so_invariants_contain_o_invariants():
    so = so_invariant_series(2, 3)
    o = invariant_series(GroupCase.o(2, 3))
    s, t = expand(so, 10), expand(o, 10)
    assert all(a >= b for a, b in zip(s, t))
    # degree 2: the six f_ij plus the three 2x2 determinants det(v_i, v_j)
    assert t[2] == 6 and s[2] == 6 + comb(3, 2)


def test_wallach_dn():
    assert wallach_series(WallachCase("Dn", 1, 7)) == rs({0: 1, 1: 1}, (1, 11))


def test_over_single_base():
    s = rs({0: 1}, (2, 3))
    assert over_single_base(s, 2, 4) == (1, 0, -1)


def test_bernstein_degrees():
    assert bernstein_degree(GroupCase.sp(2, 6), Shape((2, 1))) == 48
    assert bernstein_degree(GroupCase.gl(1, 2, 3), Shape()) == 3  # Segre P1 x P2
