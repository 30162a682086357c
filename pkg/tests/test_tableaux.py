from fractions import Fraction
from math import comb, prod

import pytest

from jellyfish.paths import EndpointSet, d_max, family_size
from jellyfish.poset import GroupCase
from jellyfish.tableaux import (
    Shape,
    ShapedTableau,
    ShapeError,
    all_shapes,
    assign_bin,
    bin_sizes,
    check_shape,
    content,
    count_ssyt,
    dim_u,
    enumerate_ssyt,
    enumerate_tableaux,
    is_semistandard,
    tau_max_check,
)


def hook_content(shape, n):
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    num = prod(n + j - i for i, j in cells)
    den = prod((shape[i] - j) + (conj[j] - i) - 1 for i, j in cells)
    return Fraction(num, den)


@pytest.mark.parametrize("shape", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_ssyt_counts_match_hook_content(shape, n):
    assert count_ssyt(shape, n) == hook_content(shape, n)
    tabs = enumerate_ssyt(shape, n)
    assert len(tabs) == count_ssyt(shape, n)
    assert all(is_semistandard(T.rows, n) for T in tabs)


def test_shape_parse():
    assert Shape.parse("2,1") == Shape((2, 1))
    assert Shape.parse("1,0,-1") == Shape((1,), (1,))
    assert Shape.parse("") == Shape()
    assert Shape.parse("(3,-2)").entries(3) == (3, 0, -2)
    with pytest.raises(ShapeError):
        Shape.parse("1,2")
    with pytest.raises(ShapeError):
        Shape.parse("a")


def test_check_shape():
    check_shape(GroupCase.sp(2, 6), Shape((2, 1)))
    with pytest.raises(ShapeError):
        check_shape(GroupCase.sp(2, 6), Shape((1, 1, 1)))
    with pytest.raises(ShapeError):
        check_shape(GroupCase.o(2, 4), Shape((2,)))  # only (1^m) for O
    with pytest.raises(ShapeError):
        check_shape(GroupCase.gl(2, 3, 3), Shape((1,), (1, 1)))  # length 3 > k
    with pytest.raises(ShapeError):
        check_shape(GroupCase.sp(2, 6), Shape((1,), (1,)))


@pytest.mark.parametrize(
    "case, shape",
    [
        (GroupCase.sp(2, 6), Shape((2, 1))),
        (GroupCase.o(3, 7), Shape((1,))),
        (GroupCase.gl(3, 3, 4), Shape((1,), (1,))),
        (GroupCase.gl(2, 3, 3), Shape((2, 1))),
    ],
)
def test_bins_partition_the_tableaux(case, shape):
    tabs = enumerate_tableaux(case, shape)
    sizes = bin_sizes(case, shape)
    assert sum(sizes.values()) == len(tabs)
    for T in tabs:
        E = assign_bin(T, case, shape)
        assert sizes[E] > 0
    assert tau_max_check(case, shape)


def test_sp_bins():
    sizes = {E.rows: m for E, m in bin_sizes(GroupCase.sp(2, 6), Shape((2, 1))).items() if m}
    assert sizes == {(1, 2): 6, (1, 3): 6, (1, 4): 6, (1, 5): 12, (2, 3): 5, (2, 4): 5, (2, 5): 10, (3, 4): 4, (3, 5): 16}


def test_o_bin_is_lex_first_superset():
    case = GroupCase.o(3, 6)
    T = ShapedTableau(((2,), (5,)))
    assert assign_bin(T, case).rows == (1, 2, 5)


def test_dim_u():
    # GL_2 adjoint is 3-dimensional; Sp_4 with tau=(2,1) is 16; wedge^2 of C^3 is 3
    assert dim_u(GroupCase.gl(2, 3, 3), Shape((1,), (1,))) == 3
    assert dim_u(GroupCase.sp(2, 6), Shape((2, 1))) == 16
    assert dim_u(GroupCase.o(3, 5), Shape((1, 1))) == comb(3, 2)


def test_content():
    T = ShapedTableau(((1, 2), (3,)))
    assert content(T, 4) == (1, 1, 1, 0)


def test_all_shapes_are_admissible():
    case = GroupCase.gl(2, 2, 3)
    shapes = all_shapes(case, 2)
    assert Shape() in shapes and Shape((1,), (1,)) in shapes
    assert all(s.size <= 2 for s in shapes)


def test_gl_max_bin():
    case = GroupCase.gl(3, 3, 4)
    maxes = [E for E, m in bin_sizes(case, Shape((1,), (1,))).items() if m and family_size(E, case) == d_max(case)]
    assert sum(bin_sizes(case, Shape((1,), (1,)))[E] for E in maxes) == 8
    assert all(isinstance(E, EndpointSet) for E in maxes)
