import importlib.util
import sys
from itertools import combinations
from pathlib import Path

import pytest

from jellyfish.oracle import (
    Split,
    check_equivalence,
    count_standard,
    garnir_terms,
    is_standard,
    o_monomial_key,
    split_monomial,
    splits,
    standard_supports,
)
from jellyfish.poset import CaseError, Group, GroupCase, PosetPoint
from jellyfish.series import covariant_series, expand, invariant_series
from jellyfish.stanley import Monomial, NonStandardError, locate
from jellyfish.tableaux import Shape, ShapedTableau

_spec = importlib.util.spec_from_file_location(
    "rank_check", Path(__file__).resolve().parent.parent / "scripts" / "rank_check.py"
)
rank_check = sys.modules["rank_check"] = importlib.util.module_from_spec(_spec)
_spec.loader.exec_module(rank_check)


def test_rank_oracle_gl():
    # independent modular-rank dimensions against the series (degrees 1, 3, 5)
    dims = rank_check.dimensions(rank_check.RankCase("gl", 2, p=3, q=3), t=1, max_e=2)
    coeffs = expand(covariant_series(GroupCase.gl(2, 3, 3), Shape((1,))).reduced, 5)
    assert dims == [coeffs[1], coeffs[3], coeffs[5]] == [3, 27, 132]


def test_rank_oracle_sp():
    dims = rank_check.dimensions(rank_check.RankCase("sp", 2, n=5), t=2, max_e=1)
    coeffs = expand(covariant_series(GroupCase.sp(2, 5), Shape((1, 1))).reduced, 4)
    assert dims == [coeffs[2], coeffs[4]]


def test_rank_oracle_agrees_with_standard_count():
    dims = rank_check.dimensions(rank_check.RankCase("gl", 2, p=3, q=3), t=1, max_e=2)
    counts = count_standard(GroupCase.gl(2, 3, 3), Shape((1,)), 5)
    assert dims == [counts[1], counts[3], counts[5]]


@pytest.mark.parametrize("case", [GroupCase.gl(2, 3, 3), GroupCase.sp(2, 5), GroupCase.o(2, 3), GroupCase.gl(1, 2, 3)])
def test_standard_count_matches_invariant_series(case):
    assert count_standard(case, Shape(), 8) == expand(invariant_series(case), 8)


@pytest.mark.parametrize(
    "case, tau",
    [(GroupCase.sp(2, 5), "1"), (GroupCase.o(2, 4), "1,1"), (GroupCase.gl(2, 2, 3), "1,-1")],
)
def test_check_equivalence(case, tau):
    rep = check_equivalence(case, Shape.parse(tau), 7, 5)
    assert rep.ok and rep.witness is None
    body = rep.to_json()
    assert all(row["oracle"] == row["series"] == row["stanley"] for row in body["per_degree"])


def test_locate_agrees_with_standardness():
    case = GroupCase.sp(2, 5)
    T = ShapedTableau(((1,),))
    pts = sorted(PosetPoint(i, j) for i in range(1, 6) for j in range(i + 1, 6))
    for a in pts:
        for b in pts:
            m = Monomial(((a, 1), (b, 1)), T)
            if is_standard(m, case):
                j = locate(m, case)
                assert j.family.corners <= m.support <= j.family.points
            else:
                with pytest.raises(NonStandardError):
                    locate(m, case)


def test_split_validation():
    # f_14 f_23 is the leading term of the Pluecker relation
    good = Split(Group.SP, 1, (PosetPoint(1, 4), PosetPoint(2, 3)))
    assert good.r == 2
    assert split_monomial(good).support == {PosetPoint(1, 4), PosetPoint(2, 3)}
    with pytest.raises(CaseError):
        split_monomial(Split(Group.SP, 1, (PosetPoint(1, 3), PosetPoint(2, 4))))  # comparable points
    with pytest.raises(CaseError):
        split_monomial(Split(Group.SP, 2, (PosetPoint(1, 3),)))  # r + t != k + 1


def test_splits_are_antichains():
    case = GroupCase.sp(2, 6)
    T = ShapedTableau(((2,), (3,)))
    S = [PosetPoint(1, 6), PosetPoint(4, 5), PosetPoint(3, 4), PosetPoint(5, 6)]
    found = list(splits(S, T, case))
    assert found
    for sp in found:
        sp.validate()


def test_standard_supports_downward_closed():
    case = GroupCase.o(2, 3)
    supports = set(standard_supports(ShapedTableau(), case, 3))
    for S in supports:
        assert all(S - {p} in supports for p in S)


def test_o_garnir_leading_term():
    # each split monomial is the leading term of its Garnir relation
    case = GroupCase.o(2, 3)
    pts = sorted(PosetPoint(i, j) for i in range(1, 4) for j in range(i, 4))
    T = ShapedTableau(((3,),))
    seen = 0
    for a, b in combinations(pts, 2):
        for sp in splits([a, b], T, case):
            terms = garnir_terms(sp)
            lead = split_monomial(sp)
            assert lead in terms
            assert max(o_monomial_key(m, 3) for m in terms) == o_monomial_key(lead, 3)
            seen += 1
    assert seen


def test_garnir_only_for_o():
    with pytest.raises(CaseError):
        garnir_terms(Split(Group.SP, 1, (PosetPoint(1, 4), PosetPoint(2, 3))))
