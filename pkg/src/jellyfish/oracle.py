"""Brute-force standard monomial oracle built directly from split monomials.

A monomial ``prod f_ij^e * phi_T`` is standard when no split monomial divides
it.  Split monomials are squarefree in the f_ij and carry one column of T (or
the empty column), so standardness depends only on the support and on T.
Nothing here uses lattice paths; the oracle is an independent check on the
jellyfish machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence

from .paths import _enumerate_families
from .poset import CaseError, Group, GroupCase, PosetPoint, build_poset
from .series import covariant_series, expand
from .stanley import Monomial
from .tableaux import Shape, ShapedTableau, assign_bin, check_shape, enumerate_tableaux


@dataclass(frozen=True)
class Split:
    """An antichain of f's together with a tableau column it is read against.

    ``column`` holds t tail entries d (the smallest for Sp, the largest for
    O) and the rest a.  For GL ``column`` is the unstarred column with ``w``
    tail entries and ``starred`` the starred one with ``t``.
    """

    group: Group
    k: int
    points: tuple[PosetPoint, ...]
    column: tuple[int, ...] = ()
    t: int = 0
    starred: tuple[int, ...] = ()
    w: int = 0

    @property
    def r(self) -> int:
        return len(self.points)

    def tails(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(d, d*) tail sequences, d_1 first."""
        if self.group is Group.O:
            desc = sorted(self.column, reverse=True)
            return tuple(desc[: self.t][::-1]), ()
        if self.group is Group.SP:
            return tuple(sorted(self.column)[: self.t][::-1]), ()
        return tuple(sorted(self.column)[: self.w][::-1]), tuple(sorted(self.starred)[: self.t][::-1])

    def validate(self) -> None:
        k, t = self.k, self.t
        d, ds = self.tails()
        if self.group is Group.SP:
            s = len(self.column) - t
            ok = self.r >= s and s + t <= 2 * k and self.r + t == k + 1
            ok = ok and _is_antichain(self.points, _product_incomparable)
            ok = ok and all(p.row > (d[0] if d else 0) for p in self.points)
        elif self.group is Group.GL:
            s, v = len(self.starred) - t, len(self.column) - self.w
            total = k + 1 - t - self.w
            ok = self.r == total > 0 and total >= s + v and s + t <= k and v + self.w <= k
            ok = ok and _is_antichain(self.points, _product_incomparable)
            ok = ok and all(p.col > (d[0] if d else 0) and p.row > (ds[0] if ds else 0) for p in self.points)
        else:
            s = len(self.column) - t
            ok = self.r >= s and self.r + t == k + 1
            ok = ok and _is_antichain(self.points, _flipped_incomparable)
            ok = ok and all(not d or p.row < d[0] for p in self.points)
            ok = ok and all(p.row <= p.col for p in self.points)
        if not ok:
            raise CaseError(f"invalid {self.group.value} split {self}")


def split_monomial(split: Split) -> Monomial:
    """Antichain of f's times the det/phi factor of the split's column."""
    split.validate()
    exps = tuple((p, 1) for p in split.points)
    col = tuple((x,) for x in sorted(split.column))
    if split.group is Group.GL:
        return Monomial(exps, ShapedTableau(col, tuple((x,) for x in sorted(split.starred))))
    return Monomial(exps, ShapedTableau(col))


def _is_antichain(points: Sequence[PosetPoint], incomparable) -> bool:
    return all(incomparable(a, b) for a, b in combinations(points, 2))


def _antichains(points: Sequence[PosetPoint], incomparable, size: int) -> Iterator[tuple[PosetPoint, ...]]:
    for combo in combinations(points, size):
        if _is_antichain(combo, incomparable):
            yield combo


def _product_incomparable(a: PosetPoint, b: PosetPoint) -> bool:
    return (a.row - b.row) * (a.col - b.col) < 0


def _flipped_incomparable(a: PosetPoint, b: PosetPoint) -> bool:
    # (i,j) <= (i',j') iff i <= i' and j >= j'
    return (a.row - b.row) * (a.col - b.col) > 0


def _columns_with_empty(T: ShapedTableau, which: str) -> list[tuple[int, ...]]:
    return [()] + [tuple(c) for c in T.columns(which)]


def _sp_splits(S: Sequence[PosetPoint], T: ShapedTableau, k: int) -> Iterator[Split]:
    for col in _columns_with_empty(T, "plus"):
        asc = sorted(col)
        for t in range(0, min(len(col), k + 1) + 1):
            s, r = len(col) - t, k + 1 - t
            if r < s or r <= 0:
                continue
            d1 = asc[t - 1] if t else 0
            pool = [p for p in S if p.row > d1]
            for chain in _antichains(pool, _product_incomparable, r):
                yield Split(Group.SP, k, chain, col, t)


def _gl_splits(S: Sequence[PosetPoint], T: ShapedTableau, k: int) -> Iterator[Split]:
    # The southwesternmost split point lies east of d_1 and the northeasternmost
    # lies south of d*_1, so the whole antichain is bounded by both.
    for cm in _columns_with_empty(T, "minus"):
        for cp in _columns_with_empty(T, "plus"):
            am, ap = sorted(cm), sorted(cp)
            for t in range(len(cm) + 1):
                for w in range(len(cp) + 1):
                    s, v = len(cm) - t, len(cp) - w
                    if s + t > k or v + w > k:
                        continue
                    total = k + 1 - t - w
                    # some r + u = total must have r >= s and u >= v
                    if total <= 0 or total < s + v:
                        continue
                    dstar = am[t - 1] if t else 0
                    d = ap[w - 1] if w else 0
                    pool = [p for p in S if p.row > dstar and p.col > d]
                    for chain in _antichains(pool, _product_incomparable, total):
                        yield Split(Group.GL, k, chain, cp, t, cm, w)


def _o_splits(S: Sequence[PosetPoint], T: ShapedTableau, k: int) -> Iterator[Split]:
    col = tuple(T.first_column())
    desc = sorted(col, reverse=True)
    for t in range(len(col) + 1):
        r = k + 1 - t
        if r < len(col) - t:
            continue
        d1 = desc[t - 1] if t else None
        pool = [p for p in S if d1 is None or p.row < d1]
        for chain in _antichains(pool, _flipped_incomparable, r):
            yield Split(Group.O, k, chain, col, t)


def splits(support: Iterable[PosetPoint], T: ShapedTableau, case: GroupCase) -> Iterator[Split]:
    """Every split whose monomial divides a monomial with this support and tableau."""
    S = sorted(set(support))
    if case.group is Group.GL:
        return _gl_splits(S, T, case.k)
    if case.group is Group.SP:
        return _sp_splits(S, T, case.k)
    return _o_splits(S, T, case.k)


def find_split(support: Iterable[PosetPoint], T: ShapedTableau, case: GroupCase) -> Split | None:
    return next(iter(splits(support, T, case)), None)


@lru_cache(maxsize=None)
def _standard(S: frozenset, T: ShapedTableau, case: GroupCase) -> bool:
    return find_split(S, T, case) is None


def is_standard(m: Monomial, case: GroupCase) -> bool:
    T = m.tableau
    if case.group is Group.GL and not T.is_pair:
        T = ShapedTableau(T.rows, ())
    return _standard(frozenset(m.support), T, case)


def standard_supports(T: ShapedTableau, case: GroupCase, max_size: int) -> list[frozenset]:
    """Standard supports of size <= max_size; standardness is closed under subsets."""
    pts = sorted(build_poset(case).points)
    good = {frozenset()}
    layer = [frozenset()]
    for _ in range(max_size):
        nxt = []
        for S in layer:
            top = max(S) if S else None
            for p in pts:
                if top is not None and p <= top:
                    continue
                S2 = S | {p}
                if all((S2 - {q}) in good for q in S2) and _standard(S2, T, case):
                    nxt.append(S2)
        good.update(nxt)
        layer = nxt
    return sorted(good, key=lambda s: (len(s), sorted(s)))


def count_standard(case: GroupCase, shape: Shape, max_degree: int) -> list[int]:
    """Number of standard monomials in each degree 0..max_degree.

    A support of size j carries C(e-1, j-1) monomials of f-degree e, and a
    monomial has degree 2e + |tau|.
    """
    check_shape(case, shape)
    counts = [0] * (max_degree + 1)
    tau = shape.size
    if tau > max_degree:
        return counts
    emax = (max_degree - tau) // 2
    for T in enumerate_tableaux(case, shape):
        for S in standard_supports(T, case, emax):
            j = len(S)
            if not j:
                counts[tau] += 1
                continue
            for e in range(j, emax + 1):
                counts[2 * e + tau] += comb(e - 1, j - 1)
    return counts


# -- equivalence with the jellyfish side ------------------------------------------------


@dataclass
class EquivalenceReport:
    case: GroupCase
    shape: Shape
    max_degree: int
    oracle: list[int]
    series: list[int]
    stanley: list[int]
    witness: str | None = None
    locate_checked: int = 0

    @property
    def ok(self) -> bool:
        return self.oracle == self.series == self.stanley and self.witness is None

    def to_json(self) -> dict:
        per = [
            {
                "D": D,
                "oracle": self.oracle[D],
                "series": self.series[D],
                "stanley": self.stanley[D],
                "ok": self.oracle[D] == self.series[D] == self.stanley[D],
            }
            for D in range(self.max_degree + 1)
        ]
        return {
            "case": self.case.to_json(),
            "tau": str(self.shape),
            "per_degree": per,
            "locate_checked": self.locate_checked,
            "witness": self.witness,
            "ok": self.ok,
        }


def _stanley_counts(case: GroupCase, shape: Shape, D: int) -> list[int]:
    # C[F] f_cor phi_T has C(e - c + |F| - 1, |F| - 1) monomials in f-degree e
    counts = [0] * (D + 1)
    tau = shape.size
    by_bin: dict = {}
    for T in enumerate_tableaux(case, shape):
        E = assign_bin(T, case)
        by_bin[E] = by_bin.get(E, 0) + 1
    for E, mult in by_bin.items():
        for F in _enumerate_families(E, case):
            n, c = F.size, len(F.corners)
            for e in range(c, (D - tau) // 2 + 1):
                counts[2 * e + tau] += mult * comb(e - c + n - 1, n - 1)
    return counts


def check_equivalence(
    case: GroupCase, shape: Shape, max_degree: int, locate_degree: int | None = None
) -> EquivalenceReport:
    """Compare oracle counts with the series coefficients and the Stanley spaces.

    Up to ``locate_degree`` every support is tested both ways: a standard
    support lies in exactly one space of its bin, a nonstandard one in none.
    Monomials sharing a support and tableau behave identically, so this
    covers every monomial of those degrees.
    """
    case.require_range()
    check_shape(case, shape)
    oracle = count_standard(case, shape, max_degree)
    series = expand(covariant_series(case, shape).reduced, max_degree)
    stanley = _stanley_counts(case, shape, max_degree)
    rep = EquivalenceReport(case, shape, max_degree, oracle, series, stanley)
    bad = [D for D in range(max_degree + 1) if not oracle[D] == series[D] == stanley[D]]
    if bad:
        D = bad[0]
        rep.witness = f"degree {D}: oracle {oracle[D]}, series {series[D]}, stanley {stanley[D]}"
        return rep
    locate_degree = max_degree if locate_degree is None else locate_degree
    emax = (locate_degree - shape.size) // 2
    pts = sorted(build_poset(case).points)
    for T in enumerate_tableaux(case, shape) if emax >= 0 else ():
        fams = _enumerate_families(assign_bin(T, case), case)
        for j in range(emax + 1):
            for combo in combinations(pts, j):
                S = frozenset(combo)
                hits = sum(1 for F in fams if F.corners <= S <= F.points)
                rep.locate_checked += 1
                if hits != (1 if _standard(S, T, case) else 0):
                    m = Monomial(tuple((p, 1) for p in S), T)
                    rep.witness = f"{m.format(case.group)} lies in {hits} Stanley spaces"
                    return rep
    return rep


# -- the O leading-term order --------------------------------------------------------------


def o_monomial_key(m: Monomial, n: int) -> tuple:
    """Order used for O: phi_T lexicographically, then f_11 > f_12 > ... > f_nn."""
    order = [PosetPoint(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return (tuple(sorted(m.tableau.first_column())), tuple(m.exponent(p) for p in order))


def garnir_terms(split: Split) -> list[Monomial]:
    """Monomials of the O Garnir relation attached to ``split``.

    Each exchange of a subset of D with an equal-size subset of B changes the
    rows of the minor and the phi column; the minor is then expanded.
    """
    if split.group is not Group.O:
        raise CaseError("Garnir terms are only used for O")
    split.validate()
    B = [p.row for p in split.points]
    C = [p.col for p in split.points]
    D = list(split.tails()[0])
    A = [x for x in split.column if x not in D]
    out = []
    for size in range(min(len(B), len(D)) + 1):
        for Bx in combinations(B, size):
            for Dx in combinations(D, size):
                rows = sorted([b for b in B if b not in Bx] + list(Dx))
                col = tuple(sorted(A + [d for d in D if d not in Dx] + list(Bx)))
                T = ShapedTableau(tuple((x,) for x in col))
                for perm in permutations(C):
                    exps: dict[PosetPoint, int] = {}
                    for a, b in zip(rows, perm):
                        pt = PosetPoint(min(a, b), max(a, b))
                        exps[pt] = exps.get(pt, 0) + 1
                    out.append(Monomial(tuple(exps.items()), T))
    return out
