"""Exact rational generating functions with factored denominators.

A series is ``N(t) / prod (1 - t^a)^e`` with integer numerator ``N``.
Everything is plain Python integers; denominators stay factored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .paths import (
    EndpointSet,
    _enumerate_families,
    _valid_endpoint_sets,
    e_max,
    enumerate_families,
    family_size,
    require_endpoints,
    wallach_facets,
)
from .poset import CaseError, GroupCase, WallachCase, build_poset
from .tableaux import Shape, bin_sizes, check_shape, tau_max_size

Poly = tuple[int, ...]


# -- dense integer polynomials (index = exponent) ------------------------------


def _trim(c: Sequence[int]) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    """Division by a polynomial with leading coefficient +-1."""
    b = _trim(b)
    if not b or abs(b[-1]) != 1:
        raise ValueError("divisor must have unit leading coefficient")
    rem = list(_trim(a))
    if len(rem) < len(b):
        return (), tuple(rem)
    quot = [0] * (len(rem) - len(b) + 1)
    lead = b[-1]
    for i in range(len(quot) - 1, -1, -1):
        coeff = rem[i + len(b) - 1] * lead
        quot[i] = coeff
        if coeff:
            for j, y in enumerate(b):
                rem[i + j] -= coeff * y
    return _trim(quot), _trim(rem)


def one_minus(a: int, e: int = 1) -> Poly:
    """(1 - t^a)^e."""
    out: Poly = (1,)
    base = [0] * (a + 1)
    base[0], base[a] = 1, -1
    for _ in range(e):
        out = poly_mul(out, base)
    return out


def poly_eval(c: Sequence[int], x: int) -> int:
    total = 0
    for coeff in reversed(c):
        total = total * x + coeff
    return total


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """Phi_d from t^d - 1 = prod_{e | d} Phi_e."""
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num, rem = poly_divmod(num, cyclotomic(e))
            assert not rem
    return _trim(num)


def _divisors(a: int) -> list[int]:
    return [d for d in range(1, a + 1) if a % d == 0]


# -- series --------------------------------------------------------------------


def _norm_den(den: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for a, e in den:
        if a < 1 or e < 0:
            raise ValueError(f"bad denominator factor (1-t^{a})^{e}")
        if e:
            acc[a] = acc.get(a, 0) + e
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class RationalSeries:
    numerator: Poly = ()
    denominator: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", _trim(self.numerator))
        object.__setattr__(self, "denominator", _norm_den(self.denominator))

    @classmethod
    def from_terms(cls, terms: dict[int, int], den: Iterable[tuple[int, int]] = ()) -> "RationalSeries":
        top = max(terms, default=-1)
        num = [0] * (top + 1)
        for e, c in terms.items():
            num[e] += c
        return cls(tuple(num), tuple(den))

    @property
    def den_poly(self) -> Poly:
        out: Poly = (1,)
        for a, e in self.denominator:
            out = poly_mul(out, one_minus(a, e))
        return out

    def numerator_terms(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.numerator) if c]

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        return add(self, other)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        return mul(self, other)

    def to_json(self) -> dict:
        return {
            "numerator": [[e, c] for e, c in self.numerator_terms()],
            "denominator": [[a, e] for a, e in self.denominator],
        }

    def latex(self, var: str = "t") -> str:
        return to_latex(self, var)

    def __str__(self) -> str:
        return to_text(self)


ZERO = RationalSeries()
ONE = RationalSeries((1,))


def add(s1: RationalSeries, s2: RationalSeries) -> RationalSeries:
    """Sum over the least common product of the two denominators' factors."""
    d1, d2 = dict(s1.denominator), dict(s2.denominator)
    common = {a: max(d1.get(a, 0), d2.get(a, 0)) for a in set(d1) | set(d2)}
    n1, n2 = s1.numerator, s2.numerator
    for a, e in common.items():
        n1 = poly_mul(n1, one_minus(a, e - d1.get(a, 0)))
        n2 = poly_mul(n2, one_minus(a, e - d2.get(a, 0)))
    return RationalSeries(poly_add(n1, n2), tuple(common.items()))


def mul(s1: RationalSeries, s2: RationalSeries) -> RationalSeries:
    return RationalSeries(poly_mul(s1.numerator, s2.numerator), s1.denominator + s2.denominator)


def scale(s: RationalSeries, c: int = 1, t_shift: int = 0) -> RationalSeries:
    """c * t^t_shift * s."""
    if t_shift < 0:
        raise ValueError("negative shifts are not supported")
    return RationalSeries((0,) * t_shift + tuple(c * x for x in s.numerator), s.denominator)


def total(series: Iterable[RationalSeries]) -> RationalSeries:
    acc = ZERO
    for s in series:
        acc = add(acc, s)
    return acc


def expand(s: RationalSeries, D: int) -> list[int]:
    """Taylor coefficients c_0..c_D."""
    if D < 0:
        raise ValueError("D must be nonnegative")
    coeffs = list(s.numerator[: D + 1]) + [0] * max(0, D + 1 - len(s.numerator))
    for a, e in s.denominator:
        for _ in range(e):
            for i in range(a, D + 1):
                coeffs[i] += coeffs[i - a]
    return coeffs


def _cover(needs: dict[int, int]) -> list[int]:
    """Cheapest multiset of bases a whose (1-t^a) cover the cyclotomic needs.

    Uses the fewest factors possible, then minimal total degree; ties go to
    the multiset with the smaller largest bases.
    """
    ds = sorted(d for d, m in needs.items() if m > 0 and d > 1)
    slots = max([needs.get(1, 0)] + [needs[d] for d in ds])
    cands = {1}
    for d in ds:
        cands |= {c * d // gcd(c, d) for c in cands}
    bases = sorted(cands, reverse=True)  # base 1 comes last

    @lru_cache(maxsize=None)
    def solve(idx: int, rem: tuple[int, ...], left: int):
        a = bases[idx]
        if a == 1:
            return (left, (1,) * left) if all(r <= 0 for r in rem) else None
        best = None
        for use in range(left + 1):
            new = tuple(max(r - use, 0) if a % d == 0 else r for d, r in zip(ds, rem))
            sub = solve(idx + 1, new, left - use)
            if sub is None:
                continue
            cand = (a * use + sub[0], (a,) * use + sub[1])
            if best is None or cand < best:
                best = cand
        return best

    res = solve(0, tuple(needs[d] for d in ds), slots)
    assert res is not None
    return sorted(res[1])


def reduce(s: RationalSeries) -> RationalSeries:
    """Lowest terms, rewritten over a minimal product of (1 - t^a) factors."""
    num = s.numerator
    if not num:
        return ZERO
    # (1 - t^a) = -prod_{d | a} Phi_d
    needs: dict[int, int] = {}
    sign_exp = 0
    for a, e in s.denominator:
        sign_exp += e
        for d in _divisors(a):
            needs[d] = needs.get(d, 0) + e
    for d in sorted(needs):
        phi = cyclotomic(d)
        while needs[d] > 0:
            q, r = poly_divmod(num, phi)
            if r:
                break
            num, needs[d] = q, needs[d] - 1
    bases = _cover(needs)
    have: dict[int, int] = {}
    for a in bases:
        for d in _divisors(a):
            have[d] = have.get(d, 0) + 1
    for d, m in have.items():
        for _ in range(m - needs.get(d, 0)):
            num = poly_mul(num, cyclotomic(d))
    if (len(bases) - sign_exp) % 2:
        num = tuple(-x for x in num)
    return RationalSeries(num, [(a, 1) for a in bases])


def equal(s1: RationalSeries, s2: RationalSeries) -> bool:
    """Equality as rational functions."""
    return poly_mul(s1.numerator, s2.den_poly) == poly_mul(s2.numerator, s1.den_poly)


def over_single_base(s: RationalSeries, base: int, exponent: int) -> Poly:
    """Numerator of ``s`` written over (1 - t^base)^exponent (must divide exactly)."""
    target = one_minus(base, exponent)
    num = poly_mul(s.numerator, target)
    q, r = poly_divmod(num, s.den_poly)
    if r:
        raise ValueError("denominator does not divide the requested one")
    return q


# -- formatting ----------------------------------------------------------------


def _poly_text(c: Sequence[int], var: str, latex: bool) -> str:
    parts = []
    for e, coeff in enumerate(c):
        if not coeff:
            continue
        mag = abs(coeff)
        if e == 0:
            mono = str(mag)
        else:
            powr = var if e == 1 else (f"{var}^{{{e}}}" if latex and e > 9 else f"{var}^{e}")
            mono = powr if mag == 1 else f"{mag}{powr}"
        sign = "-" if coeff < 0 else "+"
        parts.append((sign, mono))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        out += f" {sign} {mono}"
    return out


def _den_text(den: Sequence[tuple[int, int]], var: str, latex: bool) -> str:
    pieces = []
    for a, e in den:
        base = f"1-{var}" if a == 1 else f"1-{var}^{a}"
        if e == 1:
            pieces.append(f"({base})")
        else:
            pieces.append(f"({base})^{{{e}}}" if latex else f"({base})^{e}")
    return "".join(pieces) if latex else "*".join(pieces)


def to_latex(s: RationalSeries, var: str = "t") -> str:
    num = _poly_text(s.numerator, var, True)
    if not s.denominator:
        return num
    return f"\\frac{{{num}}}{{{_den_text(s.denominator, var, True)}}}"


def to_text(s: RationalSeries, var: str = "t") -> str:
    num = _poly_text(s.numerator, var, False)
    if not s.denominator:
        return num
    return f"({num}) / {_den_text(s.denominator, var, False)}"


# -- the generating functions --------------------------------------------------


def p_e_series(E: EndpointSet, case: GroupCase) -> RationalSeries:
    """Sum over families F => E of (t^2)^{#cor F}, over (1-t^2)^{d_E}."""
    require_endpoints(E, case)
    return _p_e_series(E, case)


@lru_cache(maxsize=None)
def _p_e_series(E: EndpointSet, case: GroupCase) -> RationalSeries:
    counts: dict[int, int] = {}
    for fam in _enumerate_families(E, case):
        c = len(fam.corners)
        counts[2 * c] = counts.get(2 * c, 0) + 1
    return RationalSeries.from_terms(counts, [(2, family_size(E, case))])


@dataclass(frozen=True)
class CovariantSeries:
    """The positive combination t^{|tau|} sum #tau_E P_E and its reduced form."""

    case: GroupCase
    shape: Shape
    shift: int
    terms: tuple[tuple[EndpointSet, int, RationalSeries], ...]
    reduced: RationalSeries = field(default=ZERO)

    def unreduced(self) -> RationalSeries:
        return scale(total(scale(p, m) for _, m, p in self.terms), 1, self.shift)

    def to_json(self) -> dict:
        g = self.case.group
        return {
            "case": self.case.to_json(),
            "tau": str(self.shape),
            "shift": self.shift,
            "terms": [
                {"endpoints": E.to_json(g), "multiplicity": m, "series": p.to_json()}
                for E, m, p in self.terms
            ],
            "reduced": self.reduced.to_json(),
        }


def covariant_series(case: GroupCase, shape: Shape) -> CovariantSeries:
    case.require_range()
    check_shape(case, shape)
    terms = tuple(
        (E, m, p_e_series(E, case)) for E, m in bin_sizes(case, shape).items() if m
    )
    cs = CovariantSeries(case, shape, shape.size, terms)
    return CovariantSeries(case, shape, shape.size, terms, reduce(cs.unreduced()))


def invariant_series(case: GroupCase) -> RationalSeries:
    if not case.in_range:
        return RationalSeries((1,), [(2, len(build_poset(case).points))])
    return p_e_series(e_max(case), case)


@dataclass(frozen=True)
class MaximalChain:
    columns: tuple[tuple[int, ...], ...]
    increments: tuple[int, ...]
    corners: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.columns)


def _check_column(E: Sequence[int], alphabet_size: int, k: int) -> tuple[int, ...]:
    E = tuple(sorted(E))
    if len(E) != k or len(set(E)) != k or (E and (E[0] < 1 or E[-1] > alphabet_size)):
        raise CaseError(f"{E} is not a k-column over [{alphabet_size}]")
    return E


def _raises(col: tuple[int, ...], n: int) -> list[int]:
    k = len(col)
    return [
        i for i in range(k) if col[i] + 1 <= n and (i == k - 1 or col[i] + 1 < col[i + 1])
    ]


def maximal_chains(E: Sequence[int], alphabet_size: int, k: int) -> list[MaximalChain]:
    """All saturated chains from E up to the top column, with their corners."""
    start = _check_column(E, alphabet_size, k)
    out: list[MaximalChain] = []
    cols = [start]
    incs: list[int] = []

    def rec() -> None:
        col = cols[-1]
        moves = _raises(col, alphabet_size)
        if not moves:
            corners = tuple(
                cols[t] for t in range(1, len(cols) - 1) if incs[t - 1] < incs[t]
            )
            out.append(MaximalChain(tuple(cols), tuple(incs), corners))
            return
        for i in moves:
            nxt = col[:i] + (col[i] + 1,) + col[i + 1 :]
            cols.append(nxt)
            incs.append(i)
            rec()
            incs.pop()
            cols.pop()

    rec()
    return out


def chain_length(E: Sequence[int], alphabet_size: int, k: int) -> int:
    """c_E: number of elements in any maximal chain above E."""
    start = _check_column(E, alphabet_size, k)
    top_sum = sum(range(alphabet_size - k + 1, alphabet_size + 1))
    return top_sum - sum(start) + 1


def q_e_series(E: Sequence[int], alphabet_size: int, k: int) -> RationalSeries:
    """Sum over maximal chains of (t^k)^{#cor C}, over (1-t^k)^{c_E}."""
    start = _check_column(E, alphabet_size, k)

    @lru_cache(maxsize=None)
    def count(col: tuple[int, ...], last: int) -> Poly:
        # polynomial in u (corner count) for the rest of the chain
        moves = _raises(col, alphabet_size)
        if not moves:
            return (1,)
        acc: Poly = ()
        for i in moves:
            nxt = col[:i] + (col[i] + 1,) + col[i + 1 :]
            sub = count(nxt, i)
            if last >= 0 and last < i:
                sub = (0,) + sub
            acc = poly_add(acc, sub)
        return acc

    by_corners = count(start, -1)
    terms = {k * c: n for c, n in enumerate(by_corners) if n}
    return RationalSeries.from_terms(terms, [(k, chain_length(start, alphabet_size, k))])


@dataclass(frozen=True)
class SLSeries:
    head: RationalSeries
    unstarred: tuple[tuple[EndpointSet, RationalSeries, RationalSeries], ...]
    starred: tuple[tuple[EndpointSet, RationalSeries, RationalSeries], ...]
    k: int

    def unreduced(self) -> RationalSeries:
        parts = [self.head]
        for _, p, q in self.unstarred + self.starred:
            parts.append(scale(mul(p, q), 1, self.k))
        return total(parts)

    @property
    def reduced(self) -> RationalSeries:
        return reduce(self.unreduced())


def sl_invariant_series(k: int, p: int, q: int) -> SLSeries:
    """Invariants of SL_k on V*^p + V^q."""
    case = GroupCase.gl(k, p, q)
    case.require_range()
    un, st = [], []
    for E in _valid_endpoint_sets(case):
        if not E.rows:
            un.append((E, p_e_series(E, case), q_e_series(E.cols, q, k)))
        elif not E.cols:
            st.append((E, p_e_series(E, case), q_e_series(E.rows, p, k)))
    return SLSeries(p_e_series(e_max(case), case), tuple(un), tuple(st), k)


def so_invariant_series(k: int, n: int) -> RationalSeries:
    """Invariants of SO_k on V^n."""
    case = GroupCase.o(k, n)
    case.require_range()
    head = p_e_series(e_max(case), case)
    rest = total(p_e_series(E, case) for E in _valid_endpoint_sets(case))
    return add(head, scale(rest, 1, k))


def wallach_series(wcase: WallachCase) -> RationalSeries:
    """Sum over facets of t^{#cor F}, over (1-t)^d (variable t, not t^2)."""
    facets = wallach_facets(wcase)
    counts: dict[int, int] = {}
    for f in facets:
        counts[len(f.corners)] = counts.get(len(f.corners), 0) + 1
    return RationalSeries.from_terms(counts, [(1, facets[0].size)])


def bernstein_degree(case: GroupCase, shape: Shape) -> int:
    """#tau_max times the P_{E_max} numerator at t=1, cross-checked on the full series."""
    case.require_range()
    check_shape(case, shape)
    from .paths import d_max

    dm = d_max(case)
    head = p_e_series(e_max(case), case)
    value = tau_max_size(case, shape) * poly_eval(head.numerator, 1)
    cs = covariant_series(case, shape)
    over = over_single_base(cs.unreduced(), 2, dm)
    check = poly_eval(over, 1)
    if check != value:  # pragma: no cover - arithmetic invariant
        raise AssertionError(f"Bernstein mismatch {value} != {check}")
    return value


def families_count(E: EndpointSet, case: GroupCase) -> int:
    return len(enumerate_families(E, case))

