"""Shapes, semistandard / rational / symplectic tableaux, and bin assignment."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .paths import (
    EndpointSet,
    _valid_endpoint_sets,
    d_max,
    family_size,
    is_valid_endpoint_set,
    sp_top,
)
from .poset import CaseError, Group, GroupCase

Rows = tuple[tuple[int, ...], ...]


class ShapeError(CaseError):
    """Shape outside the admissible set for the case."""


@dataclass(frozen=True)
class Shape:
    """A highest weight tau, stored as its positive and negative parts.

    For GL ``tau = (plus, 0, ..., 0, -reverse(minus))``; Sp and O shapes
    have empty ``minus``.
    """

    plus: tuple[int, ...] = ()
    minus: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for part in (self.plus, self.minus):
            if any(x <= 0 for x in part) or list(part) != sorted(part, reverse=True):
                raise ShapeError(f"bad partition {part}")

    @classmethod
    def from_tuple(cls, tau: Sequence[int]) -> "Shape":
        tau = tuple(tau)
        if list(tau) != sorted(tau, reverse=True):
            raise ShapeError(f"tau={tau} is not weakly decreasing")
        plus = tuple(x for x in tau if x > 0)
        minus = tuple(-x for x in reversed(tau) if x < 0)
        return cls(plus, minus)

    @classmethod
    def parse(cls, text: str) -> "Shape":
        """Parse ``"2,1"`` or ``"1,0,-1"``; an empty string is the zero shape."""
        body = text.strip().strip("()[]")
        if not body:
            return cls()
        try:
            vals = [int(tok) for tok in re.split(r"[\s,]+", body) if tok]
        except ValueError as exc:
            raise ShapeError(f"cannot parse shape {text!r}") from exc
        return cls.from_tuple(vals)

    @property
    def size(self) -> int:
        return sum(self.plus) + sum(self.minus)

    @property
    def is_partition(self) -> bool:
        return not self.minus

    def entries(self, length: int) -> tuple[int, ...]:
        pad = length - len(self.plus) - len(self.minus)
        if pad < 0:
            raise ShapeError(f"shape {self} does not fit in length {length}")
        return self.plus + (0,) * pad + tuple(-x for x in reversed(self.minus))

    def conjugate(self) -> tuple[int, ...]:
        if not self.plus:
            return ()
        return tuple(sum(1 for x in self.plus if x > c) for c in range(self.plus[0]))

    def __str__(self) -> str:
        vals = self.plus + tuple(-x for x in reversed(self.minus))
        return "(" + ",".join(map(str, vals)) + ")" if vals else "0"


def check_shape(case: GroupCase, shape: Shape) -> None:
    """Raise unless ``shape`` lies in the admissible set for ``case``."""
    k = case.k
    lp, lm = len(shape.plus), len(shape.minus)
    if case.group is Group.GL:
        if lp > case.q or lm > case.p or lp + lm > k:
            raise ShapeError(f"tau={shape} is not admissible for {case}")
        return
    if lm:
        raise ShapeError(f"{case.group.value} shapes must be partitions")
    if case.group is Group.SP:
        if lp > k or lp > case.n:
            raise ShapeError(f"tau={shape} is not admissible for {case}")
        return
    if any(x != 1 for x in shape.plus):
        raise ShapeError("O shapes are restricted to single columns (1^m)")
    if lp > k or lp > case.n:
        raise ShapeError(f"tau={shape} is not admissible for {case}")


@dataclass(frozen=True, order=True)
class ShapedTableau:
    """An SSYT, or for GL a pair ``(T+, T-)`` with ``minus`` set."""

    rows: Rows = ()
    minus: Rows | None = None

    @property
    def is_pair(self) -> bool:
        return self.minus is not None

    @property
    def plus(self) -> Rows:
        return self.rows

    def first_column(self, which: str = "plus") -> tuple[int, ...]:
        rows = self.rows if which == "plus" else (self.minus or ())
        return tuple(r[0] for r in rows)

    def columns(self, which: str = "plus") -> list[tuple[int, ...]]:
        rows = self.rows if which == "plus" else (self.minus or ())
        if not rows:
            return []
        return [tuple(r[c] for r in rows if len(r) > c) for c in range(len(rows[0]))]

    @property
    def size(self) -> int:
        return sum(map(len, self.rows)) + sum(map(len, self.minus or ()))

    def to_json(self):
        if self.is_pair:
            return {"plus": [list(r) for r in self.rows], "minus": [list(r) for r in self.minus]}
        return [list(r) for r in self.rows]


def is_semistandard(rows: Rows, alphabet: int) -> bool:
    for i, row in enumerate(rows):
        if any(not 1 <= x <= alphabet for x in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if i and (len(row) > len(rows[i - 1]) or any(row[c] <= rows[i - 1][c] for c in range(len(row)))):
            return False
    return True


def _ssyt_iter(shape: tuple[int, ...], alphabet: int) -> Iterator[Rows]:
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def rec(idx: int) -> Iterator[Rows]:
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        lo = 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        # leave room for the strictly increasing cells below
        below = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
        for v in range(lo, alphabet - below + 1):
            grid[r][c] = v
            yield from rec(idx + 1)
        grid[r][c] = 0

    yield from rec(0)


@lru_cache(maxsize=None)
def _ssyt(shape: tuple[int, ...], alphabet: int) -> tuple[Rows, ...]:
    return tuple(_ssyt_iter(shape, alphabet))


def enumerate_ssyt(shape: "Shape | Sequence[int]", alphabet_size: int) -> list[ShapedTableau]:
    """All SSYT of a partition shape, in row-reading lexicographic order."""
    parts = shape.plus if isinstance(shape, Shape) else tuple(shape)
    if isinstance(shape, Shape) and shape.minus:
        raise ShapeError("enumerate_ssyt takes a partition")
    return [ShapedTableau(rows) for rows in _ssyt(tuple(parts), alphabet_size)]


def count_ssyt(shape: Sequence[int], alphabet_size: int) -> int:
    return len(_ssyt(tuple(shape), alphabet_size))


@dataclass(frozen=True)
class RationalTableau:
    plus: Rows
    minus: Rows


def _stembridge_ok(plus_col: Sequence[int], minus_col: Sequence[int], k: int) -> bool:
    return all(
        sum(1 for x in minus_col if x <= ell) + sum(1 for x in plus_col if x <= ell) <= ell
        for ell in range(1, k + 1)
    )


def enumerate_rational_tableaux(shape: Shape, k: int) -> list[RationalTableau]:
    """Pairs over [k] satisfying the Stembridge first-column condition."""
    if len(shape.plus) + len(shape.minus) > k:
        return []
    out = []
    for rp in _ssyt(shape.plus, k):
        pc = tuple(r[0] for r in rp)
        for rm in _ssyt(shape.minus, k):
            if _stembridge_ok(pc, tuple(r[0] for r in rm), k):
                out.append(RationalTableau(rp, rm))
    return out


def count_symplectic_tableaux(shape: "Shape | Sequence[int]", k: int) -> int:
    """King symplectic tableaux: alphabet 1 < 1' < ... < k < k', row i entries >= i."""
    parts = shape.plus if isinstance(shape, Shape) else tuple(shape)
    if len(parts) > k:
        return 0
    # letter i maps to 2i-1 and i' to 2i; row i must start at >= 2i-1
    return sum(
        1
        for rows in _ssyt(tuple(parts), 2 * k)
        if all(row[0] >= 2 * i + 1 for i, row in enumerate(rows))
    )


def content(T: ShapedTableau, alphabet_size: int | None = None, which: str = "plus") -> tuple[int, ...]:
    """Occurrence counts of 1..alphabet_size."""
    rows = T.rows if which == "plus" else (T.minus or ())
    counts = Counter(x for row in rows for x in row)
    top = alphabet_size if alphabet_size is not None else max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


# -- bins -------------------------------------------------------------------------


def _gl_bin_from_columns(case: GroupCase, plus_col: Sequence[int], minus_col: Sequence[int]) -> EndpointSet:
    k, p, q = case.k, case.p, case.q
    starred = tuple(sorted(minus_col))
    b = k - len(starred)
    if len(plus_col) > b:
        raise ShapeError("first columns are too long for k")

    def fits(cols: list[int]) -> bool:
        return all(
            sum(1 for i in starred if i > p - ell) + sum(1 for j in cols if j > q - ell) <= ell
            for ell in range(1, k + 1)
        )

    if not fits([]):
        raise ShapeError(f"starred labels {starred} admit no endpoint set")
    chosen: list[int] = []
    for j in range(q, 0, -1):
        if len(chosen) == b:
            break
        if fits(chosen + [j]):
            chosen.append(j)
    if len(chosen) < b:
        raise ShapeError("no endpoint set extends the starred labels")
    eprime = sorted(chosen)
    pc = sorted(plus_col)
    cols = [min(e, t) for e, t in zip(eprime, pc)] + eprime[len(pc):]
    E = EndpointSet(starred, tuple(cols))
    if not is_valid_endpoint_set(E, case):
        raise ShapeError(f"bin {E.format(Group.GL)} is not a valid endpoint set")
    return E


def _sp_bin_from_column(case: GroupCase, col: Sequence[int]) -> EndpointSet:
    bounds = list(sp_top(case))
    for i, x in enumerate(col):
        bounds[i] = min(bounds[i], x)
    E = [0] * case.k
    nxt = case.n
    for i in range(case.k - 1, -1, -1):
        E[i] = min(bounds[i], nxt - 1)
        nxt = E[i]
    if E[0] < 1:
        raise ShapeError("no endpoint set fits left of this tableau")
    return EndpointSet(tuple(E))


def _o_bin_from_column(case: GroupCase, col: Sequence[int]) -> EndpointSet:
    chosen = set(col)
    for x in range(1, case.n + 1):
        if len(chosen) == case.k:
            break
        chosen.add(x)
    return EndpointSet(tuple(sorted(chosen)))


def assign_bin(T: ShapedTableau, case: GroupCase, shape: Shape | None = None) -> EndpointSet:
    """The endpoint set E with E => T."""
    case.require_range()
    if case.group is Group.GL:
        if not T.is_pair:
            raise ShapeError("GL tableaux are pairs (T+, T-)")
        return _gl_bin_from_columns(case, T.first_column("plus"), T.first_column("minus"))
    col = T.first_column()
    if case.group is Group.SP:
        return _sp_bin_from_column(case, col)
    if T.rows and len(T.rows[0]) > 1:
        raise ShapeError("O tableaux are single columns")
    return _o_bin_from_column(case, col)


def enumerate_tableaux(case: GroupCase, shape: Shape) -> list[ShapedTableau]:
    """Tableau factors of shape tau with the case's alphabets."""
    check_shape(case, shape)
    if case.group is Group.GL:
        return [
            ShapedTableau(rp, rm)
            for rp in _ssyt(shape.plus, case.q)
            for rm in _ssyt(shape.minus, case.p)
        ]
    return enumerate_ssyt(shape.plus, case.n)


def _first_column_counts(case: GroupCase, shape: Shape) -> Counter:
    """Multiplicity of each first-column datum among the tableaux of ``shape``."""
    if case.group is Group.GL:
        plus = Counter(tuple(r[0] for r in rows) for rows in _ssyt(shape.plus, case.q))
        minus = Counter(tuple(r[0] for r in rows) for rows in _ssyt(shape.minus, case.p))
        return Counter({(a, b): ca * cb for a, ca in plus.items() for b, cb in minus.items()})
    return Counter(tuple(r[0] for r in rows) for rows in _ssyt(shape.plus, case.n))


def bin_sizes(case: GroupCase, shape: Shape) -> dict[EndpointSet, int]:
    """#tau_E for every E, zeros included, in canonical E order."""
    case.require_range()
    check_shape(case, shape)
    return dict(_bin_sizes(case, shape))


@lru_cache(maxsize=None)
def _bin_sizes(case: GroupCase, shape: Shape) -> tuple[tuple[EndpointSet, int], ...]:
    sizes = {E: 0 for E in _valid_endpoint_sets(case)}
    for key, mult in _first_column_counts(case, shape).items():
        if case.group is Group.GL:
            E = _gl_bin_from_columns(case, key[0], key[1])
        elif case.group is Group.SP:
            E = _sp_bin_from_column(case, key)
        else:
            E = _o_bin_from_column(case, key)
        sizes[E] += mult
    return tuple(sizes.items())


def dim_u(case: GroupCase, shape: Shape) -> int:
    """dim U_tau by the independent tableau count for the group."""
    if case.group is Group.GL:
        return len(enumerate_rational_tableaux(shape, case.k))
    if case.group is Group.SP:
        return count_symplectic_tableaux(shape, case.k)
    return comb(case.k, len(shape.plus))


def tau_max_size(case: GroupCase, shape: Shape) -> int:
    dm = d_max(case)
    return sum(m for E, m in bin_sizes(case, shape).items() if m and family_size(E, case) == dm)


def tau_max_check(case: GroupCase, shape: Shape) -> bool:
    return tau_max_size(case, shape) == dim_u(case, shape)


def gl_shift_to_rational(case: GroupCase, T: ShapedTableau) -> RationalTableau:
    """Shift a maximal-bin GL pair down to alphabet [k] (T- by p-k, T+ by q-k)."""
    dp, dq = case.p - case.k, case.q - case.k
    plus = tuple(tuple(x - dq for x in row) for row in T.rows)
    minus = tuple(tuple(x - dp for x in row) for row in (T.minus or ()))
    return RationalTableau(plus, minus)


def all_shapes(case: GroupCase, max_size: int) -> list[Shape]:
    """Admissible shapes with |tau| <= max_size, smallest first."""
    out = []
    parts = [()]
    for total in range(1, max_size + 1):
        parts.extend(_partitions(total))
    for plus in parts:
        for minus in parts if case.group is Group.GL else [()]:
            if sum(plus) + sum(minus) > max_size:
                continue
            shape = Shape(tuple(plus), tuple(minus))
            try:
                check_shape(case, shape)
            except ShapeError:
                continue
            out.append(shape)
    out.sort(key=lambda s: (s.size, s.plus, s.minus))
    return out


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest

