"""Posets of positive noncompact roots for the classical and ADE cases.

Points are stored as 1-based ``(row, col)`` pairs.  For GL the row label is
starred (``i*``), the column label is not.  The minimal element sits in the
upper-left corner for GL and Sp; O uses the flipped column order so that a
single relation serves both path chains and split antichains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple


class Group(str, Enum):
    GL = "GL"
    SP = "Sp"
    O = "O"

    @classmethod
    def parse(cls, name: str) -> "Group":
        key = name.strip().lower()
        for g in cls:
            if g.value.lower() == key:
                return g
        raise ValueError(f"unknown group {name!r}")


class CaseError(ValueError):
    """Raised for parameters outside the supported range."""


class PosetPoint(NamedTuple):
    row: int
    col: int

    def label(self, group: "Group | None" = None) -> str:
        star = "*" if group is Group.GL else ""
        return f"({self.row}{star},{self.col})"


@dataclass(frozen=True)
class GroupCase:
    """A dual pair: ``GL(k; p, q)``, ``Sp(k; n)`` (dim V = 2k) or ``O(k; n)``."""

    group: Group
    k: int
    p: int = 0
    q: int = 0
    n: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.group, Group):
            object.__setattr__(self, "group", Group.parse(str(self.group)))
        if self.k < 1:
            raise CaseError("k must be positive")
        if self.group is Group.GL:
            if self.p < 1 or self.q < 1:
                raise CaseError("GL needs positive p and q")
            if self.n:
                raise CaseError("n is not a GL parameter")
        else:
            if self.n < 1:
                raise CaseError(f"{self.group.value} needs positive n")
            if self.p or self.q:
                raise CaseError("p and q are GL-only parameters")

    @classmethod
    def gl(cls, k: int, p: int, q: int) -> "GroupCase":
        return cls(Group.GL, k, p=p, q=q)

    @classmethod
    def sp(cls, k: int, n: int) -> "GroupCase":
        return cls(Group.SP, k, n=n)

    @classmethod
    def o(cls, k: int, n: int) -> "GroupCase":
        return cls(Group.O, k, n=n)

    def rank(self) -> int:
        """Real rank r of the Hermitian pair; k < r is the interesting range."""
        if self.group is Group.GL:
            return min(self.p, self.q)
        if self.group is Group.SP:
            return self.n // 2
        return self.n

    @property
    def in_range(self) -> bool:
        return self.k <= self.rank()

    def require_range(self) -> None:
        if not self.in_range:
            raise CaseError(
                f"k={self.k} exceeds the working range k <= {self.rank()} for {self}"
            )

    def __str__(self) -> str:
        if self.group is Group.GL:
            return f"GL(k={self.k},p={self.p},q={self.q})"
        return f"{self.group.value}(k={self.k},n={self.n})"

    def to_json(self) -> dict:
        out: dict = {"group": self.group.value, "k": self.k}
        if self.group is Group.GL:
            out.update(p=self.p, q=self.q)
        else:
            out["n"] = self.n
        return out


class WallachFamily(str, Enum):
    DN = "Dn"
    E6 = "E6"
    E7 = "E7"


@dataclass(frozen=True)
class WallachCase:
    """The k-th Wallach representation of a simply laced Hermitian pair."""

    family: WallachFamily
    k: int = 1
    n: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.family, WallachFamily):
            try:
                object.__setattr__(self, "family", WallachFamily(str(self.family)))
            except ValueError as exc:
                raise CaseError(f"unsupported Wallach family {self.family!r}") from exc
        if self.family is WallachFamily.DN:
            if self.n < 4:
                raise CaseError("Dn needs n >= 4")
            if self.k != 1:
                raise CaseError("only k=1 is treated for Dn")
        elif self.family is WallachFamily.E6:
            if self.k != 1:
                raise CaseError("only k=1 is treated for E6")
        elif self.k not in (1, 2):
            raise CaseError("only k=1,2 are treated for E7")

    def __str__(self) -> str:
        if self.family is WallachFamily.DN:
            return f"D{self.n}(k={self.k})"
        return f"{self.family.value}(k={self.k})"

    def to_json(self) -> dict:
        out: dict = {"wallach": self.family.value, "k": self.k}
        if self.family is WallachFamily.DN:
            out["n"] = self.n
        return out


@dataclass(frozen=True)
class Poset:
    case: "GroupCase | WallachCase"
    points: tuple[PosetPoint, ...]
    covers: tuple[tuple[PosetPoint, PosetPoint], ...]
    shadow_markers: tuple[PosetPoint, ...] = ()
    _members: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_members", frozenset(self.points))

    def __contains__(self, pt: object) -> bool:
        return pt in self._members

    def __len__(self) -> int:
        return len(self.points)

    @property
    def group(self) -> "Group | None":
        return self.case.group if isinstance(self.case, GroupCase) else None

    def successors(self, pt: PosetPoint) -> list[PosetPoint]:
        return [b for a, b in self.covers if a == pt]

    def to_json(self) -> dict:
        starred = self.group is Group.GL
        return {
            "case": self.case.to_json(),
            "points": [[p.row, p.col, starred] for p in self.points],
            "covers": [[[a.row, a.col], [b.row, b.col]] for a, b in self.covers],
            "shadow_markers": [[p.row, p.col] for p in self.shadow_markers],
        }


def _grid_covers(points: list[PosetPoint]) -> tuple[tuple[PosetPoint, PosetPoint], ...]:
    # unit east/south adjacencies, valid for every rotated Hasse diagram here
    members = set(points)
    covers = []
    for pt in points:
        for nb in (PosetPoint(pt.row, pt.col + 1), PosetPoint(pt.row + 1, pt.col)):
            if nb in members:
                covers.append((pt, nb))
    return tuple(covers)


def _o_covers(points: list[PosetPoint]) -> tuple[tuple[PosetPoint, PosetPoint], ...]:
    # flipped order: (i,j) <= (i',j') iff i <= i' and j >= j'
    members = set(points)
    covers = []
    for pt in points:
        for nb in (PosetPoint(pt.row + 1, pt.col), PosetPoint(pt.row, pt.col - 1)):
            if nb in members:
                covers.append((pt, nb))
    return tuple(covers)


def build_poset(case: GroupCase) -> Poset:
    """Point set and Hasse covers of the poset for ``case``."""
    if case.group is Group.GL:
        pts = [PosetPoint(i, j) for i in range(1, case.p + 1) for j in range(1, case.q + 1)]
        return Poset(case, tuple(pts), _grid_covers(pts))
    n = case.n
    if case.group is Group.SP:
        pts = [PosetPoint(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        return Poset(case, tuple(pts), _grid_covers(pts))
    pts = [PosetPoint(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    return Poset(case, tuple(pts), _o_covers(pts))


def order_leq(a: PosetPoint, b: PosetPoint, case: "GroupCase | WallachCase") -> bool:
    if isinstance(case, GroupCase) and case.group is Group.O:
        return a.row <= b.row and a.col >= b.col
    return a.row <= b.row and a.col <= b.col


def _antidiagonal_index(poset: Poset, pt: PosetPoint) -> int:
    case = poset.case
    if case.group is Group.GL:
        return (case.p - pt.row) + (case.q - pt.col) + 1
    if case.group is Group.SP:
        return (case.n - 1 - pt.row) + (case.n - pt.col) + 1
    # O: geometric antidiagonals of the staircase, from (n,n); not rank levels
    return (case.n - pt.row) + (case.n - pt.col) + 1


def antidiagonal(poset: Poset, ell: int) -> set[PosetPoint]:
    """The ``ell``-th antidiagonal, counted from the lower-right corner."""
    if not isinstance(poset.case, GroupCase):
        raise CaseError("antidiagonals are defined for the classical posets only")
    top = max(_antidiagonal_index(poset, pt) for pt in poset.points)
    if not 1 <= ell <= top:
        raise CaseError(f"antidiagonal index {ell} out of range 1..{top}")
    return {pt for pt in poset.points if _antidiagonal_index(poset, pt) == ell}


# Drawings of the ADE posets, as TikZ (x, y) dot coordinates.  East is +x and
# south is -y; covers are the unit east/south adjacencies between dots.
_E6_DOTS = [
    (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (3, 0), (4, 0), (5, 0),
    (4, -1), (5, -1), (6, -1), (4, -2), (5, -2), (6, -2), (6, -3), (6, -4),
]
_E6_SHADOWS = [(5, -1)]
_E7_DOTS = [
    (0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (3, 0), (4, 0), (5, 0),
    (4, -1), (5, -1), (6, -1), (4, -2), (5, -2), (6, -2), (6, -3), (4, -3),
    (5, -3), (7, -2), (8, -2), (7, -3), (8, -3), (7, -4), (8, -4), (8, -5),
    (8, -6), (8, -7),
]
_E7_SHADOWS = [(5, -1), (6, -2)]


def _dn_dots(n: int) -> list[tuple[int, int]]:
    dots = [(1, y) for y in range(1, n)]
    dots.append((2, 2))
    dots.extend((x, 1) for x in range(2, n))
    return dots


def _from_tikz(
    dots: list[tuple[int, int]], marks: list[tuple[int, int]]
) -> tuple[list[PosetPoint], list[PosetPoint]]:
    xmin = min(x for x, _ in dots)
    ymax = max(y for _, y in dots)

    def conv(xy: tuple[int, int]) -> PosetPoint:
        return PosetPoint(ymax - xy[1] + 1, xy[0] - xmin + 1)

    return sorted(conv(d) for d in dots), [conv(m) for m in marks]


def build_ade_poset(wcase: WallachCase) -> Poset:
    """Hasse diagram for the Dn, E6 and E7 Hermitian pairs."""
    if wcase.family is WallachFamily.DN:
        pts, marks = _from_tikz(_dn_dots(wcase.n), [])
    elif wcase.family is WallachFamily.E6:
        pts, marks = _from_tikz(_E6_DOTS, _E6_SHADOWS)
    elif wcase.family is WallachFamily.E7:
        pts, marks = _from_tikz(_E7_DOTS, _E7_SHADOWS)
    else:  # pragma: no cover - guarded by WallachCase
        raise CaseError(f"unsupported Wallach case {wcase}")
    return Poset(wcase, tuple(pts), _grid_covers(pts), tuple(marks))
