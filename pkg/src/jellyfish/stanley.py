"""Jellyfish, Stanley spaces, monomial location, arc diagrams and weights."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .paths import EndpointSet, PathFamily, _enumerate_families, family_size
from .poset import CaseError, Group, GroupCase, PosetPoint, build_poset
from .tableaux import (
    Shape,
    ShapedTableau,
    assign_bin,
    bin_sizes,
    check_shape,
    content,
    enumerate_tableaux,
    is_semistandard,
)


class NonStandardError(CaseError):
    """The monomial lies in no Stanley space (it is divisible by a split)."""


@dataclass(frozen=True)
class Jellyfish:
    family: PathFamily
    tableau: ShapedTableau
    shape: Shape

    @property
    def endpoints(self) -> EndpointSet:
        return self.family.endpoints

    def to_json(self) -> dict:
        return {
            "family": self.family.to_json(),
            "tableau": self.tableau.to_json(),
            "tau": str(self.shape),
        }


@dataclass(frozen=True)
class StanleySpace:
    free_generators: frozenset[PosetPoint]
    coefficient_corners: frozenset[PosetPoint]
    tableau: ShapedTableau
    degree: int

    def to_json(self) -> dict:
        return {
            "free": [[p.row, p.col] for p in sorted(self.free_generators)],
            "corners": [[p.row, p.col] for p in sorted(self.coefficient_corners)],
            "tableau": self.tableau.to_json(),
            "degree": self.degree,
        }


@dataclass(frozen=True)
class Monomial:
    """A product of f_ij (total exponents, corners included) times phi_T."""

    exponents: tuple[tuple[PosetPoint, int], ...]
    tableau: ShapedTableau = ShapedTableau()

    def __post_init__(self) -> None:
        acc: dict[PosetPoint, int] = {}
        for pt, e in self.exponents:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                pt = PosetPoint(*pt)
                acc[pt] = acc.get(pt, 0) + e
        object.__setattr__(self, "exponents", tuple(sorted(acc.items())))

    @classmethod
    def of(cls, exps: Mapping[tuple[int, int], int], tableau: ShapedTableau | None = None) -> "Monomial":
        return cls(tuple((PosetPoint(*pt), e) for pt, e in exps.items()), tableau or ShapedTableau())

    @property
    def support(self) -> frozenset[PosetPoint]:
        return frozenset(pt for pt, _ in self.exponents)

    @property
    def f_degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def degree(self) -> int:
        return 2 * self.f_degree + self.tableau.size

    def exponent(self, pt: tuple[int, int]) -> int:
        return dict(self.exponents).get(PosetPoint(*pt), 0)

    def free_part(self, family: PathFamily) -> dict[PosetPoint, int]:
        """The d_ij: exponents with one copy of each corner removed."""
        exps = dict(self.exponents)
        for c in family.corners:
            exps[c] = exps.get(c, 0) - 1
        return {pt: e for pt, e in exps.items() if e}

    def times(self, other: "Monomial") -> "Monomial":
        """Product of f-parts; the tableau factor of ``self`` is kept."""
        return Monomial(self.exponents + other.exponents, self.tableau)

    def format(self, group: Group | None = None) -> str:
        star = "*" if group is Group.GL else ""
        parts = []
        for pt, e in self.exponents:
            tok = f"f[{pt.row}{star},{pt.col}]"
            parts.append(tok if e == 1 else f"{tok}^{e}")
        T = self.tableau
        if T.is_pair:
            if T.rows:
                parts.append("phi+[" + _rows_text(T.rows) + "]")
            if T.minus:
                parts.append("phi-[" + _rows_text(T.minus) + "]")
        elif T.rows:
            parts.append("phi[" + _rows_text(T.rows) + "]")
        return " * ".join(parts) if parts else "1"


def _rows_text(rows) -> str:
    return "/".join(",".join(map(str, r)) for r in rows)


def _parse_rows(text: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(tuple(int(x) for x in re.split(r"[\s,]+", row.strip()) if x) for row in text.split("/"))


_FACTOR = re.compile(r"f\[\s*(\d+)\*?\s*,\s*(\d+)\s*\](?:\^(\d+))?|phi([+-]?)\[([^\]]*)\]")


def parse_monomial(text: str, group: Group) -> Monomial:
    """Parse ``"f[1,2]^2 * f[3,4] * phi[2,3/4]"``; GL uses ``phi+[..]`` and ``phi-[..]``."""
    exps: dict[PosetPoint, int] = {}
    rows: tuple = ()
    plus: tuple = ()
    minus: tuple = ()
    if re.sub(r"[\s*]|^1$", "", _FACTOR.sub("", text.strip())):
        raise CaseError(f"cannot parse monomial {text!r}")
    for m in _FACTOR.finditer(text):
        if m.group(1):
            pt = PosetPoint(int(m.group(1)), int(m.group(2)))
            exps[pt] = exps.get(pt, 0) + int(m.group(3) or 1)
        elif m.group(4) == "+":
            plus = _parse_rows(m.group(5))
        elif m.group(4) == "-":
            minus = _parse_rows(m.group(5))
        else:
            rows = _parse_rows(m.group(5))
    if group is Group.GL:
        if rows:
            raise CaseError("GL monomials use phi+[..] and phi-[..]")
        tab = ShapedTableau(plus, minus)
    else:
        if plus or minus:
            raise CaseError("phi+/phi- are GL-only")
        tab = ShapedTableau(rows)
    return Monomial(tuple(exps.items()), tab)


def tableau_shape(T: ShapedTableau) -> Shape:
    return Shape(tuple(len(r) for r in T.rows), tuple(len(r) for r in (T.minus or ())))


def normalize(m: Monomial, case: GroupCase) -> Monomial:
    """GL monomials always carry a tableau pair, possibly empty."""
    if case.group is Group.GL and not m.tableau.is_pair and not m.tableau.rows:
        return Monomial(m.exponents, ShapedTableau((), ()))
    return m


def check_monomial(m: Monomial, case: GroupCase) -> None:
    poset = build_poset(case)
    for pt in m.support:
        if pt not in poset:
            raise CaseError(f"f at {pt} is outside the poset")
    T = m.tableau
    if case.group is Group.GL:
        if not T.is_pair:
            raise CaseError("GL monomials need a tableau pair")
        ok = is_semistandard(T.rows, case.q) and is_semistandard(T.minus, case.p)
    else:
        ok = is_semistandard(T.rows, case.n)
    if not ok:
        raise CaseError("tableau factor is not semistandard for this case")


# -- jellyfish ---------------------------------------------------------------------


def iter_jellyfish(case: GroupCase, shape: Shape) -> Iterator[Jellyfish]:
    case.require_range()
    check_shape(case, shape)
    by_bin: dict[EndpointSet, list[ShapedTableau]] = {}
    for T in enumerate_tableaux(case, shape):
        by_bin.setdefault(assign_bin(T, case), []).append(T)
    for E, m in bin_sizes(case, shape).items():
        if not m:
            continue
        fams = _enumerate_families(E, case)
        for T in by_bin[E]:
            for F in fams:
                yield Jellyfish(F, T, shape)


def enumerate_jellyfish(case: GroupCase, shape: Shape) -> list[Jellyfish]:
    """All jellyfish F => E => T of shape tau."""
    return list(iter_jellyfish(case, shape))


def count_jellyfish(case: GroupCase, shape: Shape) -> int:
    return sum(m * len(_enumerate_families(E, case)) for E, m in bin_sizes(case, shape).items() if m)


def stanley_space(j: Jellyfish) -> StanleySpace:
    fam = j.family
    return StanleySpace(fam.points, fam.corners, j.tableau, 2 * len(fam.corners) + j.shape.size)


def stanley_decomposition(case: GroupCase, shape: Shape) -> list[StanleySpace]:
    return [stanley_space(j) for j in iter_jellyfish(case, shape)]


def in_space(m: Monomial, j: Jellyfish) -> bool:
    """Whether m lies in the Stanley space of j."""
    supp = m.support
    return m.tableau == j.tableau and j.family.corners <= supp <= j.family.points


def locate(m: Monomial, case: GroupCase, shape: Shape | None = None) -> Jellyfish:
    """The unique jellyfish whose Stanley space contains ``m``."""
    case.require_range()
    m = normalize(m, case)
    check_monomial(m, case)
    shape = tableau_shape(m.tableau) if shape is None else shape
    if tableau_shape(m.tableau) != shape:
        raise CaseError("tableau factor does not have shape tau")
    E = assign_bin(m.tableau, case)
    supp = m.support
    hits = [F for F in _enumerate_families(E, case) if F.corners <= supp <= F.points]
    if not hits:
        raise NonStandardError(f"{m.format(case.group)} lies in no Stanley space")
    if len(hits) > 1:  # pragma: no cover - would contradict the decomposition
        raise AssertionError(f"{m.format(case.group)} lies in {len(hits)} Stanley spaces")
    return Jellyfish(hits[0], m.tableau, shape)


# -- arc diagrams and weights --------------------------------------------------------


@dataclass(frozen=True)
class ArcDiagram:
    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...]
    hyperedges: tuple[tuple[str, ...], ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        deg = {v: 0 for v in self.vertices}
        for a, b in self.arcs:
            deg[a] += 1
            deg[b] += 1  # a loop counts twice
        for h in self.hyperedges:
            for v in h:
                deg[v] += 1
        return tuple(deg[v] for v in self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arcs": [list(a) for a in self.arcs],
            "hyperedges": [list(h) for h in self.hyperedges],
            "degrees": list(self.degrees),
        }


def arc_diagram(m: Monomial, case: GroupCase) -> ArcDiagram:
    """One arc per unit of total exponent; one hyperedge per tableau column."""
    T = m.tableau
    if case.group is Group.GL:
        verts = tuple(f"{i}*" for i in range(1, case.p + 1)) + tuple(str(j) for j in range(1, case.q + 1))
        arcs = tuple((f"{pt.row}*", str(pt.col)) for pt, e in m.exponents for _ in range(e))
        hyper = tuple(tuple(f"{x}*" for x in col) for col in T.columns("minus"))
        hyper += tuple(tuple(str(x) for x in col) for col in T.columns("plus"))
    else:
        verts = tuple(str(i) for i in range(1, case.n + 1))
        arcs = tuple((str(pt.row), str(pt.col)) for pt, e in m.exponents for _ in range(e))
        hyper = tuple(tuple(str(x) for x in col) for col in T.columns("plus"))
    return ArcDiagram(verts, arcs, hyper)


@dataclass(frozen=True)
class WeightVector:
    """Exact weight; GL weights carry a split after the first ``split`` entries."""

    entries: tuple[Fraction, ...]
    split: int | None = None

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.entries, other.entries)), self.split)

    def as_ints(self) -> tuple:
        return tuple(int(x) if x.denominator == 1 else x for x in self.entries)

    def format(self) -> str:
        def f(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        vals = [f(x) for x in self.entries]
        if self.split is not None:
            return "(" + ",".join(vals[: self.split]) + " | " + ",".join(vals[self.split :]) + ")"
        return "(" + ",".join(vals) + ")"

    def to_json(self) -> list:
        return [str(x) if x.denominator != 1 else int(x) for x in self.entries]


def weight(m: Monomial, case: GroupCase) -> WeightVector:
    """Weight under g read from the degree sequence of the arc diagram."""
    deg = arc_diagram(m, case).degrees
    k = Fraction(case.k)
    if case.group is Group.GL:
        p = case.p
        vals = tuple(-Fraction(d) - k for d in deg[:p]) + tuple(Fraction(d) for d in deg[p:])
        return WeightVector(vals, p)
    shift = k if case.group is Group.SP else k / 2
    return WeightVector(tuple(-Fraction(d) - shift for d in deg))


def lambda_from_tau(case: GroupCase, shape: Shape) -> WeightVector:
    check_shape(case, shape)
    k = Fraction(case.k)
    if case.group is Group.GL:
        minus = list(shape.minus) + [0] * (case.p - len(shape.minus))
        plus = list(shape.plus) + [0] * (case.q - len(shape.plus))
        vals = tuple(-Fraction(x) - k for x in reversed(minus)) + tuple(Fraction(x) for x in plus)
        return WeightVector(vals, case.p)
    padded = list(shape.plus) + [0] * (case.n - len(shape.plus))
    shift = k if case.group is Group.SP else k / 2
    return WeightVector(tuple(-Fraction(x) - shift for x in reversed(padded)))


def tentacle_content(T: ShapedTableau, case: GroupCase) -> tuple[int, ...]:
    """Hyperedge contribution to the degree sequence (the tableau content)."""
    if case.group is Group.GL:
        return content(T, case.p, "minus") + content(T, case.q, "plus")
    return content(T, case.n)


def max_jellyfish_size(case: GroupCase, E: EndpointSet) -> int:
    return family_size(E, case)
