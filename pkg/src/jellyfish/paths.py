"""Endpoint sets, nonintersecting lattice-path families, corners and shelling labels."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .poset import (
    CaseError,
    Group,
    GroupCase,
    Poset,
    PosetPoint,
    WallachCase,
    build_ade_poset,
    build_poset,
)

Path = tuple[PosetPoint, ...]


@dataclass(frozen=True, order=True)
class EndpointSet:
    """Endpoint labels of a family.

    ``rows`` holds the row labels (starred for GL), ``cols`` the unstarred GL
    column labels.  For Sp and O ``cols`` is always empty.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(sorted(self.rows)))
        object.__setattr__(self, "cols", tuple(sorted(self.cols)))

    def __len__(self) -> int:
        return len(self.rows) + len(self.cols)

    def sort_key(self) -> tuple:
        return tuple([(0, r) for r in self.rows] + [(1, c) for c in self.cols])

    def labels(self, group: Group | None = None) -> list[str]:
        star = "*" if group is Group.GL or self.cols else ""
        return [f"{r}{star}" for r in self.rows] + [str(c) for c in self.cols]

    def format(self, group: Group | None = None) -> str:
        return "{" + ",".join(self.labels(group)) + "}"

    def to_json(self, group: Group | None = None) -> list[str] | list[int]:
        if group is Group.GL:
            return self.labels(group)
        return list(self.rows)

    @classmethod
    def parse(cls, text: str, group: Group) -> "EndpointSet":
        """Parse ``"2*,5*,3"`` (GL) or ``"1,5"`` (Sp/O); braces are optional."""
        tokens = [t for t in re.split(r"[\s,{}]+", text) if t]
        rows, cols = [], []
        for tok in tokens:
            if tok.endswith("*"):
                if group is not Group.GL:
                    raise CaseError("starred labels only occur for GL")
                rows.append(int(tok[:-1]))
            elif group is Group.GL:
                cols.append(int(tok))
            else:
                rows.append(int(tok))
        return cls(tuple(rows), tuple(cols))


def _gl_e_ell(E: EndpointSet, case: GroupCase, ell: int) -> int:
    return sum(1 for i in E.rows if i > case.p - ell) + sum(
        1 for j in E.cols if j > case.q - ell
    )


def is_valid_endpoint_set(E: EndpointSet, case: GroupCase) -> bool:
    k = case.k
    if len(E) != k:
        return False
    if case.group is Group.GL:
        if any(not 1 <= i <= case.p for i in E.rows):
            return False
        if any(not 1 <= j <= case.q for j in E.cols):
            return False
        if len(set(E.rows)) != len(E.rows) or len(set(E.cols)) != len(E.cols):
            return False
        return all(_gl_e_ell(E, case, ell) <= ell for ell in range(1, k + 1))
    if E.cols or len(set(E.rows)) != k:
        return False
    if case.group is Group.SP:
        top = sp_top(case)
        return E.rows[0] >= 1 and all(e <= t for e, t in zip(E.rows, top))
    return all(1 <= e <= case.n for e in E.rows)


def sp_top(case: GroupCase) -> tuple[int, ...]:
    return tuple(case.n - 2 * case.k + 2 * i - 1 for i in range(1, case.k + 1))


def e_max(case: GroupCase) -> EndpointSet:
    k = case.k
    if case.group is Group.GL:
        return EndpointSet((), tuple(range(case.q - k + 1, case.q + 1)))
    if case.group is Group.SP:
        return EndpointSet(sp_top(case))
    return EndpointSet(tuple(range(1, k + 1)))


def valid_endpoint_sets(case: GroupCase) -> list[EndpointSet]:
    """All feasible endpoint sets, in canonical order."""
    case.require_range()
    return list(_valid_endpoint_sets(case))


@lru_cache(maxsize=None)
def _valid_endpoint_sets(case: GroupCase) -> tuple[EndpointSet, ...]:
    k = case.k
    out: list[EndpointSet] = []
    if case.group is Group.GL:
        for a in range(0, min(k, case.p) + 1):
            for rows in itertools.combinations(range(1, case.p + 1), a):
                for cols in itertools.combinations(range(1, case.q + 1), k - a):
                    E = EndpointSet(rows, cols)
                    if is_valid_endpoint_set(E, case):
                        out.append(E)
    else:
        hi = case.n - 1 if case.group is Group.SP else case.n
        for rows in itertools.combinations(range(1, hi + 1), k):
            E = EndpointSet(rows)
            if is_valid_endpoint_set(E, case):
                out.append(E)
    out.sort(key=EndpointSet.sort_key)
    return tuple(out)


def require_endpoints(E: EndpointSet, case: GroupCase) -> None:
    case.require_range()
    if not is_valid_endpoint_set(E, case):
        raise CaseError(f"{E.format(case.group)} is not a valid endpoint set for {case}")


@dataclass(frozen=True)
class PathFamily:
    """k nonintersecting lattice paths.

    ``paths`` are listed from southwest to northeast, which is the order
    used to concatenate shelling labels.
    """

    case: "GroupCase | WallachCase"
    endpoints: EndpointSet
    paths: tuple[Path, ...]
    _corners: frozenset = field(default=frozenset(), compare=False, repr=False)
    _label: str = field(default="", compare=False, repr=False)

    @property
    def points(self) -> frozenset[PosetPoint]:
        return frozenset(pt for path in self.paths for pt in path)

    @property
    def size(self) -> int:
        return sum(len(p) for p in self.paths)

    @property
    def corners(self) -> frozenset[PosetPoint]:
        return self._corners

    @property
    def label(self) -> str:
        return self._label

    def to_json(self) -> dict:
        group = self.case.group if isinstance(self.case, GroupCase) else None
        return {
            "endpoints": self.endpoints.to_json(group),
            "paths": [[[pt.row, pt.col] for pt in path] for path in self.paths],
            "corners": [[pt.row, pt.col] for pt in sorted(self._corners)],
            "label": self._label,
            "size": self.size,
        }


# -- path geometry ---------------------------------------------------------------


def _starts(case: GroupCase, E: EndpointSet) -> list[PosetPoint]:
    """Starts matched to ``_ends`` (same index = same path), southwest first."""
    k = case.k
    if case.group is Group.GL:
        return [PosetPoint(i, 1) for i in range(k, 0, -1)]
    if case.group is Group.SP:
        return [PosetPoint(1, 2 * a) for a in range(1, k + 1)]
    raise AssertionError("O starts are not fixed")


def _ends(case: GroupCase, E: EndpointSet) -> list[PosetPoint]:
    if case.group is Group.GL:
        # boundary order clockwise from the top right: 1*..p*, then q..1
        order = [PosetPoint(i, case.q) for i in E.rows]
        order += [PosetPoint(case.p, j) for j in sorted(E.cols, reverse=True)]
        return order[::-1]
    if case.group is Group.SP:
        return [PosetPoint(e, case.n) for e in sorted(E.rows, reverse=True)]
    return [PosetPoint(e, case.n) for e in sorted(E.rows, reverse=True)]


def _walk(
    poset: Poset,
    start: PosetPoint,
    end: PosetPoint,
    blocked: set[PosetPoint],
    flipped: bool,
) -> Iterator[list[PosetPoint]]:
    """All monotone paths start -> end avoiding ``blocked``; east steps tried first."""
    if start in blocked or start not in poset:
        return
    er, ec = end
    path = [start]

    def rec(r: int, c: int) -> Iterator[list[PosetPoint]]:
        if r == er and c == ec:
            yield list(path)
            return
        if flipped:
            moves = ((r, c + 1), (r - 1, c))
        else:
            moves = ((r, c + 1), (r + 1, c))
        for nr, nc in moves:
            if flipped:
                if nr < er or nc > ec:
                    continue
            elif nr > er or nc > ec:
                continue
            nxt = PosetPoint(nr, nc)
            if nxt in blocked or nxt not in poset:
                continue
            path.append(nxt)
            yield from rec(nr, nc)
            path.pop()

    yield from rec(start.row, start.col)


def _families_fixed(
    poset: Poset, starts: Sequence[PosetPoint], ends: Sequence[PosetPoint], flipped: bool
) -> Iterator[tuple[Path, ...]]:
    k = len(starts)
    blocked: set[PosetPoint] = set()
    chosen: list[Path] = []

    def rec(idx: int) -> Iterator[tuple[Path, ...]]:
        if idx == k:
            yield tuple(chosen)
            return
        for path in _walk(poset, starts[idx], ends[idx], blocked, flipped):
            blocked.update(path)
            chosen.append(tuple(path))
            yield from rec(idx + 1)
            chosen.pop()
            blocked.difference_update(path)

    yield from rec(0)


def _raw_families(case: GroupCase, E: EndpointSet) -> Iterator[tuple[Path, ...]]:
    poset = build_poset_cached(case)
    ends = _ends(case, E)
    if case.group is not Group.O:
        yield from _families_fixed(poset, _starts(case, E), ends, flipped=False)
        return
    # O: starts are any diagonal points (s,s) with s >= e; the path ending
    # lowest on the right edge starts lowest on the diagonal.
    rows = [pt.row for pt in ends]  # descending
    n = case.n

    def rec_starts(idx: int, upper: int) -> Iterator[list[int]]:
        if idx == len(rows):
            yield []
            return
        for s in range(upper, rows[idx] - 1, -1):
            for rest in rec_starts(idx + 1, s - 1):
                yield [s] + rest

    for svals in rec_starts(0, n):
        starts = [PosetPoint(s, s) for s in svals]
        yield from _families_fixed(poset, starts, ends, flipped=True)


@lru_cache(maxsize=None)
def build_poset_cached(case: GroupCase) -> Poset:
    return build_poset(case)


# -- corners and labels ----------------------------------------------------------


def _l_turns(path: Path) -> list[PosetPoint]:
    out = []
    for prev, v, nxt in zip(path, path[1:], path[2:]):
        if prev == (v.row - 1, v.col) and nxt == (v.row, v.col + 1):
            out.append(v)
    return out


def _shadowed(sources: Sequence[PosetPoint], lturns: set[PosetPoint], include_self: bool) -> set[PosetPoint]:
    shadow: set[PosetPoint] = set()
    for src in sources:
        v = src if include_self else PosetPoint(src.row + 1, src.col - 1)
        while v in lturns:
            shadow.add(v)
            v = PosetPoint(v.row + 1, v.col - 1)
    return shadow


def _corners_of(case: "GroupCase | WallachCase", paths: Sequence[Path], poset: Poset) -> frozenset[PosetPoint]:
    if isinstance(case, GroupCase) and case.group is Group.O:
        out = set()
        for path in paths:
            if len(path) > 1 and path[1] == (path[0].row - 1, path[0].col):
                out.add(path[0])
            for prev, v, nxt in zip(path, path[1:], path[2:]):
                if prev == (v.row, v.col - 1) and nxt == (v.row - 1, v.col):
                    out.add(v)
        return frozenset(out)
    lturns = {v for path in paths for v in _l_turns(path)}
    if isinstance(case, WallachCase):
        return _wallach_corners(paths, lturns, poset)
    if case.group is Group.GL:
        sources = [path[-1] for path in paths if path[-1].col == case.q]
    else:
        sources = [path[0] for path in paths] + [path[-1] for path in paths]
    return frozenset(lturns - _shadowed(sources, lturns, include_self=False))


def _wallach_corners(paths: Sequence[Path], lturns: set[PosetPoint], poset: Poset) -> frozenset[PosetPoint]:
    """Corners in an ADE diagram.

    An L-turn is shadowed by the poset's permanent markers, and also when
    its northeast neighbour is missing from the diagram or is a point of the
    facet that is not itself a corner (the diamond of Dn is the first case).
    """
    occupied = {pt for path in paths for pt in path}
    marked = _shadowed(poset.shadow_markers, lturns, include_self=True)
    out: set[PosetPoint] = set()
    for v in sorted(lturns):  # northeast neighbours are settled first
        w = PosetPoint(v.row - 1, v.col + 1)
        if v in marked or w not in poset:
            continue
        if w in occupied and w not in out:
            continue
        out.add(v)
    return frozenset(out)


def _label_of(
    case: "GroupCase | WallachCase", paths: Sequence[Path], corners: frozenset, poset: Poset
) -> str:
    words = []
    if isinstance(case, GroupCase) and case.group is Group.O:
        # read from the east edge toward the diagonal: west = 0, south = 1
        for path in paths:
            rev = path[::-1]
            words.append("".join("0" if b.row == a.row else "1" for a, b in zip(rev, rev[1:])))
        return " ".join(words)
    occupied = {pt for path in paths for pt in path}
    for path in paths:
        bits = []
        end = path[-1]
        for u, v in zip(path, path[1:]):
            if v.row == u.row:
                bits.append("0")
                continue
            # a south step is free (1) when the east step out of u was
            # available: inside the poset, still able to reach the endpoint,
            # and not blocked by a point of another path that could not be
            # moved out of the way
            w = PosetPoint(u.row, u.col + 1)
            free = (
                w in poset
                and w.col <= end.col
                and (w not in occupied or w in corners)
            )
            bits.append("1" if free else "0")
        words.append("".join(bits))
    return " ".join(words)


def _make_family(case, E: EndpointSet, paths: tuple[Path, ...], poset: Poset) -> PathFamily:
    corners = _corners_of(case, paths, poset)
    label = _label_of(case, paths, corners, poset)
    return PathFamily(case, E, paths, corners, label)


def enumerate_families(E: EndpointSet, case: GroupCase) -> list[PathFamily]:
    """Every family with endpoints ``E``, sorted by shelling label."""
    require_endpoints(E, case)
    return list(_enumerate_families(E, case))


@lru_cache(maxsize=512)
def _enumerate_families(E: EndpointSet, case: GroupCase) -> tuple[PathFamily, ...]:
    poset = build_poset_cached(case)
    fams = [_make_family(case, E, paths, poset) for paths in _raw_families(case, E)]
    fams.sort(key=lambda f: f.label)
    return tuple(fams)


def make_family(case: GroupCase, E: EndpointSet, paths: Sequence[Sequence[tuple[int, int]]]) -> PathFamily:
    """Build a family from explicit paths (any order), validating it."""
    poset = build_poset_cached(case)
    ps = [tuple(PosetPoint(*pt) for pt in path) for path in paths]
    ends = _ends(case, E)
    by_end = {path[-1]: path for path in ps}
    if set(by_end) != set(ends) or len(ps) != case.k:
        raise CaseError("paths do not end at the given endpoints")
    ordered = tuple(by_end[e] for e in ends)
    flipped = case.group is Group.O
    seen: set[PosetPoint] = set()
    for idx, path in enumerate(ordered):
        if case.group is not Group.O and path[0] != _starts(case, E)[idx]:
            raise CaseError(f"path {idx} starts at the wrong point")
        if flipped and path[0].row != path[0].col:
            raise CaseError("O paths start on the diagonal")
        for a, b in zip(path, path[1:]):
            ok = (b == (a.row, a.col + 1)) or (b == ((a.row - 1, a.col) if flipped else (a.row + 1, a.col)))
            if not ok:
                raise CaseError(f"{a}->{b} is not a path step")
        for pt in path:
            if pt not in poset or pt in seen:
                raise CaseError(f"point {pt} is outside the poset or shared")
            seen.add(pt)
    return _make_family(case, E, ordered, poset)


def corners(F: PathFamily, case: "GroupCase | WallachCase | None" = None) -> frozenset[PosetPoint]:
    return F.corners


def shelling_label(F: PathFamily, case: "GroupCase | WallachCase | None" = None) -> str:
    return F.label


def descent_count(label: str, terminal_ones: bool = False) -> int:
    """Number of "10" patterns per word, plus trailing 1s of each word if asked."""
    total = 0
    for word in label.split():
        total += sum(1 for a, b in zip(word, word[1:]) if a == "1" and b == "0")
        if terminal_ones and word.endswith("1"):
            total += 1
    return total


def family_size(E: EndpointSet, case: GroupCase) -> int:
    """d_E, read off from one family."""
    require_endpoints(E, case)
    return _family_size(E, case)


@lru_cache(maxsize=None)
def _family_size(E: EndpointSet, case: GroupCase) -> int:
    if case.group is Group.O:
        return sum(case.n - e + 1 for e in E.rows)
    first = next(_raw_families(case, E), None)
    if first is None:
        raise CaseError(f"no family ends at {E.format(case.group)}")
    return sum(len(p) for p in first)


def d_max(case: GroupCase) -> int:
    k = case.k
    if case.group is Group.GL:
        return case.p * case.q - (case.p - k) * (case.q - k)
    if case.group is Group.SP:
        return k * (2 * case.n - 2 * k - 1)
    return k * (2 * case.n - k + 1) // 2


# -- Wallach order complexes -----------------------------------------------------


def _maximal_chains(poset: Poset) -> list[Path]:
    succ: dict[PosetPoint, list[PosetPoint]] = {pt: [] for pt in poset.points}
    has_pred = set()
    for a, b in poset.covers:
        succ[a].append(b)
        has_pred.add(b)
    for pt in succ:
        succ[pt].sort(key=lambda b: (b.row, -b.col))  # east before south
    mins = [pt for pt in poset.points if pt not in has_pred]
    chains: list[Path] = []

    def rec(path: list[PosetPoint]) -> None:
        nxt = succ[path[-1]]
        if not nxt:
            chains.append(tuple(path))
            return
        for b in nxt:
            path.append(b)
            rec(path)
            path.pop()

    for m in mins:
        rec([m])
    return chains


def _peel(points: frozenset[PosetPoint], k: int) -> tuple[Path, ...]:
    """Split a facet into k saturated chains, taking the east-most path first."""
    remaining = set(points)
    paths: list[Path] = []
    for _ in range(k):
        start = min(p for p in remaining if (p.row - 1, p.col) not in remaining and (p.row, p.col - 1) not in remaining)
        path = [start]
        while True:
            v = path[-1]
            east, south = PosetPoint(v.row, v.col + 1), PosetPoint(v.row + 1, v.col)
            if east in remaining:
                path.append(east)
            elif south in remaining:
                path.append(south)
            else:
                break
        paths.append(tuple(path))
        remaining.difference_update(path)
    if remaining:
        raise CaseError("facet does not split into the expected number of chains")
    # southwest first: the peeled outer path is the northeast one
    return tuple(paths[::-1])


def wallach_facets(wcase: WallachCase) -> list[PathFamily]:
    """Facets of the k-th order complex, with corners, sorted by label."""
    return list(_wallach_facets(wcase))


@lru_cache(maxsize=None)
def _wallach_facets(wcase: WallachCase) -> tuple[PathFamily, ...]:
    poset = build_ade_poset(wcase)
    chains = _maximal_chains(poset)
    unions = {frozenset(pt for ch in combo for pt in ch) for combo in itertools.combinations(chains, wcase.k)}
    size = max(len(u) for u in unions)
    facets = []
    for u in unions:
        if len(u) != size:
            continue
        if wcase.k == 1:
            (paths,) = [(ch,) for ch in chains if frozenset(ch) == u]
        else:
            paths = _peel(u, wcase.k)
        E = EndpointSet(tuple(sorted(p[-1].row for p in paths)))
        facets.append(_make_family(wcase, E, paths, poset))
    facets.sort(key=lambda f: f.label)
    return tuple(facets)
