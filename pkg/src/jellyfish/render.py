"""ASCII, SVG and TikZ drawings of posets, families, jellyfish and arc diagrams.

ASCII cells are two characters wide.  Path points show the (base 36) index
of their path counted from the southwest, ``#`` marks a corner, ``~`` an
L-turn that is shadowed, ``o`` a tentacle dot and ``.`` an unused poset
point.  ``parse_ascii`` inverts ``render(x, "ascii")``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .paths import PathFamily, _l_turns, build_poset_cached
from .poset import (
    Group,
    GroupCase,
    Poset,
    PosetPoint,
    WallachCase,
    build_ade_poset,
)
from .stanley import ArcDiagram, Jellyfish
from .tableaux import ShapedTableau

FORMATS = ("ascii", "svg", "tikz")
_DIGITS = "123456789abcdefghijklmnopqrstuvwxyz"


class RenderError(ValueError):
    pass


# -- case headers ------------------------------------------------------------------


def case_header(case: "GroupCase | WallachCase") -> str:
    if isinstance(case, WallachCase):
        extra = f" n={case.n}" if case.n else ""
        return f"{case.family.value} k={case.k}{extra}"
    if case.group is Group.GL:
        return f"GL k={case.k} p={case.p} q={case.q}"
    return f"{case.group.value} k={case.k} n={case.n}"


def parse_case_header(text: str) -> "GroupCase | WallachCase":
    name, *rest = text.split()
    kw = {key: int(val) for key, val in (tok.split("=") for tok in rest)}
    if name in ("Dn", "E6", "E7"):
        return WallachCase(name, kw.get("k", 1), kw.get("n", 0))
    return GroupCase(Group.parse(name), **kw)


def _poset_of(case: "GroupCase | WallachCase") -> Poset:
    if isinstance(case, WallachCase):
        return build_ade_poset(case)
    return build_poset_cached(case)


# -- geometry shared by every format ---------------------------------------------------


@dataclass
class Picture:
    """Format-independent content of a poset, family or jellyfish drawing."""

    kind: str
    case: "GroupCase | WallachCase"
    points: tuple[PosetPoint, ...]
    paths: tuple[tuple[PosetPoint, ...], ...] = ()
    corners: frozenset = frozenset()
    shadows: frozenset = frozenset()
    markers: tuple[PosetPoint, ...] = ()
    right: tuple[tuple[int, ...], ...] = ()  # tentacle columns indexed by row
    below: tuple[tuple[int, ...], ...] = ()  # tentacle columns indexed by col

    @property
    def rows(self) -> int:
        return max(p.row for p in self.points)

    @property
    def cols(self) -> int:
        return max(p.col for p in self.points)


def _picture(obj) -> Picture:
    if isinstance(obj, Poset):
        return Picture("poset", obj.case, tuple(obj.points), markers=tuple(obj.shadow_markers))
    if isinstance(obj, Jellyfish):
        pic = _picture(obj.family)
        pic.kind = "jellyfish"
        T = obj.tableau
        case = obj.family.case
        if case.group is Group.GL:
            pic.right = tuple(T.columns("minus"))
            pic.below = tuple(T.columns("plus"))
        else:
            pic.right = tuple(T.columns("plus"))
        return pic
    if isinstance(obj, PathFamily):
        poset = _poset_of(obj.case)
        lturns = {v for p in obj.paths for v in _l_turns(p)}
        return Picture(
            "family",
            obj.case,
            tuple(poset.points),
            obj.paths,
            obj.corners,
            frozenset(lturns - obj.corners),
            tuple(poset.shadow_markers),
        )
    raise RenderError(f"cannot draw {type(obj).__name__}")


# -- ascii ------------------------------------------------------------------------------


def _ascii_picture(pic: Picture) -> str:
    owner = {pt: _DIGITS[i] for i, path in enumerate(pic.paths) for pt in path}
    members = set(pic.points)
    markers = set(pic.markers)
    lines = [f"{pic.kind} {case_header(pic.case)}"]
    # Sp tentacles reach row n, one below the last poset row
    nrows = max([pic.rows] + [max(col) for col in pic.right if col])
    for r in range(1, nrows + 1):
        cells = []
        for c in range(1, pic.cols + 1):
            pt = PosetPoint(r, c)
            if pt in pic.corners:
                ch = "#"
            elif pt in pic.shadows:
                ch = "~"
            elif pt in owner:
                ch = owner[pt]
            elif pt in members:
                ch = "*" if pt in markers and pic.kind == "poset" else "."
            else:
                ch = " "
            cells.append(ch)
        line = f"{r:>3} " + " ".join(cells)
        if pic.right:
            line += " | " + " ".join("o" if r in col else " " for col in pic.right)
        lines.append(line.rstrip())
    for col in pic.below:
        cells = ["o" if c in col else " " for c in range(1, pic.cols + 1)]
        lines.append(("  + " + " ".join(cells)).rstrip())
    return "\n".join(lines) + "\n"


def _ascii_arcs(d: ArcDiagram) -> str:
    lines = ["arcs", "vertices " + " ".join(d.vertices)]
    lines += [f"arc {a} {b}" for a, b in d.arcs]
    lines += ["hyperedge " + " ".join(h) for h in d.hyperedges]
    lines.append("degrees " + " ".join(map(str, d.degrees)))
    return "\n".join(lines) + "\n"


@dataclass
class ParsedDiagram:
    kind: str
    case: "GroupCase | WallachCase | None"
    points: frozenset = frozenset()
    paths: tuple[tuple[PosetPoint, ...], ...] = ()
    corners: frozenset = frozenset()
    shadows: frozenset = frozenset()
    right: tuple[tuple[int, ...], ...] = ()
    below: tuple[tuple[int, ...], ...] = ()
    arcs: ArcDiagram | None = None
    extras: dict = field(default_factory=dict)

    def tableau(self) -> ShapedTableau:
        """Rebuild the tableau from its tentacle columns."""
        if isinstance(self.case, GroupCase) and self.case.group is Group.GL:
            return ShapedTableau(_rows_from_columns(self.below), _rows_from_columns(self.right))
        return ShapedTableau(_rows_from_columns(self.right))


def _rows_from_columns(cols: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if not cols:
        return ()
    height = len(cols[0])
    return tuple(tuple(col[i] for col in cols if len(col) > i) for i in range(height))


def _path_order(case, path: list[PosetPoint]) -> tuple[PosetPoint, ...]:
    if isinstance(case, GroupCase) and case.group is Group.O:
        return tuple(sorted(path, key=lambda p: (p.col - p.row, p.col)))
    return tuple(sorted(path, key=lambda p: (p.row + p.col, p.row)))


def parse_ascii(text: str) -> ParsedDiagram:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise RenderError("empty diagram")
    head = lines[0].split(None, 1)
    kind = head[0]
    if kind == "arcs":
        verts: tuple = ()
        arcs, hyper = [], []
        for ln in lines[1:]:
            tag, *rest = ln.split()
            if tag == "vertices":
                verts = tuple(rest)
            elif tag == "arc":
                arcs.append((rest[0], rest[1]))
            elif tag == "hyperedge":
                hyper.append(tuple(rest))
        return ParsedDiagram("arcs", None, arcs=ArcDiagram(verts, tuple(arcs), tuple(hyper)))
    if kind not in ("poset", "family", "jellyfish"):
        raise RenderError(f"unknown diagram kind {kind!r}")
    case = parse_case_header(head[1])
    grid: dict[PosetPoint, str] = {}
    right_rows: dict[int, list[int]] = {}
    below: list[tuple[int, ...]] = []
    for ln in lines[1:]:
        if ln.startswith("  + "):
            body = ln[4:]
            below.append(tuple(i // 2 + 1 for i, ch in enumerate(body) if ch == "o" and i % 2 == 0))
            continue
        m = re.match(r"^\s*(\d+) (.*)$", ln)
        if not m:
            raise RenderError(f"bad diagram line {ln!r}")
        r = int(m.group(1))
        body, _, tent = m.group(2).partition(" | ")
        for i, ch in enumerate(body):
            if i % 2 == 0 and ch != " ":
                grid[PosetPoint(r, i // 2 + 1)] = ch
        for i, ch in enumerate(tent):
            if i % 2 == 0 and ch == "o":
                right_rows.setdefault(i // 2, []).append(r)
    right = tuple(tuple(sorted(right_rows[c])) for c in sorted(right_rows))
    corners = frozenset(p for p, ch in grid.items() if ch == "#")
    shadows = frozenset(p for p, ch in grid.items() if ch == "~")
    owner: dict[PosetPoint, str] = {p: ch for p, ch in grid.items() if ch in _DIGITS}
    flipped = isinstance(case, GroupCase) and case.group is Group.O
    for p in sorted(corners | shadows, key=lambda p: (p.row, -p.col) if flipped else (p.row, p.col)):
        north = PosetPoint(p.row - 1, p.col)
        if north not in owner:
            raise RenderError(f"cannot attach {p} to a path")
        owner[p] = owner[north]
    groups: dict[str, list[PosetPoint]] = {}
    for p, ch in owner.items():
        groups.setdefault(ch, []).append(p)
    paths = tuple(_path_order(case, groups[ch]) for ch in sorted(groups, key=_DIGITS.index))
    markers = tuple(sorted(p for p, ch in grid.items() if ch == "*"))
    return ParsedDiagram(
        kind, case, frozenset(grid), paths, corners, shadows, right, tuple(below), extras={"markers": markers}
    )


# -- svg --------------------------------------------------------------------------------

_CELL = 24


def _xy(pt: PosetPoint) -> tuple[int, int]:
    return pt.col * _CELL, pt.row * _CELL


def _svg_picture(pic: Picture) -> str:
    width = (pic.cols + 2 + len(pic.right)) * _CELL
    height = (pic.rows + 2 + len(pic.below)) * _CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{pic.kind} {case_header(pic.case)}</title>",
    ]
    for pt in pic.points:
        x, y = _xy(pt)
        out.append(f'<circle cx="{x}" cy="{y}" r="2.5" fill="#bbb"/>')
    for pt in pic.markers:
        x, y = _xy(pt)
        out.append(f'<circle class="marker" cx="{x}" cy="{y}" r="5" fill="none" stroke="#a33"/>')
    for path in pic.paths:
        pts = " ".join("{},{}".format(*_xy(p)) for p in path)
        out.append(f'<polyline class="path" points="{pts}" fill="none" stroke="black" stroke-width="3"/>')
    for pt in sorted(pic.shadows):
        x, y = _xy(pt)
        out.append(
            f'<line class="shadow" x1="{x}" y1="{y}" x2="{x - _CELL // 2}" y2="{y + _CELL // 2}" '
            'stroke="#733" stroke-width="8" stroke-opacity="0.25" stroke-linecap="round"/>'
        )
    for pt in sorted(pic.corners):
        x, y = _xy(pt)
        out.append(f'<rect class="corner" x="{x - 5}" y="{y - 5}" width="10" height="10" fill="#b33" stroke="black"/>')
    for i, col in enumerate(pic.right):
        x = (pic.cols + 1 + i) * _CELL
        for r in col:
            out.append(f'<circle class="tentacle" cx="{x}" cy="{r * _CELL}" r="3.5" fill="black"/>')
    for i, col in enumerate(pic.below):
        y = (pic.rows + 1 + i) * _CELL
        for c in col:
            out.append(f'<circle class="tentacle" cx="{c * _CELL}" cy="{y}" r="3.5" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _svg_arcs(d: ArcDiagram) -> str:
    pos = {v: (i + 1) * 2 * _CELL for i, v in enumerate(d.vertices)}
    width = (len(d.vertices) + 1) * 2 * _CELL
    base = 4 * _CELL
    height = base + (len(d.hyperedges) + 2) * _CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    seen: dict[tuple[str, str], int] = {}
    for a, b in d.arcs:
        n = seen[(a, b)] = seen.get((a, b), 0) + 1
        x1, x2 = pos[a], pos[b]
        if a == b:
            r = 6 + 4 * n
            out.append(f'<circle class="arc" cx="{x1}" cy="{base - r}" r="{r}" fill="none" stroke="black"/>')
        else:
            lift = abs(x2 - x1) / 2 + 6 * n
            out.append(
                f'<path class="arc" d="M {x1} {base} C {x1} {base - lift} {x2} {base - lift} {x2} {base}" '
                'fill="none" stroke="black"/>'
            )
    for i, h in enumerate(d.hyperedges):
        y = base + (i + 1) * _CELL
        xs = [pos[v] for v in h]
        out.append(
            f'<line class="hyperedge" x1="{min(xs)}" y1="{y}" x2="{max(xs)}" y2="{y}" '
            'stroke="#2a9" stroke-width="10" stroke-opacity="0.4" stroke-linecap="round"/>'
        )
        for x in xs:
            out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
    for v, x in pos.items():
        out.append(f'<circle class="vertex" cx="{x}" cy="{base}" r="9" fill="#ddd" stroke="black"/>')
        out.append(f'<text x="{x}" y="{base + 4}" font-size="10" text-anchor="middle">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- tikz -------------------------------------------------------------------------------


def _tz(pt: PosetPoint) -> str:
    return f"({pt.col},{-pt.row})"


def _tikz_picture(pic: Picture) -> str:
    out = [
        f"% {pic.kind} {case_header(pic.case)}",
        "\\begin{tikzpicture}[scale=.35]",
        "\\tikzstyle{dot}=[circle,fill=lightgray,minimum size=4pt,inner sep=0pt]",
        "\\tikzstyle{corner}=[rectangle,draw=black,thin,fill=red!70!gray,minimum size=7pt,inner sep=0pt]",
        "\\tikzstyle{endpt}=[circle,fill=black,minimum size=5pt,inner sep=0pt]",
        "\\tikzstyle{shadow}=[rounded corners,line width=.6em,red!50!black,opacity=.2,cap=round]",
    ]
    out += [f"\\node[dot] at {_tz(p)} {{}};" for p in pic.points]
    for path in pic.paths:
        out.append("\\draw[ultra thick] " + " -- ".join(_tz(p) for p in path) + ";")
    for p in sorted(pic.shadows):
        out.append(f"\\draw[shadow] {_tz(p)} -- ++(-.5,-.5);")
    out += [f"\\node[corner] at {_tz(p)} {{}};" for p in sorted(pic.corners)]
    for i, col in enumerate(pic.right):
        out += [f"\\node[endpt] at ({pic.cols + 1 + i},{-r}) {{}};" for r in col]
    for i, col in enumerate(pic.below):
        out += [f"\\node[endpt] at ({c},{-(pic.rows + 1 + i)}) {{}};" for c in col]
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def _tikz_arcs(d: ArcDiagram) -> str:
    out = ["\\begin{tikzpicture}[thick,scale=.5]"]
    for i, v in enumerate(d.vertices):
        name = v.replace("*", "s")
        out.append(f"\\node[circle,draw,fill=gray!30,inner sep=1pt] (v{name}) at ({i},0) {{{v}}};")
    for a, b in d.arcs:
        na, nb = a.replace("*", "s"), b.replace("*", "s")
        if a == b:
            out.append(f"\\draw (v{na}) to[loop above] (v{nb});")
        else:
            out.append(f"\\draw[bend left=60] (v{na}) to (v{nb});")
    index = {v: i for i, v in enumerate(d.vertices)}
    for j, h in enumerate(d.hyperedges):
        xs = sorted(index[v] for v in h)
        out.append(
            f"\\draw[line width=.8em,green!50!blue,nearly transparent,cap=round] "
            f"({xs[0]},{-(j + 1)}) -- ({xs[-1]},{-(j + 1)});"
        )
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def render(obj, fmt: str = "ascii") -> str:
    """Draw a Poset, PathFamily, Jellyfish or ArcDiagram."""
    if fmt not in FORMATS:
        raise RenderError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    if isinstance(obj, ArcDiagram):
        return {"ascii": _ascii_arcs, "svg": _svg_arcs, "tikz": _tikz_arcs}[fmt](obj)
    pic = _picture(obj)
    return {"ascii": _ascii_picture, "svg": _svg_picture, "tikz": _tikz_picture}[fmt](pic)
