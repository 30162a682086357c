"""Command-line front end.

Examples::

    jellyfish series covariants --group sp --k 2 --n 6 --tau 2,1 --format latex
    jellyfish series wallach --wallach E7 --level 2 --format latex
    jellyfish bernstein --group o --k 3 --n 7 --tau 1
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import oracle, paths, render, series, stanley, tableaux
from .poset import CaseError, Group, GroupCase, WallachCase, build_ade_poset, build_poset

EXIT_OK, EXIT_PARAMS, EXIT_MISMATCH = 0, 2, 3
FORMATS = ("json", "latex", "ascii", "svg", "tikz")

log = logging.getLogger("jellyfish")


class UsageError(CaseError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 itself; keep the JSON error contract
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jellyfish", description="Stanley decompositions and Hilbert series via jellyfish.")
    p.add_argument("verb", choices=[
        "poset", "endpoints", "families", "bins", "series", "bernstein",
        "stanley", "locate", "weight", "diagram", "oracle",
    ])
    p.add_argument("sub", nargs="?", help="sub-verb, e.g. 'show', 'list', 'covariants'")
    p.add_argument("--group", choices=["gl", "sp", "o", "GL", "Sp", "O"])
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--tau", default="", help="comma separated, e.g. 2,1 or 1,0,-1")
    p.add_argument("--wallach", choices=["Dn", "E6", "E7"])
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--endpoints", help="e.g. '2*,4*,5*' or '1,5'")
    p.add_argument("--index", type=int, default=0, help="family index for diagram")
    p.add_argument("--monomial", help="e.g. 'f[1,2]^2 * f[3,4] * phi[2,3/4]'")
    p.add_argument("--arcs", action="store_true", help="diagram: draw the arc diagram of --monomial")
    p.add_argument("--max-degree", type=int, default=9)
    p.add_argument("--locate-degree", type=int)
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out", help="write the result to this file instead of stdout")
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work is sequential")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


# -- argument helpers ---------------------------------------------------------------------


def _case(a) -> GroupCase:
    if not a.group:
        raise UsageError("--group is required")
    if a.k is None:
        raise UsageError("--k is required")
    g = Group.parse(a.group)
    if g is Group.GL:
        return GroupCase.gl(a.k, a.p, a.q)
    return GroupCase(g, a.k, n=a.n)


def _wcase(a) -> WallachCase:
    if not a.wallach:
        raise UsageError("--wallach is required")
    return WallachCase(a.wallach, a.level, a.n)


def _shape(a, case: GroupCase) -> tableaux.Shape:
    shape = tableaux.Shape.parse(a.tau)
    tableaux.check_shape(case, shape)
    return shape


def _fmt(a, default: str, allowed: Sequence[str]) -> str:
    fmt = a.format or default
    if fmt not in allowed:
        raise UsageError(f"--format {fmt} is not available here; choose from {', '.join(allowed)}")
    return fmt


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _series_out(s: series.RationalSeries, fmt: str, payload: dict | None = None) -> str:
    if fmt == "latex":
        return series.to_latex(s) + "\n"
    if fmt == "ascii":
        return series.to_text(s) + "\n"
    body = dict(payload or {})
    body["reduced"] = s.to_json()
    body["latex"] = series.to_latex(s)
    return _dump(body)


# -- verbs ----------------------------------------------------------------------------------


def _poset(a) -> str:
    poset = build_ade_poset(_wcase(a)) if a.wallach else build_poset(_case(a))
    fmt = _fmt(a, "json", ("json", "ascii", "svg", "tikz"))
    return _dump(poset.to_json()) if fmt == "json" else render.render(poset, fmt)


def _endpoints(a) -> str:
    case = _case(a)
    case.require_range()
    rows = [
        {"endpoints": E.to_json(case.group), "d_E": paths.family_size(E, case)}
        for E in paths.valid_endpoint_sets(case)
    ]
    fmt = _fmt(a, "json", ("json", "ascii"))
    if fmt == "json":
        return _dump({"case": case.to_json(), "endpoint_sets": rows})
    return "".join(
        f"{E.format(case.group)}  d_E={paths.family_size(E, case)}\n" for E in paths.valid_endpoint_sets(case)
    )


def _families(a) -> str:
    if a.wallach:
        fams = paths.wallach_facets(_wcase(a))
        case_json = _wcase(a).to_json()
    else:
        case = _case(a)
        if not a.endpoints:
            raise UsageError("--endpoints is required")
        E = paths.EndpointSet.parse(a.endpoints, case.group)
        paths.require_endpoints(E, case)
        fams = paths.enumerate_families(E, case)
        case_json = case.to_json()
    fmt = _fmt(a, "json", ("json", "ascii"))
    if fmt == "json":
        return _dump({"case": case_json, "families": [F.to_json() for F in fams]})
    return "\n".join(render.render(F, "ascii") + f"label {F.label}\n" for F in fams)


def _bins(a) -> str:
    case = _case(a)
    case.require_range()
    shape = _shape(a, case)
    sizes = tableaux.bin_sizes(case, shape)
    fmt = _fmt(a, "json", ("json", "ascii"))
    if fmt == "json":
        return _dump({
            "case": case.to_json(),
            "tau": str(shape),
            "bins": [{"endpoints": E.to_json(case.group), "size": m} for E, m in sizes.items() if m],
        })
    return "".join(f"{E.format(case.group)}  {m}\n" for E, m in sizes.items() if m)


def _series(a) -> str:
    sub = a.sub or "covariants"
    if sub == "wallach":
        w = _wcase(a)
        return _series_out(series.wallach_series(w), _fmt(a, "json", ("json", "latex", "ascii")), {"case": w.to_json()})
    fmt = _fmt(a, "json", ("json", "latex", "ascii"))
    if sub == "sl":
        if a.k is None:
            raise UsageError("--k is required")
        sl = series.sl_invariant_series(a.k, a.p, a.q)
        payload = {
            "case": {"group": "SL", "k": a.k, "p": a.p, "q": a.q},
            "unreduced": sl.unreduced().to_json(),
            "products": [
                {"endpoints": E.to_json(Group.GL), "P": P.to_json(), "Q": Q.to_json()}
                for E, P, Q in sl.unstarred + sl.starred
            ],
        }
        return _series_out(sl.reduced, fmt, payload)
    if sub == "so":
        if a.k is None:
            raise UsageError("--k is required")
        s = series.so_invariant_series(a.k, a.n)
        return _series_out(series.reduce(s), fmt, {"case": {"group": "SO", "k": a.k, "n": a.n}})
    case = _case(a)
    if sub == "invariants":
        return _series_out(series.invariant_series(case), fmt, {"case": case.to_json(), "tau": "0"})
    if sub != "covariants":
        raise UsageError(f"unknown series kind {sub!r}")
    cs = series.covariant_series(case, _shape(a, case))
    if fmt == "json":
        return _dump(cs.to_json())
    return _series_out(cs.reduced, fmt)


def _bernstein(a) -> str:
    case = _case(a)
    case.require_range()
    shape = _shape(a, case)
    value = series.bernstein_degree(case, shape)
    if _fmt(a, "ascii", ("json", "ascii")) == "json":
        return _dump({"case": case.to_json(), "tau": str(shape), "bernstein_degree": value})
    return f"{value}\n"


def _stanley(a) -> str:
    case = _case(a)
    case.require_range()
    shape = _shape(a, case)
    fmt = _fmt(a, "json", ("json", "ascii"))
    spaces = stanley.stanley_decomposition(case, shape)
    if fmt == "json":
        return _dump({"case": case.to_json(), "tau": str(shape), "spaces": [s.to_json() for s in spaces]})
    lines = []
    for s in spaces:
        free = " ".join(p.label(case.group) for p in sorted(s.free_generators))
        cor = " ".join(p.label(case.group) for p in sorted(s.coefficient_corners)) or "-"
        lines.append(f"deg {s.degree}  corners {cor}  tableau {json.dumps(s.tableau.to_json())}  free {free}")
    return "\n".join(lines) + "\n"


def _monomial(a, case: GroupCase) -> stanley.Monomial:
    if not a.monomial:
        raise UsageError("--monomial is required")
    return stanley.normalize(stanley.parse_monomial(a.monomial, case.group), case)


def _locate(a) -> str:
    case = _case(a)
    m = _monomial(a, case)
    j = stanley.locate(m, case)
    if _fmt(a, "json", ("json", "ascii")) == "json":
        body = j.to_json()
        body["monomial"] = m.format(case.group)
        body["free_part"] = [[p.row, p.col, e] for p, e in sorted(m.free_part(j.family).items())]
        return _dump(body)
    return render.render(j, "ascii")


def _weight(a) -> str:
    case = _case(a)
    m = _monomial(a, case)
    stanley.check_monomial(m, case)
    wt = stanley.weight(m, case)
    d = stanley.arc_diagram(m, case)
    if _fmt(a, "ascii", ("json", "ascii")) == "json":
        return _dump({
            "case": case.to_json(),
            "monomial": m.format(case.group),
            "degrees": list(d.degrees),
            "weight": wt.to_json(),
            "text": wt.format(),
        })
    return wt.format() + "\n"


def _diagram(a) -> str:
    fmt = _fmt(a, "ascii", ("ascii", "svg", "tikz"))
    if a.wallach:
        facets = paths.wallach_facets(_wcase(a))
        return render.render(facets[a.index % len(facets)] if facets else build_ade_poset(_wcase(a)), fmt)
    case = _case(a)
    if a.monomial:
        m = _monomial(a, case)
        if a.arcs:
            stanley.check_monomial(m, case)
            return render.render(stanley.arc_diagram(m, case), fmt)
        return render.render(stanley.locate(m, case), fmt)
    if a.endpoints:
        E = paths.EndpointSet.parse(a.endpoints, case.group)
        paths.require_endpoints(E, case)
        fams = paths.enumerate_families(E, case)
        if not 0 <= a.index < len(fams):
            raise UsageError(f"--index must lie in 0..{len(fams) - 1}")
        return render.render(fams[a.index], fmt)
    return render.render(build_poset(case), fmt)


def _oracle(a) -> tuple[str, int]:
    case = _case(a)
    shape = _shape(a, case)
    if a.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    rep = oracle.check_equivalence(case, shape, a.max_degree, a.locate_degree)
    if _fmt(a, "json", ("json", "ascii")) == "json":
        out = _dump(rep.to_json())
    else:
        out = "".join(
            f"D={row['D']} oracle={row['oracle']} series={row['series']} {'ok' if row['ok'] else 'MISMATCH'}\n"
            for row in rep.to_json()["per_degree"]
        )
        if rep.witness:
            out += f"witness: {rep.witness}\n"
    return out, EXIT_OK if rep.ok else EXIT_MISMATCH


_VERBS = {
    "poset": _poset,
    "endpoints": _endpoints,
    "families": _families,
    "bins": _bins,
    "series": _series,
    "bernstein": _bernstein,
    "stanley": _stanley,
    "locate": _locate,
    "weight": _weight,
    "diagram": _diagram,
}


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Run one invocation; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        a = _parser().parse_args(list(argv))
        logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING, stream=stderr)
        if a.verb == "oracle":
            text, code = _oracle(a)
        else:
            text, code = _VERBS[a.verb](a), EXIT_OK
    except (CaseError, ValueError) as exc:
        kind = type(exc).__name__
        stderr.write(f"error: {exc}\n")
        stderr.write(json.dumps({"error": kind, "message": str(exc), "exit_code": EXIT_PARAMS}) + "\n")
        return EXIT_PARAMS
    if a.out:
        Path(a.out).write_text(text)
        log.info("wrote %s", a.out)
    else:
        stdout.write(text)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
