#!/usr/bin/env python3
"""Desk-scale sweep over GL/Sp/O cases.

For each case prints d_max, the largest family found, the number of
families, and two shelling checks: the lexicographically first family of
every endpoint set is corner-free, and corners equal label descents.

    python3 scripts/sweep.py --max-dim 5
"""

from __future__ import annotations

import argparse
import sys
import time

from jellyfish.paths import _enumerate_families, d_max, descent_count, valid_endpoint_sets
from jellyfish.poset import Group, GroupCase


def cases(max_dim: int):
    for p in range(1, max_dim + 1):
        for q in range(1, max_dim + 1):
            for k in range(1, min(p, q) + 1):
                yield GroupCase.gl(k, p, q)
    for n in range(2, max_dim + 5):
        for k in range(1, n // 2 + 1):
            yield GroupCase.sp(k, n)
    for n in range(1, max_dim + 3):
        for k in range(1, n + 1):
            yield GroupCase.o(k, n)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-dim", type=int, default=6)
    a = ap.parse_args(argv)
    bad = 0
    start = time.perf_counter()
    print(f"{'case':<22}{'d_max':>6}{'best':>6}{'families':>10}  checks")
    for case in cases(a.max_dim):
        best = nfam = lex_bad = desc_bad = 0
        o = case.group is Group.O
        for E in valid_endpoint_sets(case):
            fams = _enumerate_families(E, case)
            nfam += len(fams)
            best = max(best, fams[0].size)
            lex_bad += bool(fams[0].corners)
            desc_bad += sum(descent_count(F.label, o) != len(F.corners) for F in fams)
        ok = best == d_max(case) and not lex_bad and not desc_bad
        bad += not ok
        print(f"{str(case):<22}{d_max(case):>6}{best:>6}{nfam:>10}  {'ok' if ok else f'FAIL lex={lex_bad} desc={desc_bad}'}")
    print(f"{bad} failing cases, {time.perf_counter() - start:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
