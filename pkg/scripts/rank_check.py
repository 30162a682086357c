#!/usr/bin/env python3
"""Independent dimension check by modular linear algebra.

For a single-column shape tau = (1^t) the degree 2e+t piece of the module of
covariants is spanned by products (monomial of degree e in the invariants f)
times (a t x t highest weight minor).  We evaluate every such product at
random points mod a prime and take the rank.  No jellyfish, tableaux or
series code is involved, so agreement with the series is a real check.

    python3 scripts/rank_check.py --group gl --k 2 --p 3 --q 3 --t 1 --max-e 2
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys
from dataclasses import dataclass

PRIME = 2**31 - 1


@dataclass(frozen=True)
class RankCase:
    group: str  # "gl" or "sp"
    k: int
    p: int = 0
    q: int = 0
    n: int = 0


def _rank(rows: list[list[int]]) -> int:
    rows = [r[:] for r in rows]
    rk = 0
    ncol = len(rows[0]) if rows else 0
    for c in range(ncol):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = pow(rows[rk][c], PRIME - 2, PRIME)
        rows[rk] = [v * inv % PRIME for v in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % PRIME for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def _det(m: list[list[int]]) -> int:
    if not m:
        return 1
    return sum(
        (-1) ** i * m[0][i] * _det([row[:i] + row[i + 1:] for row in m[1:]]) for i in range(len(m))
    ) % PRIME


def _sample(case: RankCase, rng: random.Random):
    """Return (invariants f by index, vectors carrying the minors)."""
    if case.group == "gl":
        y = [[rng.randrange(PRIME) for _ in range(case.k)] for _ in range(case.p)]
        x = [[rng.randrange(PRIME) for _ in range(case.k)] for _ in range(case.q)]
        f = {
            (i, j): sum(a * b for a, b in zip(y[i - 1], x[j - 1])) % PRIME
            for i in range(1, case.p + 1)
            for j in range(1, case.q + 1)
        }
        return f, x
    k = case.k
    v = [[rng.randrange(PRIME) for _ in range(2 * k)] for _ in range(case.n)]

    def omega(a, b):
        return sum(a[s] * b[s + k] - a[s + k] * b[s] for s in range(k)) % PRIME

    f = {(i, j): omega(v[i - 1], v[j - 1]) for i in range(1, case.n + 1) for j in range(i + 1, case.n + 1)}
    return f, v


def dimensions(case: RankCase, t: int, max_e: int, seed: int = 0) -> list[int]:
    """dim of the degree 2e+t piece for e = 0..max_e."""
    rng = random.Random(seed)
    width = case.q if case.group == "gl" else case.n
    cols = list(itertools.combinations(range(width), t))
    out = []
    for e in range(max_e + 1):
        f0, _ = _sample(case, rng)
        cands = [(fm, col) for fm in itertools.combinations_with_replacement(sorted(f0), e) for col in cols]
        mat = []
        for _ in range(len(cands) + 10):
            f, vecs = _sample(case, rng)
            row = []
            for fm, col in cands:
                val = _det([[vecs[c][a] for a in range(t)] for c in col])
                for pt in fm:
                    val = val * f[pt] % PRIME
                row.append(val)
            mat.append(row)
        out.append(_rank(mat))
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--group", choices=["gl", "sp"], required=True)
    ap.add_argument("--k", type=int, required=True)
    ap.add_argument("--p", type=int, default=0)
    ap.add_argument("--q", type=int, default=0)
    ap.add_argument("--n", type=int, default=0)
    ap.add_argument("--t", type=int, default=0, help="column height of tau")
    ap.add_argument("--max-e", type=int, default=2)
    ap.add_argument("--compare", action="store_true", help="also print the series coefficients")
    a = ap.parse_args(argv)
    case = RankCase(a.group, a.k, a.p, a.q, a.n)
    dims = dimensions(case, a.t, a.max_e)
    for e, d in enumerate(dims):
        print(f"degree {2 * e + a.t}: {d}")
    if a.compare:
        from jellyfish.poset import GroupCase
        from jellyfish.series import covariant_series, expand
        from jellyfish.tableaux import Shape

        gc = GroupCase.gl(a.k, a.p, a.q) if a.group == "gl" else GroupCase.sp(a.k, a.n)
        coeffs = expand(covariant_series(gc, Shape((1,) * a.t)).reduced, 2 * a.max_e + a.t)
        ok = all(coeffs[2 * e + a.t] == d for e, d in enumerate(dims))
        print("series:", [coeffs[2 * e + a.t] for e in range(len(dims))], "agree" if ok else "DIFFER")
        return 0 if ok else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
