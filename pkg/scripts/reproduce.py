#!/usr/bin/env python3
"""Print the worked values: series, Bernstein degrees, weights, Wallach series.

Each line is computed from scratch; compare against the acceptance suite
(tests/test_acceptance.py) for the expected values.
"""

from __future__ import annotations

import sys

from jellyfish.poset import Group, GroupCase, WallachCase
from jellyfish.series import bernstein_degree, covariant_series, sl_invariant_series, to_text, wallach_series
from jellyfish.stanley import count_jellyfish, locate, parse_monomial, weight
from jellyfish.tableaux import Shape

GL_MONOMIAL = (
    "f[1*,3] * f[2*,1]^2 * f[2*,2] * f[2*,5] * f[3*,3]^2 * f[4*,3]^2 * f[4*,6]^3"
    " * f[3*,5] * phi+[4,5,5] * phi-[1,2,2,3/4,5,5]"
)
SP_MONOMIAL = "f[1,2] * f[1,4]^2 * f[2,7]^3 * f[3,4] * f[3,6] * f[4,5] * f[5,6] * f[5,8]^2 * phi[2,3,3/4,4,5/5,7]"


def main() -> int:
    gl = GroupCase.gl(3, 3, 4)
    print("gl3 adjoint:", to_text(covariant_series(gl, Shape((1,), (1,))).reduced),
          "jellyfish", count_jellyfish(gl, Shape((1,), (1,))))
    sp = GroupCase.sp(2, 6)
    print("Sp4 tau=(2,1):", to_text(covariant_series(sp, Shape((2, 1))).reduced),
          "Bernstein", bernstein_degree(sp, Shape((2, 1))))
    o = GroupCase.o(3, 7)
    print("O3 m=1:", to_text(covariant_series(o, Shape((1,))).reduced), "Bernstein", bernstein_degree(o, Shape((1,))))
    print("SL3 on V*^3+V^4:", to_text(sl_invariant_series(3, 3, 4).reduced))
    for w in (WallachCase("Dn", 1, 6), WallachCase("E6"), WallachCase("E7", 1), WallachCase("E7", 2)):
        print(f"Wallach {w}:", to_text(wallach_series(w)))
    m = parse_monomial(GL_MONOMIAL, Group.GL)
    g356 = GroupCase.gl(3, 5, 6)
    j = locate(m, g356)
    print("GL weight:", weight(m, g356).format(), "corners", sorted(j.family.corners))
    s = parse_monomial(SP_MONOMIAL, Group.SP)
    print("Sp weight:", weight(s, GroupCase.sp(3, 8)).format())
    return 0


if __name__ == "__main__":
    sys.exit(main())
