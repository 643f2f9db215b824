"""
Finding the point where the quotient fails to be an orbifold
=============================================================

A quotient is locally an orbifold exactly when every slice
representation is polar.  Here we run the polarity test on every
stratum of both reduced actions.  One single row fails: the vertex
stratum D of the quaternionic side, where the isotropy circle spins two
normal planes at equal speeds.
"""

import numpy as np

from orbitspec.geometry import polarity_test, slice_rep
from orbitspec.strata import row_by_label, space_action, space_rows

for space in ("o1", "o2"):
    action = space_action(space)
    rng = np.random.default_rng(0)
    print(f"--- {space} ---")
    for row in space_rows(space):
        rep = slice_rep(action, row.sample(rng))
        pol = polarity_test(rep, seed=0)
        print(f"  row {row.label:<3} slice dim {rep.slice_dim}  "
              f"{pol.verdict:<10} residual {pol.max_residual:.2e}")

# the failing slice representation, concretely: the isotropy algebra is
# one skew matrix acting on the 4-dimensional normal space
vertex = row_by_label("o2", "D")
rep = slice_rep(space_action("o2"), vertex.sample(np.random.default_rng(7)))
(S,) = rep.matrices
vals = np.linalg.eigvals(S).imag
print()
print("vertex slice generator rotation speeds:", np.round(sorted(vals[vals > 0]), 6))
print("equal speeds leave no room for a section: any candidate plane")
print("picks up a nonzero bracket residual, here",
      f"{polarity_test(rep, seed=1).max_residual:.3f}")
