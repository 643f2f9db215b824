"""
Why the unitary quotient is not a hemisphere
=============================================

The quotient of S^11 by U(3) is a 3-dimensional constant-curvature-4
space bounded by totally geodesic walls, which sounds a lot like a round
hemisphere of the same curvature.  The Neumann spectrum tells them
apart: the hemisphere hears eigenvalue 12 with multiplicity 3, the
quotient does not hear it at all.
"""

from orbitspec.groups import isospectral_pair
from orbitspec.hemisphere import dirichlet_mults, neumann_spectrum
from orbitspec.invariants import harmonic_spectrum, spectra_equal

quotient = harmonic_spectrum(isospectral_pair(3)[0], 12)
hemi = neumann_spectrum(12)

print("eigenvalue rows (lambda, multiplicity), curvature-4 normalization")
print("  quotient:  ", quotient.eigenvalue_rows()[:6])
print("  hemisphere:", hemi.eigenvalue_rows()[:6])

cmp = spectra_equal(quotient, hemi)
print()
print(cmp.describe())

# the hemisphere multiplicities split the full-sphere harmonics by
# parity in the coordinate normal to the boundary wall
print()
dirichlet = dirichlet_mults(6)
print(f"{'j':>3} {'Neumann':>8} {'Dirichlet':>10} {'total':>6}")
for j, m in enumerate(hemi.mults[:7]):
    print(f"{j:>3} {m:>8} {dirichlet[j]:>10} {(j + 1) ** 2:>6}")
