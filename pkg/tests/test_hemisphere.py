from orbitspec.groups import isospectral_pair
from orbitspec.hemisphere import (
    dirichlet_mults,
    harmonic_parity_dims,
    integer_rank,
    neumann_spectrum,
)
from orbitspec.invariants import harmonic_spectrum, spectra_equal

import pytest

from oracles import hemisphere_mults


def test_integer_rank_basics():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 0], [0, 1]]) == 2
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[2, 4, 6], [3, 6, 9], [1, 0, 1]]) == 2
    # a case that exercises pivoting; det = 87, so full rank
    assert integer_rank([[0, 5, 7], [11, 0, 13], [1, 1, 1]]) == 3


def test_low_degree_multiplicities():
    spec = neumann_spectrum(2)
    assert spec.mults == (1, 3, 6)
    assert spec.eigenvalue(1) == 12
    assert spec.eigenvalue(2) == 32


def test_triangular_pattern_and_parity_split():
    spec = neumann_spectrum(12)
    diri = dirichlet_mults(12)
    for j in range(13):
        assert spec.mults[j] == (j + 1) * (j + 2) // 2
        assert diri[j] == j * (j + 1) // 2
        assert spec.mults[j] + diri[j] == (j + 1) ** 2


def test_against_reflection_trace_oracle():
    for j in range(13):
        assert harmonic_parity_dims(j) == hemisphere_mults(j)


def test_eigenvalue_rows_interface():
    spec = neumann_spectrum(3)
    assert spec.eigenvalue_rows() == [(0, 1), (12, 3), (32, 6), (60, 10)]
    assert spec.eigenvalue_cap == 60
    assert spec.degree_of_eigenvalue(32) == 2
    assert spec.degree_of_eigenvalue(31) is None
    assert spec.curvature == 4


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        neumann_spectrum(-1)


def test_hemisphere_differs_from_orbit_spectrum():
    # the quotient of the 11-sphere by the unitary action is isospectral to
    # its partner but NOT to the constant-curvature hemisphere: the first
    # discrepancy sits at eigenvalue 12, where the hemisphere has its j=1
    # eigenspace and the orbit space has nothing between 0 and 24
    h1, _ = isospectral_pair(3)
    orbit = harmonic_spectrum(h1, 12)
    hemi = neumann_spectrum(12)
    cmp = spectra_equal(orbit, hemi)
    assert not cmp.match
    assert cmp.first_mismatch == {"eigenvalue": 12, "mult_a": 0, "mult_b": 3}
