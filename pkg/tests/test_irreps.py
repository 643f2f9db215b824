"""Branching checks for unitary irreducibles restricted to the two groups.

Frozen invariant dimensions below were produced by the tensor-power oracle
(common kernel of the Lie algebra action + symmetric group characters) in
oracles.py; the test re-runs that oracle live as well.
"""

from fractions import Fraction

import numpy as np
import pytest

from orbitspec.groups import isospectral_pair, make_unitary
from orbitspec.irreps import (
    complete_homogeneous,
    invariant_dim_in_irrep,
    partitions_with_at_most,
    schur_at_monomials,
    unitary_embedding_weights,
    validate_partition,
)

from oracles import (
    common_kernel,
    quaternion_rotation_algebra,
    tensor_invariant_dims,
    unitary_double_algebra,
)

# partition -> (invariant dim for both groups, dim of the SU(6) irrep)
FROZEN = {
    (): (1, 1),
    (1,): (0, 6),
    (2,): (1, 21),
    (1, 1): (1, 15),
    (3,): (0, 56),
    (2, 1): (0, 70),
    (1, 1, 1): (0, 20),
    (4,): (1, 126),
    (3, 1): (1, 210),
    (2, 2): (2, 105),
    (2, 1, 1): (1, 105),
    (1, 1, 1, 1): (1, 15),
}


def hook_content_dim(lam, d):
    """dim of the GL(d) irrep for partition lam, by hook contents."""
    if not lam:
        return 1
    cols = [0] * lam[0]
    for row in lam:
        for j in range(row):
            cols[j] += 1
    num = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = (row - j) + (cols[j] - i) - 1
            num *= Fraction(d + j - i, hook)
    assert num.denominator == 1
    return int(num)


def test_partition_enumeration():
    ps = partitions_with_at_most(4)
    assert len(ps) == 12
    assert () in ps
    assert (2, 1) in ps and (1, 1, 1, 1) in ps
    assert partitions_with_at_most(4, max_rows=2) == [
        (),
        (1,),
        (2,),
        (1, 1),
        (3,),
        (2, 1),
        (4,),
        (3, 1),
        (2, 2),
    ]


def test_validate_partition():
    assert validate_partition((3, 1, 0), 5) == (3, 1)
    with pytest.raises(ValueError):
        validate_partition((1, 2), 5)
    with pytest.raises(ValueError):
        validate_partition((1, 1, 1), 2)
    with pytest.raises(ValueError):
        validate_partition((-1,), 5)


def test_embedding_weights_of_pair():
    h1, h2 = isospectral_pair(3)
    for g in (h1, h2):
        mono = unitary_embedding_weights(g)
        assert len(mono) == 6
        assert sorted(mono) == sorted(
            [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
        )


def test_embedding_weights_need_self_duality():
    g = make_unitary(1).with_action([(1,), (1,)])
    with pytest.raises(ValueError, match="self-dual"):
        unitary_embedding_weights(g)
    with pytest.raises(ValueError, match="action"):
        unitary_embedding_weights(make_unitary(1))


def test_complete_homogeneous_small():
    # two monomials z and 1/z: h_r = z^r + z^{r-2} + ... + z^{-r}
    h = complete_homogeneous([(1,), (-1,)], 1, 3)
    for r in range(4):
        assert h[r].terms == {(r - 2 * i,): 1 for i in range(r + 1)}


def test_schur_dimensions_match_hook_contents():
    # evaluating s_lambda at all-ones (sum of coefficients) gives dim V_lambda
    h1, _ = isospectral_pair(3)
    mono = unitary_embedding_weights(h1)
    for lam, (_, dim) in FROZEN.items():
        s = schur_at_monomials(lam, mono, 3)
        assert sum(s.terms.values()) == dim == hook_content_dim(lam, 6)


def test_schur_of_single_box_is_character():
    h1, _ = isospectral_pair(3)
    mono = unitary_embedding_weights(h1)
    s = schur_at_monomials((1,), mono, 3)
    assert s.terms == {w: 1 for w in mono}


def test_invariant_dims_match_frozen_table():
    h1, h2 = isospectral_pair(3)
    for lam, (inv, _) in FROZEN.items():
        assert invariant_dim_in_irrep(lam, h1) == inv
        assert invariant_dim_in_irrep(lam, h2) == inv


def test_invariant_dims_match_tensor_oracle():
    h1, h2 = isospectral_pair(3)
    for algebra, g in ((unitary_double_algebra(), h1), (quaternion_rotation_algebra(), h2)):
        found = {(): 1}
        for k in (1, 2, 3, 4):
            found.update(tensor_invariant_dims(algebra, k))
        for lam in partitions_with_at_most(4):
            assert found[lam] == invariant_dim_in_irrep(lam, g), lam


def test_adjoint_invariants_equal_commutant():
    # the (2,1,1,1,1) irrep is the adjoint; its invariants are the traceless
    # part of the commutant of the embedded algebra
    h1, h2 = isospectral_pair(3)
    for algebra, g in ((unitary_double_algebra(), h1), (quaternion_rotation_algebra(), h2)):
        ads = [np.kron(X, np.eye(6)) - np.kron(np.eye(6), X.T) for X in algebra]
        commutant = common_kernel(ads).shape[1]
        assert invariant_dim_in_irrep((2, 1, 1, 1, 1), g) == commutant - 1 == 1
