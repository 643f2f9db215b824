"""Invariant dimensions inside unitary irreducibles, restricted to a subgroup.

An irreducible representation of SU(d) labeled by a partition lambda has
torus character s_lambda (a Schur polynomial).  For a compact connected
subgroup H whose embedding sends the H-torus into the diagonal torus by
monomials phi_1..phi_d, the dimension of the H-fixed subspace is again a
Weyl integration:

    dim V_lambda^H = (1/|W_H|) CT[ s_lambda(phi(z)) prod_{alpha}(1 - z^alpha) ]

Schur polynomials are evaluated through the Jacobi-Trudi determinant
s_lambda = det(h_{lambda_i - i + j}), with the complete homogeneous h_r read
off from the truncated product of geometric series over the embedding
monomials, so everything stays in exact Laurent arithmetic.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from typing import Iterable, Sequence

from .groups import GroupSpec, Weight
from .invariants import weyl_factor
from .laurent import LaurentPoly, TruncatedSeries, constant_term

Partition = tuple[int, ...]


def validate_partition(lam: Iterable[int], max_rows: int) -> Partition:
    lam = tuple(int(p) for p in lam if int(p) != 0)
    if any(p < 0 for p in lam):
        raise ValueError("partition parts must be positive")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    if len(lam) > max_rows:
        raise ValueError(f"partition has {len(lam)} rows, at most {max_rows} allowed")
    return lam


def partitions_with_at_most(boxes: int, max_rows: int | None = None) -> list[Partition]:
    """All partitions with at most ``boxes`` boxes, the empty one included."""
    out = [()]
    for total in range(1, boxes + 1):
        out.extend(_partitions_of(total, total))
    if max_rows is not None:
        out = [lam for lam in out if len(lam) <= max_rows]
    return out


def _partitions_of(total: int, largest: int) -> list[Partition]:
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions_of(total - first, first):
            out.append((first,) + rest)
    return out


def complete_homogeneous(
    monomials: Sequence[Weight], rank: int, cap: int
) -> list[LaurentPoly]:
    """h_0..h_cap evaluated at the given torus monomials."""
    series = TruncatedSeries.one(rank, cap)
    for mu in monomials:
        series = series.mul_geometric(tuple(mu))
    return [series.coefficient(k) for k in range(cap + 1)]


def schur_at_monomials(
    lam: Iterable[int], monomials: Sequence[Weight], rank: int
) -> LaurentPoly:
    """Schur polynomial s_lambda at the monomials, by Jacobi-Trudi."""
    lam = validate_partition(lam, max_rows=len(monomials))
    if not lam:
        return LaurentPoly.one(rank)
    ell = len(lam)
    h = complete_homogeneous(monomials, rank, lam[0] + ell)
    zero = LaurentPoly.zero(rank)

    def entry(i: int, j: int) -> LaurentPoly:
        r = lam[i] - (i + 1) + (j + 1)
        if r < 0:
            return zero
        return h[r]

    total = LaurentPoly.zero(rank)
    for perm in permutations(range(ell)):
        sign = _perm_sign(perm)
        term = LaurentPoly.one(rank)
        for i in range(ell):
            term = term * entry(i, perm[i])
            if not term:
                break
        total = total + term.scaled(sign)
    return total


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def unitary_embedding_weights(g: GroupSpec) -> tuple[Weight, ...]:
    """Torus monomials of the complex representation underlying the action.

    The attached ambient weights describe a realified complex representation;
    for a self-dual one (every weight paired with its negative in equal
    number) the complex weight multiset is recovered by halving counts.
    """
    if not g.ambient_weights:
        raise ValueError("group has no attached action")
    counts = Counter(g.ambient_weights)
    for w, c in counts.items():
        neg = tuple(-e for e in w)
        if c % 2 or counts.get(neg, 0) != c:
            raise ValueError(
                "ambient weights are not a self-dual realification; "
                "cannot infer the complex embedding"
            )
    out = []
    for w in sorted(counts):
        out.extend([w] * (counts[w] // 2))
    return tuple(out)


def invariant_dim_in_irrep(lam: Iterable[int], g: GroupSpec) -> int:
    """Dimension of the H-fixed subspace of the SU(d) irrep labeled lam.

    ``d`` is the complex dimension of the embedding derived from the
    attached action (6 for the standard pair at n=3).
    """
    monomials = unitary_embedding_weights(g)
    lam = validate_partition(lam, max_rows=len(monomials))
    s = schur_at_monomials(lam, monomials, g.rank)
    total = constant_term(s * weyl_factor(g))
    if total % g.weyl_order:
        raise ArithmeticError(
            f"constant term {total} not divisible by |W| = {g.weyl_order}"
        )
    return total // g.weyl_order
