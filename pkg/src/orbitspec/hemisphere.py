"""Laplace spectrum of a round hemisphere with Neumann boundary data.

The model is the closed upper hemisphere of a 3-sphere of constant curvature
4 (radius 1/2).  Eigenfunctions extend through the boundary to harmonics on
the full sphere that are even under the reflection fixing the equator, so
the Neumann multiplicity at eigenvalue 4 j (j+2) is the dimension of the
reflection-even degree-j harmonic polynomials on R^4; odd ones give the
Dirichlet problem.  Multiplicities are obtained from exact integer ranks of
the Laplacian on monomials, no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    if degree < 0:
        return []
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in _monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _even_monomials(degree: int) -> list[tuple[int, ...]]:
    """Degree-``degree`` monomials in 4 variables, even in the last one."""
    return [b for b in _monomials(4, degree) if b[3] % 2 == 0]


def _odd_monomials(degree: int) -> list[tuple[int, ...]]:
    return [b for b in _monomials(4, degree) if b[3] % 2 == 1]


def integer_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    All divisions are exact and asserted; Python ints never overflow, so
    the result is the true rank over the rationals.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = None
        for r in range(rank, m):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, m):
            factor = rows[r][col]
            row_r = rows[r]
            row_p = rows[rank]
            for c in range(col, n):
                q, rem = divmod(row_r[c] * pivot - factor * row_p[c], prev)
                assert rem == 0, "fraction-free elimination lost exactness"
                row_r[c] = q
        prev = pivot
        rank += 1
    return rank


def _laplacian_matrix(source: list[tuple[int, ...]], target: list[tuple[int, ...]]):
    """Integer matrix of the flat Laplacian from span(source) to span(target)."""
    index = {b: i for i, b in enumerate(target)}
    mat = [[0] * len(source) for _ in target]
    for col, beta in enumerate(source):
        for i in range(4):
            if beta[i] >= 2:
                image = list(beta)
                image[i] -= 2
                mat[index[tuple(image)]][col] += beta[i] * (beta[i] - 1)
    return mat


@lru_cache(maxsize=None)
def harmonic_parity_dims(j: int) -> tuple[int, int]:
    """(even, odd) dimensions of degree-j harmonics on R^4 under x4 -> -x4.

    Computed as dim ker of the Laplacian restricted to each parity class,
    via exact ranks; the two add up to the full harmonic dimension (j+1)^2.
    """
    if j < 0:
        raise ValueError("degree must be nonnegative")
    even_j, even_lower = _even_monomials(j), _even_monomials(j - 2)
    odd_j, odd_lower = _odd_monomials(j), _odd_monomials(j - 2)
    even = len(even_j) - integer_rank(_laplacian_matrix(even_j, even_lower))
    odd = len(odd_j) - integer_rank(_laplacian_matrix(odd_j, odd_lower))
    if j >= 1:
        assert even + odd == (j + 1) ** 2
    return even, odd


@dataclass(frozen=True)
class NeumannSpectrum:
    """Neumann eigenvalues 4 j (j+2) of the curvature-4 hemisphere with
    multiplicities, complete through degree ``cap``."""

    mults: tuple[int, ...]
    curvature: int = 4

    @property
    def cap(self) -> int:
        return len(self.mults) - 1

    def eigenvalue(self, j: int) -> int:
        return 4 * j * (j + 2)

    @property
    def eigenvalue_cap(self) -> int:
        return self.eigenvalue(self.cap)

    def eigenvalue_rows(self) -> list[tuple[int, int]]:
        return [(self.eigenvalue(j), m) for j, m in enumerate(self.mults) if m > 0]

    def degree_of_eigenvalue(self, lam: int):
        for j in range(self.cap + 1):
            if self.eigenvalue(j) == lam:
                return j
        return None


def neumann_spectrum(max_degree: int) -> NeumannSpectrum:
    """Neumann spectrum of the curvature-4 hemisphere through max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    mults = tuple(harmonic_parity_dims(j)[0] for j in range(max_degree + 1))
    return NeumannSpectrum(mults=mults)


def dirichlet_mults(max_degree: int) -> tuple[int, ...]:
    """Dirichlet multiplicities (odd-parity harmonics) through max_degree."""
    return tuple(harmonic_parity_dims(j)[1] for j in range(max_degree + 1))
