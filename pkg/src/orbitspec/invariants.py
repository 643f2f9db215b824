"""Invariant dimensions and harmonic spectra by Weyl integration.

For a compact connected group H with maximal torus T, Weyl's integration
formula turns the Haar average of a class function into a constant-term
extraction over T:

    dim P_k(V)^H = (1/|W|) CT[ prod_{alpha in roots} (1 - z^alpha)
                               * [q^k] prod_j 1/(1 - q z^{mu_j}) ]

where mu_j runs over the weights of V with multiplicity.  All arithmetic is
exact.  The harmonic (sphere Laplacian) multiplicities follow from the
polynomial counts by m_k = c_k - c_{k-2}, with eigenvalue k(k + d - 1) on
the unit sphere S^d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .groups import GroupSpec
from .laurent import LaurentPoly, TruncatedSeries, constant_term


def weyl_factor(g: GroupSpec) -> LaurentPoly:
    """Expand prod_{alpha in roots}(1 - z^alpha) as a Laurent polynomial."""
    out = LaurentPoly.one(g.rank)
    for alpha in g.roots:
        out = out * LaurentPoly(
            g.rank, {(0,) * g.rank: 1, tuple(alpha): -1}
        )
    return out


def weyl_constant_term(g: GroupSpec) -> int:
    """CT of the Weyl factor; equals |W| for any correct root datum."""
    return constant_term(weyl_factor(g))


def molien_series(g: GroupSpec, cap: int, prune: bool = False) -> list[int]:
    """Dimensions of H-invariant polynomials on the ambient space, degrees 0..cap.

    With ``prune`` set, torus exponents that provably cannot reach the
    constant term after the remaining weight factors and the Weyl factor are
    dropped mid-product.  Results are identical; only memory/time change.
    """
    if not g.ambient_weights:
        raise ValueError("group has no attached action; use with_action first")
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    rank = g.rank
    weyl = weyl_factor(g)
    weights = g.ambient_weights

    series = TruncatedSeries.one(rank, cap)
    if prune:
        box = [0] * rank
        for exp in weyl.terms:
            for i, e in enumerate(exp):
                box[i] = max(box[i], abs(e))
        # remaining[t][i] = max |w_i| over weights[t:] (0 past the end)
        remaining = [[0] * rank for _ in range(len(weights) + 1)]
        for t in range(len(weights) - 1, -1, -1):
            for i in range(rank):
                remaining[t][i] = max(remaining[t + 1][i], abs(weights[t][i]))
        for t, w in enumerate(weights):
            # the recurrence adds further copies of w itself at higher q-degree,
            # so the reachability bound must include the current weight
            tail = remaining[t]

            def keep(exp, k, _tail=tail):
                slack = cap - k
                for i, e in enumerate(exp):
                    if abs(e) > box[i] + slack * _tail[i]:
                        return False
                return True

            series = series.mul_geometric(w, keep=keep)
    else:
        wmax = max((max(abs(e) for e in w) if w else 0) for w in weights)
        for w in weights:
            series = series.mul_geometric(w)
        for k in range(cap + 1):
            # every exponent is a sum of at most k weight vectors
            assert series.coeffs[k].max_abs_exponent() <= k * wmax

    order = g.weyl_order
    out = []
    for k in range(cap + 1):
        total = constant_term(series.coeffs[k] * weyl)
        if total % order:
            raise ArithmeticError(
                f"constant term {total} at degree {k} is not divisible by |W|={order}"
            )
        out.append(total // order)
    return out


@dataclass(frozen=True)
class HarmonicSpectrum:
    """Laplace spectrum on invariant functions of a round sphere S^d.

    ``mults[k]`` is the multiplicity of the eigenvalue k(k + d - 1) coming
    from degree-k harmonic polynomials; the listing is complete for all
    eigenvalues <= eigenvalue_cap.
    """

    sphere_dim: int
    mults: tuple[int, ...]
    poly_counts: tuple[int, ...]

    @property
    def cap(self) -> int:
        return len(self.mults) - 1

    def eigenvalue(self, k: int) -> int:
        return k * (k + self.sphere_dim - 1)

    @property
    def eigenvalue_cap(self) -> int:
        return self.eigenvalue(self.cap)

    def eigenvalue_rows(self) -> list[tuple[int, int]]:
        return [
            (self.eigenvalue(k), m) for k, m in enumerate(self.mults) if m > 0
        ]

    def degree_of_eigenvalue(self, lam: int) -> Optional[int]:
        for k in range(self.cap + 1):
            if self.eigenvalue(k) == lam:
                return k
        return None


def harmonic_spectrum(g: GroupSpec, cap: int, prune: bool = False) -> HarmonicSpectrum:
    """Invariant spectrum of the sphere in the attached ambient space."""
    counts = molien_series(g, cap, prune=prune)
    if counts[0] != 1:
        raise ArithmeticError("degree-0 invariants must be the constants")
    mults = []
    for k, c in enumerate(counts):
        prev = counts[k - 2] if k >= 2 else 0
        m = c - prev
        if m < 0:
            raise ArithmeticError(
                f"harmonic multiplicity came out negative at degree {k}"
            )
        mults.append(m)
    return HarmonicSpectrum(
        sphere_dim=g.ambient_real_dim - 1,
        mults=tuple(mults),
        poly_counts=tuple(counts),
    )


@dataclass(frozen=True)
class SpectrumComparison:
    match: bool
    compared_up_to: int
    first_mismatch: Optional[dict]

    def describe(self) -> str:
        if self.match:
            return f"spectra agree for all eigenvalues <= {self.compared_up_to}"
        fm = self.first_mismatch
        return (
            f"first disagreement at eigenvalue {fm['eigenvalue']}: "
            f"multiplicity {fm['mult_a']} vs {fm['mult_b']}"
        )


def spectra_equal(a, b) -> SpectrumComparison:
    """Compare two spectra as (eigenvalue, multiplicity) multisets.

    Both arguments need ``eigenvalue_rows()`` and ``eigenvalue_cap``; rows
    absent from a listing count as multiplicity zero.  Comparison stops at
    the smaller completeness cap, where both listings are exhaustive.
    """
    cap = min(a.eigenvalue_cap, b.eigenvalue_cap)
    rows_a = {lam: m for lam, m in a.eigenvalue_rows() if lam <= cap}
    rows_b = {lam: m for lam, m in b.eigenvalue_rows() if lam <= cap}
    for lam in sorted(set(rows_a) | set(rows_b)):
        ma = rows_a.get(lam, 0)
        mb = rows_b.get(lam, 0)
        if ma != mb:
            return SpectrumComparison(
                match=False,
                compared_up_to=cap,
                first_mismatch={"eigenvalue": lam, "mult_a": ma, "mult_b": mb},
            )
    return SpectrumComparison(match=True, compared_up_to=cap, first_mismatch=None)
