"""End-to-end acceptance checks, one test per headline claim.

Every test prints a single PASS/FAIL line (visible with -s or -rA) with the
measured quantity next to its tolerance, and asserts the same condition.
Tolerances are stated inline; integer checks are exact.
"""

import numpy as np

from orbitspec.actions import (
    circle_subaction_quaternion,
    circle_subaction_unitary,
    fixed_embedding_quaternion,
    fixed_embedding_unitary,
    quaternion_orthogonal_action,
    unitary_double_action,
)
from orbitspec.geometry import (
    curvature_statistics,
    fixed_point_subspace,
    oneill_curvature,
    orbit_distance,
    polarity_test,
    slice_rep,
)
from orbitspec.groups import (
    isospectral_pair,
    make_so_even,
    make_symplectic,
    make_unitary,
)
from orbitspec.hemisphere import neumann_spectrum
from orbitspec.invariants import (
    harmonic_spectrum,
    molien_series,
    spectra_equal,
    weyl_constant_term,
)
from orbitspec.irreps import invariant_dim_in_irrep, partitions_with_at_most
from orbitspec.strata import row_by_label, space_action, space_rows, verify_table

from oracles import brute_invariant_counts


def report(num, ok, detail):
    print(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_isospectral_pair_multiplicities():
    g1, g2 = isospectral_pair(3)
    a = harmonic_spectrum(g1, 12)
    b = harmonic_spectrum(g2, 12)
    ok = a.mults == b.mults and a.sphere_dim == b.sphere_dim == 11
    report(1, ok, f"m_k(U(3)) == m_k(Sp(1)xSO(4)) for k <= 12: {list(a.mults)}")


def test_criterion_02_odd_degrees_vanish():
    bad = []
    for g in isospectral_pair(3):
        spec = harmonic_spectrum(g, 12)
        bad.extend(
            (g.describe(), k) for k in range(1, 13, 2) if spec.mults[k] != 0
        )
    report(2, not bad, f"odd-degree multiplicities all zero, k <= 12 (violations: {bad})")


def test_criterion_03_molien_matches_brute_force():
    w2 = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    fixtures = [
        ("U(1) on realified C", make_unitary(1).with_action([(1,), (-1,)])),
        ("U(2) on realified C^2+conj", make_unitary(2).with_action(w2 * 2)),
        ("SO(4) on realified C^4", make_so_even(2).with_action(w2 * 2)),
    ]
    results = []
    ok = True
    for name, g in fixtures:
        engine = molien_series(g, 4)
        oracle = brute_invariant_counts(
            list(g.roots), g.weyl_order, list(g.ambient_weights), 4
        )
        ok &= engine == oracle
        results.append(f"{name}: {engine}")
    report(3, ok, "constant-term == exhaustive monomial count, k <= 4; " + "; ".join(results))


def test_criterion_04_weyl_normalization():
    groups = [
        make_unitary(3),
        make_symplectic(1),
        make_so_even(2),
        isospectral_pair(3)[1],
    ]
    cts = [weyl_constant_term(g) for g in groups]
    orders = [g.weyl_order for g in groups]
    ok = cts == orders
    report(4, ok, f"CT of the Weyl factor = |W|: {cts} vs {orders}")


def test_criterion_05_representation_equivalence():
    g1, g2 = isospectral_pair(3)
    rows = []
    ok = True
    for lam in partitions_with_at_most(4):
        d1 = invariant_dim_in_irrep(lam, g1)
        d2 = invariant_dim_in_irrep(lam, g2)
        ok &= d1 == d2
        rows.append(f"{lam or '()'}:{d1}")
    report(5, ok, "invariant dims agree on all partitions <= 4 boxes: " + " ".join(rows))


def test_criterion_06_stratum_tables_reproduce():
    ok = True
    fractions = []
    for space in ("o1", "o2"):
        for rep in verify_table(space, samples=50, seed=0):
            ok &= rep["match_fraction"] == 1.0
            fractions.append(f"{space}/{rep['row']}={rep['match_fraction']:.2f}")
    report(6, ok, "isotropy dim and qcodim at N=50 per row: " + " ".join(fractions))


def test_criterion_07_polarity_verdicts():
    o2 = space_action("o2")
    worst_d = 1.0
    ok = True
    for seed in range(10):
        rng = np.random.default_rng(seed)
        v = row_by_label("o2", "D").sample(rng)
        pol = polarity_test(slice_rep(o2, v), seed=seed)
        ok &= pol.verdict == "non-polar" and pol.max_residual > 1e-3
        worst_d = min(worst_d, pol.max_residual)
    worst_polar = 0.0
    for space in ("o1", "o2"):
        action = space_action(space)
        for row in space_rows(space):
            if (space, row.label) == ("o2", "D"):
                continue
            for seed in range(3):
                rng = np.random.default_rng(100 + seed)
                pol = polarity_test(slice_rep(action, row.sample(rng)), seed=seed)
                ok &= pol.verdict == "polar" and pol.max_residual < 1e-6
                worst_polar = max(worst_polar, pol.max_residual)
    report(
        7, ok,
        f"o2/D non-polar, min residual {worst_d:.3f} > 1e-3 over 10 seeds; "
        f"all other rows polar, max residual {worst_polar:.2e} < 1e-6",
    )


def test_criterion_08_constant_curvature_on_unitary_quotient():
    o1 = space_action("o1")
    rng = np.random.default_rng(0)
    kappas = []
    for _ in range(100):
        v = rng.normal(size=8)
        v /= np.linalg.norm(v)
        kappas.append(oneill_curvature(o1, v, rng=rng).kappa)
    kappas = np.array(kappas)
    dev = np.abs(kappas - 4.0).max()
    std = kappas.std(ddof=1)
    ok = dev < 0.05 and std < 0.02
    report(8, ok, f"O1 kappa: max |kappa - 4| = {dev:.2e} < 0.05, std = {std:.2e} < 0.02")


def _approach_sequence(action, base, w, seed, halvings=6, start=0.4, planes=16):
    rows = []
    d = start
    for _ in range(halvings + 1):
        v = np.cos(d) * base + np.sin(d) * w
        stats = curvature_statistics(action, v, planes=planes, seed=seed)
        rows.append((d, stats["mean"], stats["mean"] * d * d))
        d /= 2.0
    return rows


def test_criterion_09_curvature_blowup_dichotomy():
    o2 = space_action("o2")
    base = np.zeros(8)
    base[0] = 1.0
    w = np.zeros(8)
    w[[2, 3]] = (0.6, 0.3)
    w[[6, 7]] = (-0.2, 0.7)
    w /= np.linalg.norm(w)
    seq2 = [s for _, _, s in _approach_sequence(o2, base, w, seed=5)]
    blowup_ok = min(seq2) > 0.5 and seq2[-1] > 0.25 * seq2[0]

    o1 = space_action("o1")
    wb = np.zeros(8)
    wb[[2, 3]] = (0.5, -0.4)
    wb[[6, 7]] = (0.3, 0.6)
    wb /= np.linalg.norm(wb)
    rng = np.random.default_rng(0)
    b1 = row_by_label("o1", "B1").sample(rng)
    t = rng.normal(size=8)
    t -= (t @ b1) * b1
    t /= np.linalg.norm(t)
    flat_ok = True
    tails = []
    for base1, dir1 in ((base, wb), (b1, t)):
        rows = _approach_sequence(o1, base1, dir1, seed=5, planes=8)
        means = [m for _, m, _ in rows]
        scaled = [s for _, _, s in rows]
        flat_ok &= max(abs(m - 4.0) for m in means) < 0.05
        flat_ok &= scaled[-1] < 0.01 and scaled[-1] < 0.05 * scaled[0]
        tails.append(scaled[-1])
    ok = blowup_ok and flat_ok
    report(
        9, ok,
        f"O2 mean kappa * d^2 stays above 0.5 toward the vertex ({[f'{s:.3f}' for s in seq2]}); "
        f"O1 statistic tends to 0 toward two boundary strata (tails {tails[0]:.2e}, {tails[1]:.2e})",
    )


def test_criterion_10_hemisphere_spectrum_differs():
    spec1 = harmonic_spectrum(isospectral_pair(3)[0], 12)
    hemi = neumann_spectrum(12)
    cmp = spectra_equal(spec1, hemi)
    fm = cmp.first_mismatch
    ok = (
        not cmp.match
        and fm is not None
        and fm["eigenvalue"] <= cmp.compared_up_to
        and fm == {"eigenvalue": 12, "mult_a": 0, "mult_b": 3}
    )
    report(10, ok, f"O1 vs Neumann hemisphere: first discrepancy {fm}")


def test_criterion_11_reduction_consistency():
    dims = []
    ok = True
    for circle in (circle_subaction_unitary(), circle_subaction_quaternion()):
        F = fixed_point_subspace(circle)
        dims.append(F.shape[1])
        ok &= F.shape[1] == 8
    cases = [
        (space_action("o1"), unitary_double_action(3), fixed_embedding_unitary()),
        (space_action("o2"), quaternion_orthogonal_action(3), fixed_embedding_quaternion()),
    ]
    rng = np.random.default_rng(42)
    worst = 0.0
    for reduced, full, embed in cases:
        for i in range(20):
            v = rng.normal(size=8)
            v /= np.linalg.norm(v)
            w = rng.normal(size=8)
            w /= np.linalg.norm(w)
            d_red = orbit_distance(reduced, v, w, seed=i)
            d_full = orbit_distance(full, embed @ v, embed @ w, seed=i)
            worst = max(worst, abs(d_red - d_full))
    ok &= worst < 1e-4
    report(
        11, ok,
        f"fixed subspace dims {dims} == [8, 8]; distance agreement on 20 pairs per side, "
        f"max difference {worst:.2e} < 1e-4",
    )
