"""Command line front end.

Exit codes: 0 when every check the subcommand makes passes, 1 when a
verified claim fails, 2 when a result is inconclusive or a rank landed in
the indeterminate band, 64 for usage errors.

The only environment variable honored is ORBITSPEC_THREADS, which caps the
BLAS thread pools; it must be set before numpy is first imported, so it is
applied here at module import time.
"""

import argparse
import csv
import json
import os
import sys

_threads = os.environ.get("ORBITSPEC_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

import numpy as np

from .actions import (
    fixed_embedding_quaternion,
    fixed_embedding_unitary,
    quaternion_orthogonal_action,
    unitary_double_action,
)
from .geometry import (
    IndeterminateRankError,
    StencilDegeneracyError,
    curvature_statistics,
    orbit_distance,
    polarity_test,
    slice_rep,
)
from .groups import group_from_json, isospectral_pair
from .hemisphere import neumann_spectrum
from .invariants import harmonic_spectrum, spectra_equal
from .irreps import invariant_dim_in_irrep, partitions_with_at_most
from .strata import emit_quotient_coords, row_by_label, space_action, verify_table

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

SPHERE_NORMALIZATION = "unit round sphere, lambda_k = k (k + d - 1)"
HEMISPHERE_NORMALIZATION = "constant curvature 4, lambda_j = 4 j (j + 2)"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _emit(doc, args, csv_rows=None, csv_fields=None):
    """Write the report as JSON (default) or CSV where rows exist."""
    fmt = getattr(args, "format", "json")
    out = sys.stdout
    close = False
    if getattr(args, "output", None):
        out = open(args.output, "w")
        close = True
    try:
        if fmt == "csv":
            if csv_rows is None:
                raise SystemExit(EXIT_USAGE)
            writer = csv.DictWriter(out, fieldnames=csv_fields)
            writer.writeheader()
            for row in csv_rows:
                writer.writerow(row)
        else:
            json.dump(doc, out, sort_keys=True, indent=2, default=float)
            out.write("\n")
    finally:
        if close:
            out.close()


def _check_n(args):
    if args.n < 3 or args.n % 2 == 0:
        raise SystemExit(EXIT_USAGE)
    return args.n


def _pair_groups(args):
    return isospectral_pair(_check_n(args))


def _group_for(args):
    if getattr(args, "spec_file", None):
        with open(args.spec_file) as fh:
            return group_from_json(fh.read())
    g1, g2 = _pair_groups(args)
    return g1 if args.space == "o1" else g2


def cmd_spectrum(args):
    g = _group_for(args)
    spec = harmonic_spectrum(g, args.degree)
    rows = [
        {"k": k, "lambda": spec.eigenvalue(k), "m": m}
        for k, m in enumerate(spec.mults)
    ]
    doc = {
        "group": g.describe(),
        "sphere_dim": spec.sphere_dim,
        "degree_cap": spec.cap,
        "eigenvalue_cap": spec.eigenvalue_cap,
        "normalization": SPHERE_NORMALIZATION,
        "rows": rows,
    }
    _emit(doc, args, csv_rows=rows, csv_fields=["k", "lambda", "m"])
    return EXIT_OK


def cmd_compare(args):
    g1, g2 = _pair_groups(args)
    a = harmonic_spectrum(g1, args.degree)
    if args.against == "pair":
        b = harmonic_spectrum(g2, args.degree)
        expected = "full-match"
        names = (g1.describe(), g2.describe())
    else:
        b = neumann_spectrum(args.degree)
        expected = "mismatch"
        names = (g1.describe(), f"hemisphere (curvature {b.curvature})")
    cmp = spectra_equal(a, b)
    verdict = "full-match" if cmp.match else "mismatch"
    doc = {
        "spectrum_a": names[0],
        "spectrum_b": names[1],
        "n": args.n,
        "degree_cap": args.degree,
        "compared_up_to_eigenvalue": cmp.compared_up_to,
        "normalization": SPHERE_NORMALIZATION,
        "verdict": verdict,
        "expected": expected,
        "first_mismatch": cmp.first_mismatch,
        "detail": cmp.describe(),
    }
    _emit(doc, args)
    return EXIT_OK if verdict == expected else EXIT_FAIL


def cmd_irrep_invariants(args):
    g1, g2 = _pair_groups(args)
    rows = []
    all_equal = True
    for lam in partitions_with_at_most(args.max_boxes):
        d1 = invariant_dim_in_irrep(lam, g1)
        d2 = invariant_dim_in_irrep(lam, g2)
        all_equal &= d1 == d2
        rows.append(
            {"partition": list(lam), "dim_h1": d1, "dim_h2": d2, "equal": d1 == d2}
        )
    doc = {
        "groups": [g1.describe(), g2.describe()],
        "n": args.n,
        "max_boxes": args.max_boxes,
        "verdict": "all-equal" if all_equal else "disagreement",
        "rows": rows,
    }
    _emit(doc, args)
    return EXIT_OK if all_equal else EXIT_FAIL


def cmd_hemisphere(args):
    spec = neumann_spectrum(args.max_degree)
    rows = [
        {"j": j, "lambda": spec.eigenvalue(j), "mult": m}
        for j, m in enumerate(spec.mults)
    ]
    doc = {
        "boundary_condition": "Neumann",
        "normalization": HEMISPHERE_NORMALIZATION,
        "max_degree": spec.cap,
        "eigenvalue_cap": spec.eigenvalue_cap,
        "rows": rows,
    }
    _emit(doc, args, csv_rows=rows, csv_fields=["j", "lambda", "mult"])
    return EXIT_OK


def cmd_strata(args):
    if args.coords:
        if args.space == "o1":
            raise SystemExit(EXIT_USAGE)
        rows = emit_quotient_coords(samples=args.samples, seed=args.seed)
        doc = {"samples_per_row": args.samples, "seed": args.seed, "rows": rows}
        _emit(doc, args, csv_rows=rows, csv_fields=["r1", "r2", "alpha", "stratum"])
        return EXIT_OK
    spaces = ["o1", "o2"] if args.space == "both" else [args.space]
    reports = []
    for space in spaces:
        reports.extend(verify_table(space, samples=args.samples, seed=args.seed))
    ok = all(rep["match_fraction"] == 1.0 for rep in reports)
    doc = {
        "samples_per_row": args.samples,
        "seed": args.seed,
        "verdict": "all-rows-match" if ok else "mismatch",
        "rows": reports,
    }
    _emit(doc, args)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_polar(args):
    action = space_action(args.space)
    if args.point:
        v = np.array([float(x) for x in args.point.split(",")])
        if v.shape != (action.ambient_dim,):
            raise SystemExit(EXIT_USAGE)
        v = v / np.linalg.norm(v)
        expected = None
        row_label = None
    else:
        if not args.row:
            raise SystemExit(EXIT_USAGE)
        row = row_by_label(args.space, args.row)
        rng = np.random.default_rng(args.seed)
        v = row.sample(rng)
        row_label = row.label
        expected = "non-polar" if (args.space, row.label) == ("o2", "D") else "polar"
    rep = slice_rep(action, v)
    pol = polarity_test(
        rep,
        samples=args.samples,
        seed=args.seed,
        eps_polar=args.eps_polar,
        eps_nonpolar=args.eps_nonpolar,
    )
    doc = {
        "space": args.space,
        "row": row_label,
        "slice_dim": rep.slice_dim,
        "isotropy_dim": rep.isotropy_dim,
        "verdict": pol.verdict,
        "expected": expected,
        "max_residual": pol.max_residual,
        "eps_polar": args.eps_polar,
        "eps_nonpolar": args.eps_nonpolar,
        "samples": args.samples,
        "seed": args.seed,
    }
    _emit(doc, args)
    if pol.verdict == "inconclusive":
        return EXIT_INCONCLUSIVE
    if expected is None:
        return EXIT_OK
    return EXIT_OK if pol.verdict == expected else EXIT_FAIL


def _vertex_sequence(action, seed, start, halvings, planes):
    """Mean curvature along z(d) = cos(d) vertex + sin(d) w for halving d."""
    rng = np.random.default_rng(seed)
    base = np.zeros(8)
    base[0] = 1.0
    w = np.zeros(8)
    w[[2, 3, 6, 7]] = rng.normal(size=4)
    w /= np.linalg.norm(w)
    rows = []
    d = start
    for _ in range(halvings + 1):
        v = np.cos(d) * base + np.sin(d) * w
        stats = curvature_statistics(action, v, planes=planes, seed=seed)
        rows.append(
            {
                "d": d,
                "mean": stats["mean"],
                "max": stats["max"],
                "mean_times_d2": stats["mean"] * d * d,
            }
        )
        d /= 2.0
    return rows


def cmd_curvature(args):
    action = space_action(args.space)
    if args.toward_vertex:
        rows = _vertex_sequence(
            action, args.seed, args.start_distance, args.halvings, args.planes
        )
        scaled = [r["mean_times_d2"] for r in rows]
        if args.space == "o2":
            expected = "quadratic-blowup"
            ok = scaled[-1] > args.blowup_floor
        else:
            expected = "bounded"
            ok = scaled[-1] < args.blowup_floor
        doc = {
            "space": args.space,
            "mode": "toward-vertex",
            "expected": expected,
            "verdict": expected if ok else "contradicted",
            "start_distance": args.start_distance,
            "halvings": args.halvings,
            "planes": args.planes,
            "seed": args.seed,
            "blowup_floor": args.blowup_floor,
            "rows": rows,
        }
        _emit(doc, args)
        return EXIT_OK if ok else EXIT_FAIL
    rng = np.random.default_rng(args.seed)
    kappas = []
    attempts = 0
    while len(kappas) < args.samples and attempts < 4 * args.samples:
        attempts += 1
        v = rng.normal(size=action.ambient_dim)
        v /= np.linalg.norm(v)
        try:
            stats = curvature_statistics(action, v, planes=1, seed=int(rng.integers(2**32)))
        except (StencilDegeneracyError, IndeterminateRankError):
            continue
        kappas.append(stats["mean"])
    kappas = np.array(kappas)
    doc = {
        "space": args.space,
        "samples": len(kappas),
        "seed": args.seed,
        "mean": float(kappas.mean()),
        "std": float(kappas.std()),
        "min": float(kappas.min()),
        "max": float(kappas.max()),
    }
    if args.space == "o1":
        doc["expected_mean"] = 4.0
        doc["tolerance"] = args.tol
        ok = abs(doc["mean"] - 4.0) <= args.tol
        doc["verdict"] = "constant-four" if ok else "contradicted"
        _emit(doc, args)
        return EXIT_OK if ok else EXIT_FAIL
    doc["verdict"] = "reported"
    _emit(doc, args)
    return EXIT_OK


def cmd_distance(args):
    action = space_action(args.space)
    rng = np.random.default_rng(args.seed)
    if args.reduction_check:
        if args.space == "o1":
            full = unitary_double_action(args.n)
            embed = fixed_embedding_unitary()
        else:
            full = quaternion_orthogonal_action(args.n)
            embed = fixed_embedding_quaternion()
        if args.n != 3:
            raise SystemExit(EXIT_USAGE)
        rows = []
        worst = 0.0
        for i in range(args.samples):
            v = rng.normal(size=8)
            v /= np.linalg.norm(v)
            w = rng.normal(size=8)
            w /= np.linalg.norm(w)
            d_red = orbit_distance(action, v, w, seed=args.seed + i)
            d_full = orbit_distance(full, embed @ v, embed @ w, seed=args.seed + i)
            diff = abs(d_red - d_full)
            worst = max(worst, diff)
            rows.append({"pair": i, "reduced": d_red, "full": d_full, "diff": diff})
        ok = worst <= args.tol
        doc = {
            "space": args.space,
            "mode": "reduction-check",
            "pairs": args.samples,
            "seed": args.seed,
            "tolerance": args.tol,
            "max_difference": worst,
            "verdict": "agrees" if ok else "contradicted",
            "rows": rows,
        }
        _emit(doc, args)
        return EXIT_OK if ok else EXIT_FAIL
    rows = []
    worst = 0.0
    for i in range(args.samples):
        v = rng.normal(size=action.ambient_dim)
        v /= np.linalg.norm(v)
        w = rng.normal(size=action.ambient_dim)
        w /= np.linalg.norm(w)
        d_vw = orbit_distance(action, v, w, seed=args.seed + i)
        d_wv = orbit_distance(action, w, v, seed=args.seed + i + 1)
        worst = max(worst, abs(d_vw - d_wv))
        rows.append({"pair": i, "distance": d_vw, "asymmetry": abs(d_vw - d_wv)})
    ok = worst <= args.tol
    doc = {
        "space": args.space,
        "pairs": args.samples,
        "seed": args.seed,
        "tolerance": args.tol,
        "max_asymmetry": worst,
        "verdict": "symmetric" if ok else "contradicted",
        "rows": rows,
    }
    _emit(doc, args)
    return EXIT_OK if ok else EXIT_FAIL


def _add_common(sub, n=False, degree=False, samples=None, tol=None):
    sub.add_argument("--format", choices=["json", "csv"], default="json")
    sub.add_argument("--output", help="write the report to a file instead of stdout")
    sub.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    if n:
        sub.add_argument("--n", type=int, default=3, help="family parameter, odd n >= 3")
    if degree:
        sub.add_argument("--degree", type=int, default=12, help="degree cap (default 12)")
    if samples is not None:
        sub.add_argument("--samples", type=int, default=samples)
    if tol is not None:
        sub.add_argument("--tol", type=float, default=tol)


def build_parser():
    parser = _Parser(prog="orbitspec", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = subs.add_parser("spectrum", help="invariant Laplace spectrum of a sphere action")
    _add_common(p, n=True, degree=True)
    p.add_argument("--space", choices=["o1", "o2"], default="o1")
    p.add_argument("--spec-file", help="JSON group description instead of --space")
    p.set_defaults(func=cmd_spectrum)

    p = subs.add_parser("compare", help="compare two invariant spectra")
    _add_common(p, n=True, degree=True)
    p.add_argument("--against", choices=["pair", "hemisphere"], default="pair")
    p.set_defaults(func=cmd_compare)

    p = subs.add_parser("irrep-invariants", help="invariant dimensions inside irreps")
    _add_common(p, n=True)
    p.add_argument("--max-boxes", type=int, default=4)
    p.set_defaults(func=cmd_irrep_invariants)

    p = subs.add_parser("hemisphere", help="Neumann spectrum of the curved 3-hemisphere")
    _add_common(p)
    p.add_argument("--max-degree", type=int, default=12)
    p.set_defaults(func=cmd_hemisphere)

    p = subs.add_parser("strata", help="verify the stratum catalogs or emit coordinates")
    _add_common(p, samples=50)
    p.add_argument("--space", choices=["o1", "o2", "both"], default="both")
    p.add_argument("--coords", action="store_true",
                   help="emit quotient coordinates instead of verifying")
    p.set_defaults(func=cmd_strata)

    p = subs.add_parser("polar", help="slice representation polarity test")
    _add_common(p, samples=32)
    p.add_argument("--space", choices=["o1", "o2"], required=True)
    p.add_argument("--row", help="stratum row label, e.g. D")
    p.add_argument("--point", help="comma-separated ambient coordinates")
    p.add_argument("--eps-polar", type=float, default=1e-6)
    p.add_argument("--eps-nonpolar", type=float, default=1e-3)
    p.set_defaults(func=cmd_polar)

    p = subs.add_parser("curvature", help="quotient sectional curvature sampling")
    _add_common(p, samples=100, tol=0.05)
    p.add_argument("--space", choices=["o1", "o2"], required=True)
    p.add_argument("--toward-vertex", action="store_true",
                   help="halving-distance sequence toward the vertex stratum")
    p.add_argument("--start-distance", type=float, default=0.4)
    p.add_argument("--halvings", type=int, default=6)
    p.add_argument("--planes", type=int, default=16)
    p.add_argument("--blowup-floor", type=float, default=0.1,
                   help="threshold for mean kappa times d squared at the last step")
    p.set_defaults(func=cmd_curvature)

    p = subs.add_parser("distance", help="distance between orbits as quotient points")
    _add_common(p, n=True, samples=5, tol=1e-4)
    p.add_argument("--space", choices=["o1", "o2"], default="o2")
    p.add_argument("--reduction-check", action="store_true",
                   help="compare against the ambient action through the fixed embedding")
    p.set_defaults(func=cmd_distance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        code = int(exc.code or 0)
        if code == EXIT_USAGE:
            parser.print_usage(sys.stderr)
        return code
    except IndeterminateRankError as exc:
        print(json.dumps({"verdict": "indeterminate", "error": str(exc)}))
        return EXIT_INCONCLUSIVE
    except StencilDegeneracyError as exc:
        print(json.dumps({"verdict": "inconclusive", "error": str(exc)}))
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
