"""Isotropy strata of the two reduced quotients, with verified samplers.

Both reduced spheres are unit spheres in R^8, seen as two complex planes.
On the unitary side U(2) acts by g (v1, v2) = (g v1, conj(g) v2); on the
quaternionic side Sp(1) acts on the first plane and O(2) acts by real
matrices on the second, whose real and imaginary parts transform as a pair
of vectors v2, v3 in the ordinary plane.  Each stratum row carries an exact
sampler (points are constructed on the stratum, never filtered into it),
the catalog isotropy dimension, the dimension of the stratum's preimage in
the sphere, and the resulting quotient codimension

    qcodim = 3 - (family_dim - orbit_dim).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .actions import (
    IsometricAction,
    reduced_quaternion_action,
    reduced_unitary_action,
)
from .geometry import isotropy_dim

QUOTIENT_DIM = 3


def _unit(rng, n):
    x = rng.normal(size=n)
    return x / np.linalg.norm(x)


def _complex_pair_to_real8(z1, z2):
    """(C^2, C^2) -> R^8 with (Re..., Im...) ordering."""
    z = np.concatenate([z1, z2])
    return np.concatenate([z.real, z.imag])


def _random_complex(rng, n):
    return rng.normal(size=n) + 1j * rng.normal(size=n)


@dataclass(frozen=True)
class StratumRow:
    label: str
    isotropy: str  # catalog description of the stabilizer
    isotropy_dim: int
    family_dim: int  # dimension of the stratum's preimage in the 7-sphere
    qcodim: int
    sampler: Callable
    condition: str

    def sample(self, rng) -> np.ndarray:
        v = self.sampler(rng)
        return v / np.linalg.norm(v)


# -- unitary side (table "o1") -----------------------------------------


def _o1_generic(rng):
    return _complex_pair_to_real8(_random_complex(rng, 2), _random_complex(rng, 2))


def _o1_twisted_parallel(rng):
    v2 = _random_complex(rng, 2)
    z = _random_complex(rng, 1)[0]
    v1 = z * v2.conj()
    return _complex_pair_to_real8(v1, v2)


def _o1_second_zero(rng):
    return _complex_pair_to_real8(_random_complex(rng, 2), np.zeros(2, dtype=complex))


def _o1_first_zero(rng):
    return _complex_pair_to_real8(np.zeros(2, dtype=complex), _random_complex(rng, 2))


O1_ROWS = (
    StratumRow(
        "A", "trivial", 0, 7, 0, _o1_generic, "v1 and conj(v2) independent"
    ),
    StratumRow(
        "B1", "circle", 1, 5, 1, _o1_twisted_parallel, "v1 = z conj(v2), both nonzero"
    ),
    StratumRow("B2", "circle", 1, 3, 3, _o1_second_zero, "v2 = 0"),
    StratumRow("B3", "circle", 1, 3, 3, _o1_first_zero, "v1 = 0"),
)


# -- quaternionic side (table "o2") ------------------------------------


def _pack_o2(q, v2, v3):
    """Quaternionic block q in C^2 and two real plane vectors into R^8."""
    second = v2 + 1j * v3
    return _complex_pair_to_real8(q, second)


def _o2_generic(rng):
    return _pack_o2(_random_complex(rng, 2), rng.normal(size=2), rng.normal(size=2))


def _o2_planes_parallel(rng):
    u = _unit(rng, 2)
    a, b = rng.uniform(0.3, 1.5, size=2) * rng.choice([-1.0, 1.0], size=2)
    return _pack_o2(_random_complex(rng, 2), a * u, b * u)


def _o2_third_zero(rng):
    return _pack_o2(_random_complex(rng, 2), rng.normal(size=2), np.zeros(2))


def _o2_second_zero(rng):
    return _pack_o2(_random_complex(rng, 2), np.zeros(2), rng.normal(size=2))


def _o2_first_zero(rng):
    return _pack_o2(np.zeros(2, dtype=complex), rng.normal(size=2), rng.normal(size=2))


def _o2_vertex(rng):
    return _pack_o2(_random_complex(rng, 2), np.zeros(2), np.zeros(2))


def _o2_line_only(rng):
    u = _unit(rng, 2)
    a, b = rng.uniform(0.3, 1.5, size=2) * rng.choice([-1.0, 1.0], size=2)
    return _pack_o2(np.zeros(2, dtype=complex), a * u, b * u)


def _o2_e2(rng):
    return _pack_o2(np.zeros(2, dtype=complex), rng.normal(size=2), np.zeros(2))


def _o2_e3(rng):
    return _pack_o2(np.zeros(2, dtype=complex), np.zeros(2), rng.normal(size=2))


O2_ROWS = (
    StratumRow(
        "A", "trivial", 0, 7, 0, _o2_generic, "v1 nonzero, v2 and v3 independent"
    ),
    StratumRow(
        "B1", "reflection", 0, 6, 1, _o2_planes_parallel,
        "v1 nonzero, v2 parallel v3, both nonzero",
    ),
    StratumRow("B2", "reflection", 0, 5, 2, _o2_third_zero, "v1, v2 nonzero, v3 = 0"),
    StratumRow("B3", "reflection", 0, 5, 2, _o2_second_zero, "v1, v3 nonzero, v2 = 0"),
    StratumRow(
        "C", "quaternion unit group", 3, 3, 1, _o2_first_zero,
        "v1 = 0, v2 and v3 independent",
    ),
    StratumRow("D", "plane rotations and reflections", 1, 3, 3, _o2_vertex,
               "v2 = v3 = 0"),
    StratumRow(
        "E1", "quaternion units x reflection", 3, 2, 2, _o2_line_only,
        "v1 = 0, v2 parallel v3, both nonzero",
    ),
    StratumRow("E2", "quaternion units x reflection", 3, 1, 3, _o2_e2,
               "v1 = 0, v3 = 0"),
    StratumRow("E3", "quaternion units x reflection", 3, 1, 3, _o2_e3,
               "v1 = 0, v2 = 0"),
)


_SPACES = {
    "o1": (O1_ROWS, reduced_unitary_action),
    "o2": (O2_ROWS, reduced_quaternion_action),
}


def space_rows(space: str) -> tuple[StratumRow, ...]:
    return _SPACES[_norm_space(space)][0]


def space_action(space: str) -> IsometricAction:
    return _SPACES[_norm_space(space)][1]()


def _norm_space(space) -> str:
    if isinstance(space, str):
        space = space.lower()
    key = {1: "o1", 2: "o2", "1": "o1", "2": "o2"}.get(space, space)
    if key not in _SPACES:
        raise ValueError(f"unknown space {space!r}; expected 'o1' or 'o2'")
    return key


def row_by_label(space: str, label: str) -> StratumRow:
    for row in space_rows(space):
        if row.label.upper() == label.upper():
            return row
    raise ValueError(
        f"no stratum row {label!r} in {_norm_space(space)}; "
        f"have {[r.label for r in space_rows(space)]}"
    )


def verify_table(space: str, samples: int = 50, seed: int = 0) -> list[dict]:
    """Measure isotropy dimension and qcodim on sampled stratum points.

    Returns one report per row with the fraction of samples whose measured
    values match the catalog; exact samplers should give fraction 1.0.
    """
    rows, make_action = _SPACES[_norm_space(space)]
    action = make_action()
    rng = np.random.default_rng(seed)
    out = []
    for row in rows:
        good = 0
        measured = []
        for _ in range(samples):
            v = row.sample(rng)
            iso = isotropy_dim(action, v)
            orbit = action.group_dim - iso
            qcodim = QUOTIENT_DIM - (row.family_dim - orbit)
            measured.append((iso, qcodim))
            if iso == row.isotropy_dim and qcodim == row.qcodim:
                good += 1
        out.append(
            {
                "space": _norm_space(space),
                "row": row.label,
                "condition": row.condition,
                "samples": samples,
                "expected_isotropy_dim": row.isotropy_dim,
                "expected_qcodim": row.qcodim,
                "match_fraction": good / samples,
                "measured_isotropy_dims": sorted({m[0] for m in measured}),
                "measured_qcodims": sorted({m[1] for m in measured}),
            }
        )
    return out


def quotient_coords(v: np.ndarray) -> tuple[float, float, float]:
    """(r1, r2, alpha) coordinates of a quaternionic-side point.

    r1 is the length of the first complex pair, r2 the length of the real
    part of the second pair, alpha the plane angle between v2 and v3 in
    [0, pi]; alpha is -1 when either plane vector vanishes.
    """
    v = np.asarray(v, dtype=float)
    q = np.array([v[0], v[1], v[4], v[5]])
    v2 = np.array([v[2], v[3]])
    v3 = np.array([v[6], v[7]])
    r1 = float(np.linalg.norm(q))
    n2, n3 = np.linalg.norm(v2), np.linalg.norm(v3)
    if n2 < 1e-12 or n3 < 1e-12:
        alpha = -1.0
    else:
        alpha = float(np.arccos(np.clip(v2 @ v3 / (n2 * n3), -1.0, 1.0)))
    return r1, float(n2), alpha


def emit_quotient_coords(samples: int = 50, seed: int = 0) -> list[dict]:
    """Sampled quotient coordinates for every quaternionic-side stratum."""
    rng = np.random.default_rng(seed)
    out = []
    for row in O2_ROWS:
        for _ in range(samples):
            v = row.sample(rng)
            r1, r2, alpha = quotient_coords(v)
            out.append({"r1": r1, "r2": r2, "alpha": alpha, "stratum": row.label})
    return out
