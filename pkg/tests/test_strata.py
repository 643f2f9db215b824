import numpy as np
import pytest

from orbitspec.strata import (
    O1_ROWS,
    O2_ROWS,
    emit_quotient_coords,
    quotient_coords,
    row_by_label,
    space_action,
    space_rows,
    verify_table,
)


def test_row_counts_and_labels():
    assert [r.label for r in O1_ROWS] == ["A", "B1", "B2", "B3"]
    assert [r.label for r in O2_ROWS] == [
        "A", "B1", "B2", "B3", "C", "D", "E1", "E2", "E3",
    ]


def test_space_lookup_accepts_aliases():
    assert space_rows("o1") is O1_ROWS
    assert space_rows("O2") is O2_ROWS
    assert space_rows(1) is O1_ROWS
    assert space_rows(2) is O2_ROWS
    assert space_action("o1").ambient_dim == 8
    with pytest.raises(ValueError):
        space_rows("o3")


def test_row_by_label():
    row = row_by_label("o2", "D")
    assert row.isotropy_dim == 1
    assert row.qcodim == 3
    with pytest.raises(ValueError):
        row_by_label("o1", "D")


def test_samplers_emit_unit_vectors_meeting_their_conditions():
    rng = np.random.default_rng(0)
    for row in O2_ROWS:
        for _ in range(10):
            v = row.sample(rng)
            assert abs(np.linalg.norm(v) - 1.0) < 1e-12
            q = np.array([v[0], v[1], v[4], v[5]])
            v2, v3 = v[[2, 3]], v[[6, 7]]
            if row.label in {"C", "E1", "E2", "E3"}:
                assert np.linalg.norm(q) < 1e-12
            else:
                assert np.linalg.norm(q) > 1e-3
            if row.label in {"B2", "E2", "D"}:
                assert np.linalg.norm(v3) < 1e-12
            if row.label in {"B3", "E3", "D"}:
                assert np.linalg.norm(v2) < 1e-12
            if row.label in {"B1", "E1"}:
                assert abs(v2[0] * v3[1] - v2[1] * v3[0]) < 1e-12
                assert np.linalg.norm(v2) > 1e-3 and np.linalg.norm(v3) > 1e-3


def test_o1_samplers_meet_their_conditions():
    rng = np.random.default_rng(1)
    for row in O1_ROWS:
        for _ in range(10):
            v = row.sample(rng)
            assert abs(np.linalg.norm(v) - 1.0) < 1e-12
            z1 = v[[0, 1]] + 1j * v[[4, 5]]
            z2 = v[[2, 3]] + 1j * v[[6, 7]]
            if row.label == "B2":
                assert np.linalg.norm(z2) < 1e-12
            if row.label == "B3":
                assert np.linalg.norm(z1) < 1e-12
            if row.label == "B1":
                # first pair is a common complex multiple of the conjugate
                # of the second, which is what a circle isotropy needs
                w = np.conj(z2)
                assert np.abs(z1[0] * w[1] - z1[1] * w[0]) < 1e-12


@pytest.mark.parametrize("space", ["o1", "o2"])
def test_catalog_verifies_exactly(space):
    reports = verify_table(space, samples=30, seed=0)
    for rep in reports:
        assert rep["match_fraction"] == 1.0, rep
        assert rep["measured_isotropy_dims"] == [rep["expected_isotropy_dim"]]
        assert rep["measured_qcodims"] == [rep["expected_qcodim"]]


def test_quotient_coordinate_patterns():
    rng = np.random.default_rng(4)
    expect = {
        "A": lambda r1, r2, a: r1 > 1e-3 and r2 > 1e-3 and 1e-3 < a < np.pi - 1e-3,
        "B1": lambda r1, r2, a: r1 > 1e-3 and min(a, np.pi - a) < 1e-6,
        "B2": lambda r1, r2, a: r1 > 1e-3 and r2 > 1e-3 and a == -1.0,
        "B3": lambda r1, r2, a: r1 > 1e-3 and r2 < 1e-12 and a == -1.0,
        "C": lambda r1, r2, a: r1 < 1e-12 and 1e-3 < a < np.pi - 1e-3,
        "D": lambda r1, r2, a: abs(r1 - 1.0) < 1e-12 and r2 < 1e-12 and a == -1.0,
        "E1": lambda r1, r2, a: r1 < 1e-12 and min(a, np.pi - a) < 1e-6,
        "E2": lambda r1, r2, a: r1 < 1e-12 and abs(r2 - 1.0) < 1e-12 and a == -1.0,
        "E3": lambda r1, r2, a: r1 < 1e-12 and r2 < 1e-12 and a == -1.0,
    }
    for row in O2_ROWS:
        check = expect[row.label]
        for _ in range(20):
            r1, r2, alpha = quotient_coords(row.sample(rng))
            assert check(r1, r2, alpha), (row.label, r1, r2, alpha)


def test_coords_respect_sphere_normalization():
    rng = np.random.default_rng(8)
    v = O2_ROWS[0].sample(rng)
    r1, r2, _ = quotient_coords(v)
    n3 = np.linalg.norm(v[[6, 7]])
    assert abs(r1**2 + r2**2 + n3**2 - 1.0) < 1e-12


def test_emit_quotient_coords_shape():
    out = emit_quotient_coords(samples=5, seed=0)
    assert len(out) == 5 * len(O2_ROWS)
    assert set(out[0]) == {"r1", "r2", "alpha", "stratum"}
    labels = {d["stratum"] for d in out}
    assert labels == {r.label for r in O2_ROWS}
