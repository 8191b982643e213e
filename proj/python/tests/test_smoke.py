import cmath
import math

import numpy as np
import pytest

import mpstates


def test_circle_overlap_single_sum_agrees():
    r = mpstates.circle_total_overlap(0.7, 0.5)
    assert r.agrees()
    assert r.closed_form_value is not None
    assert abs(r.series_value - r.closed_form_value) < 1e-12


def test_termwise_circle_norm_uses_quarter_argument():
    state_even = mpstates.mp2_state(0.6, "even", 40)
    state_odd = mpstates.mp2_state(0.6, "odd", 40)
    total = np.vdot(state_even, state_even).real + np.vdot(state_odd, state_odd).real
    assert total == pytest.approx(mpstates.circle_norm_sq_termwise_closed_form(0.6), rel=1e-13)


def test_algebra():
    rep = mpstates.check_commutators(64)
    assert rep["interior"] <= 1e-12
    assert np.allclose(mpstates.casimir_spectrum(64), -3 / 16, atol=1e-12)
    t1, t2, t3 = mpstates.mp2_generators(16)
    assert t3.shape == (17, 17)
    assert t3[2, 2].real == pytest.approx(-0.5 * 2.5)


def test_coset_state_normalized():
    v = mpstates.coset_state(0.2 + 0.5j, phi=1.0, n_max=400)
    assert np.vdot(v, v).real == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(ValueError):
        mpstates.coset_state(1.0 + 0j)


def test_weak_identity():
    m = mpstates.weak_identity_matrix(1j, 32, 512)
    assert np.allclose(np.diag(m).real, np.exp(-np.arange(33)), atol=1e-10)
    assert np.max(np.abs(m - np.diag(np.diag(m)))) < 1e-12


def test_london_overlap():
    a = mpstates.london_overlap(0.5, 0.0, 0.01)
    b = mpstates.london_overlap_series(0.5, 0.0, 0.01)
    assert abs(a - b) <= 1e-12 * abs(a)
    assert a == pytest.approx(1 / (2 * math.pi * (1 - cmath.exp(0.5j - 0.01))))


def test_geometry():
    g = mpstates.e2_matrix(1.0, 2.0, 3.0)
    assert np.allclose(g @ mpstates.e2_inverse(1.0, 2.0, 3.0), np.eye(3), atol=1e-14)
    assert mpstates.structure_equations_check(1.0, 0.5, -0.2) <= 1e-6
    res = mpstates.field_commutator_check(lambda phi, x, y: x * math.sin(phi), 0.3, 1.0, 2.0)
    assert max(res) <= 1e-5
    plus = mpstates.fiducial_annihilation_check(1.0, 0.5, math.pi / 4, "plus")
    assert plus["coordinate"] == pytest.approx(math.sqrt(2))
    assert abs(plus["field"]) < 1e-15


def test_wigner():
    assert mpstates.exp_integral_Ei(1.0) == pytest.approx(1.8951178163559368, rel=1e-14)
    assert mpstates.wigner_mm_approx(1.0) == pytest.approx(4 * math.exp(-4) * 19.630874470056217)
    w = mpstates.wigner_direct(0.5)
    assert abs(w["imag_part"]) < 1e-8


def test_sweep_and_checks():
    columns, rows = mpstates.sweep("sector-split", 0.1, 0.9, 5, phi_count=4)
    assert len(rows) == 20
    i, j = columns.index("even_abs_sq"), columns.index("odd_abs_sq")
    assert all(row[i] >= row[j] for row in rows)
    with pytest.raises(ValueError):
        mpstates.sweep("nope", 0.1, 0.9, 5)
    assert mpstates.run_check("identity")["failed"] == 0


def test_reconcile():
    tables = mpstates.reconcile()
    assert set(tables) >= {"cylinder_norm_prefactor", "london_sign_convention", "fiducial_branch_residual"}
