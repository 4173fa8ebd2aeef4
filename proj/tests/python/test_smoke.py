"""Smoke tests for the compiled qmeter module."""

import json
import math

import numpy as np
import pytest

import qmeter


SQRT2_OVER_2 = math.sqrt(2.0) / 2.0


def test_bloch_round_trip():
    state = qmeter.from_bloch(0.3, -0.2, 0.5)
    b = qmeter.to_bloch(state)
    assert b.rx == pytest.approx(0.3, abs=1e-12)
    assert b.ry == pytest.approx(-0.2, abs=1e-12)
    assert b.rz == pytest.approx(0.5, abs=1e-12)
    assert qmeter.purity_length(state) == pytest.approx(b.norm(), abs=1e-12)


def test_state_from_numpy_matrix():
    rho = np.array([[0.75, 0.0], [0.0, 0.25]], dtype=complex)
    state = qmeter.QubitState(rho)
    assert np.allclose(state.matrix(), rho)
    with pytest.raises(Exception):
        qmeter.QubitState(np.eye(2, dtype=complex))  # trace 2


def test_gates_are_unitary():
    for u in (qmeter.hadamard(), qmeter.phase_gate(0.7), qmeter.fredkin(1.2)):
        n = u.shape[0]
        assert np.allclose(u.conj().T @ u, np.eye(n), atol=1e-12)


def test_full_circuit_matches_closed_form():
    a = qmeter.from_bloch(0.1, 0.4, -0.3)
    b = qmeter.from_bloch(-0.5, 0.2, 0.6)
    settings = qmeter.PhaseGateSettings(phi=0.9)
    full = qmeter.run_full(a, b, settings)
    closed = qmeter.run_closed_form(a, b, settings)
    assert full.p0 == pytest.approx(closed.p0, abs=1e-12)
    assert full.visibility == pytest.approx(closed.visibility, abs=1e-12)
    assert full.visibility == pytest.approx(qmeter.overlap(a, b), abs=1e-12)
    assert np.allclose(full.ancilla.matrix(), closed.ancilla.matrix(), atol=1e-12)


def test_sampling_is_seeded():
    out = qmeter.run_closed_form(
        qmeter.from_bloch(0.0, 0.0, 0.8), qmeter.from_bloch(0.0, 0.0, 0.8),
        qmeter.PhaseGateSettings())
    r1 = qmeter.sample(out, 1000, 42)
    r2 = qmeter.sample(out, 1000, 42)
    assert r1.n0 == r2.n0
    assert r1.estimate == r2.estimate
    assert abs(r1.estimate - out.visibility) < 5 * r1.std_error + 1e-9


def test_prepare_recipe():
    prepared = qmeter.prepare(qmeter.BlochVector(0.0, 0.0, SQRT2_OVER_2))
    assert prepared.recipe.steps[0].angle == pytest.approx(math.pi / 4, abs=1e-12)
    steps = json.loads(prepared.recipe.to_json())
    assert steps[1]["kind"] == "dephase"
    b = qmeter.to_bloch(prepared.state)
    assert b.rz == pytest.approx(SQRT2_OVER_2, abs=1e-10)


def test_tomography_identity():
    truth = qmeter.from_bloch(0.2, -0.1, 0.6)
    result = qmeter.tomography(truth)
    assert result.fidelity_vs_truth == pytest.approx(1.0, abs=1e-10)


def test_eigen_scan_showcase_state():
    unknown = qmeter.from_bloch(0.0, 0.0, SQRT2_OVER_2)
    scan = qmeter.eigen_scan(unknown, math.pi / 12, math.pi / 12)
    assert len(scan.grid) == 312
    assert scan.eigenvalues[0] == pytest.approx(0.5 + SQRT2_OVER_2 / 2, abs=1e-12)
    assert scan.eigenvalues[1] == pytest.approx(0.5 - SQRT2_OVER_2 / 2, abs=1e-12)


def test_purity_experiment_grid():
    for n in range(7):
        eta = n * math.pi / 12
        visibility, extracted_r = qmeter.purity_experiment(eta)
        assert visibility == pytest.approx((1 + math.cos(eta) ** 2) / 2, abs=1e-12)
        assert extracted_r == pytest.approx(math.cos(eta), abs=1e-12)


def test_fingerprint_report():
    report = qmeter.full_report()
    assert report.max_distinct_overlap == pytest.approx(0.5, abs=1e-12)
    assert report.one_sided_error == pytest.approx(0.75, abs=1e-12)
    assert qmeter.classical_baseline() == 1.0
    alphabet = qmeter.build_alphabet()
    assert alphabet.delta_max == pytest.approx(1 / math.sqrt(2), abs=1e-12)


def test_run_command_purity_csv():
    csv_text, _ = qmeter.run_command("purity")
    lines = csv_text.strip().split("\n")
    assert lines[0] == "eta_deg,visibility,extracted_r,expected_r"
    assert len(lines) == 8


def test_run_command_fingerprint_json():
    _, json_text = qmeter.run_command("fingerprint")
    summary = json.loads(json_text)
    assert summary["max_distinct_overlap"] == pytest.approx(0.5)
    assert summary["one_sided_error"] == pytest.approx(0.75)
