#pragma once

#include <array>

#include "qmeter/complex_matrix.hpp"
#include "qmeter/states.hpp"

namespace qmeter {

// Circuit phase angles.  phi is the interferometer phase of the ancilla
// phase-shift gate; delta selects the readout rotation axis (pi/2 is the
// interference-scan convention); gamma is the extra phase carried by the
// swapped amplitudes of the modified controlled-SWAP (0 = exact gate).
// Angles are stored raw; reduce modulo 2*pi only when reporting.
struct PhaseGateSettings {
    double phi = 0.0;
    double delta = 1.5707963267948966;  // pi/2
    double gamma = 0.0;
};

// (1/sqrt 2) [[1, 1], [1, -1]].
ComplexMatrix hadamard();

// diag(e^{-i phi/2}, e^{+i phi/2}): rotation by phi about z.
ComplexMatrix phase_gate(double phi);

// e^{-i (angle/2) n.sigma} for a unit axis n (checked to 1e-9).
ComplexMatrix rotation(const std::array<double, 3>& axis, double angle);

// Controlled-SWAP on (ancilla, a, b), ancilla most significant.  The
// |0>-control block is the identity; the |1>-control block swaps the two
// targets, with the two swapped-basis amplitudes picking up e^{i gamma}.
ComplexMatrix fredkin(double gamma = 0.0);

// Zeroes the off-diagonal entries: Bloch (rx, ry, rz) -> (0, 0, rz).
QubitState dephase_z(const QubitState& rho);

// (1 - p) rho + p I/2 for p in [0, 1].
QubitState depolarize(const QubitState& rho, double p);

// u rho u^dagger as a validated state.
QubitState apply_unitary(const QubitState& rho, const ComplexMatrix& u);

}  // namespace qmeter
