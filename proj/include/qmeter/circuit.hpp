#pragma once

#include <cstdint>
#include <optional>

#include "qmeter/gates.hpp"
#include "qmeter/noise.hpp"
#include "qmeter/rng.hpp"
#include "qmeter/states.hpp"

namespace qmeter {

// Result of one circuit evaluation.  `visibility` is the interference
// contrast Tr[rho_a rho_b] as recovered from the ancilla; `signal` is the
// readout-proportional quantity after the dephase + R_delta(pi/2) readout
// stage (sin(delta) * (p0 - p1); equal to cos(phi) * visibility at the
// delta = pi/2 convention with the exact swap gate).
struct ScatteringOutcome {
    QubitState ancilla;
    double p0 = 0.0;
    double p1 = 0.0;
    double visibility = 0.0;
    double signal = 0.0;
    PhaseGateSettings settings;  // carried so sample() can undo cos(phi)
};

// Finite-statistics layer over an outcome.  `estimate` is the empirical
// visibility (n0 - n1)/shots / cos(phi), clamped to [-1, 1]; `std_error`
// the propagated binomial standard error.
struct ShotResult {
    long long shots = 0;
    long long n0 = 0;
    long long n1 = 0;
    double estimate = 0.0;
    double std_error = 0.0;
};

// Ancilla reduced state straight from the closed form: entries
// [[(1 + cos phi v)/2, i sin phi v / 2], [-i sin phi v / 2, (1 - cos phi v)/2]]
// with v = Tr[rho_a rho_b].  Defined for gamma = 0 only; a nonzero gamma is
// refused rather than silently approximated.
ScatteringOutcome run_closed_form(const QubitState& rho_a, const QubitState& rho_b,
                                  const PhaseGateSettings& settings);

// Full 8x8 route: builds |0><0| (x) rho_a (x) rho_b, conjugates by
// (H (x) I4) (phase (x) I4) fredkin(gamma) (H (x) I4), partial-traces back
// to the ancilla and reads out through the explicit dephase + rotation
// stage.  Independent of the closed form; the two must agree elementwise to
// 1e-12 for gamma = 0.
ScatteringOutcome run_full(const QubitState& rho_a, const QubitState& rho_b,
                           const PhaseGateSettings& settings);

// Closed form when gamma == 0, full route otherwise.
ScatteringOutcome run_circuit(const QubitState& rho_a, const QubitState& rho_b,
                              const PhaseGateSettings& settings);

// Interference contrast recovered from an ancilla reduced state:
// Re(e^{-i phi} ((a00 - a11) + 2 a01)).
double extract_visibility(const QubitState& ancilla, double phi);

// Seeded binomial draw of the ancilla measurement.  Throws when
// |cos(phi)| < 1e-9: the visibility cannot be recovered at phi = pi/2 and
// callers must use the probability fields instead.
ShotResult sample(const ScatteringOutcome& outcome, long long shots, std::uint64_t seed);

// Same draw fed from an already-running stream, for composition inside
// larger seeded experiments.
ShotResult sample(const ScatteringOutcome& outcome, long long shots, SeededRng& rng);

// One complete simulated visibility measurement: depolarize the prepared
// inputs, run the circuit, depolarize the ancilla, then either read the
// exact contrast (shots absent) or estimate it from a finite binomial
// sample, and finally perturb the result by the Gaussian readout noise.
double measure_visibility(const QubitState& rho_a, const QubitState& rho_b,
                          const PhaseGateSettings& settings, const NoiseConfig& noise,
                          std::optional<long long> shots, SeededRng& rng);

}  // namespace qmeter
