#include "qmeter/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmeter/rng.hpp"

namespace qmeter {

namespace {

double clamp01(double x) {
    return std::clamp(x, 0.0, 1.0);
}

// Transverse ancilla readout: dephase, rotate by pi/2 about the
// (cos delta, sin delta, 0) axis, report <sigma_x>.
double readout_signal(const QubitState& ancilla, double delta) {
    const QubitState flat = dephase_z(ancilla);
    const ComplexMatrix rot = rotation({std::cos(delta), std::sin(delta), 0.0}, 1.5707963267948966);
    const QubitState rotated = apply_unitary(flat, rot);
    return trace(matmul(pauli_x(), rotated.matrix())).real();
}

}  // namespace

ScatteringOutcome run_closed_form(const QubitState& rho_a, const QubitState& rho_b,
                                  const PhaseGateSettings& settings) {
    if (settings.gamma != 0.0) {
        throw std::invalid_argument(
            "run_closed_form: defined for gamma = 0 only; use run_full for a phased swap");
    }
    const double v = overlap(rho_a, rho_b);
    const double c = std::cos(settings.phi);
    const double s = std::sin(settings.phi);
    ComplexMatrix anc(2, {Complex{0.5 * (1.0 + c * v), 0.0}, Complex{0.0, 0.5 * s * v},
                          Complex{0.0, -0.5 * s * v}, Complex{0.5 * (1.0 - c * v), 0.0}});
    ScatteringOutcome out{QubitState(std::move(anc)),
                          clamp01(0.5 * (1.0 + c * v)),
                          clamp01(0.5 * (1.0 - c * v)),
                          v,
                          c * v,
                          settings};
    return out;
}

ScatteringOutcome run_full(const QubitState& rho_a, const QubitState& rho_b,
                           const PhaseGateSettings& settings) {
    const ComplexMatrix i4 = ComplexMatrix::identity(4);
    const ComplexMatrix had = kron(hadamard(), i4);
    const ComplexMatrix phase = kron(phase_gate(settings.phi), i4);
    const ComplexMatrix swap = fredkin(settings.gamma);

    const ComplexMatrix u = matmul(matmul(had, phase), matmul(swap, had));

    const ComplexMatrix ancilla_in = from_bloch(BlochVector{0.0, 0.0, 1.0}).matrix();
    const ComplexMatrix rho_in = kron(kron(ancilla_in, rho_a.matrix()), rho_b.matrix());
    const ComplexMatrix rho_out = matmul(matmul(u, rho_in), dagger(u));

    QubitState ancilla(partial_trace_keep_first(rho_out));
    const double p0 = clamp01(ancilla.matrix().at(0, 0).real());
    const double p1 = clamp01(ancilla.matrix().at(1, 1).real());

    ScatteringOutcome out{ancilla,
                          p0,
                          p1,
                          extract_visibility(ancilla, settings.phi),
                          readout_signal(ancilla, settings.delta),
                          settings};
    return out;
}

ScatteringOutcome run_circuit(const QubitState& rho_a, const QubitState& rho_b,
                              const PhaseGateSettings& settings) {
    return settings.gamma == 0.0 ? run_closed_form(rho_a, rho_b, settings)
                                 : run_full(rho_a, rho_b, settings);
}

double extract_visibility(const QubitState& ancilla, double phi) {
    const ComplexMatrix& m = ancilla.matrix();
    const Complex contrast = (m.at(0, 0) - m.at(1, 1)) + 2.0 * m.at(0, 1);
    const Complex unwound = Complex{std::cos(phi), -std::sin(phi)} * contrast;
    return unwound.real();
}

ShotResult sample(const ScatteringOutcome& outcome, long long shots, std::uint64_t seed) {
    SeededRng rng(seed);
    return sample(outcome, shots, rng);
}

ShotResult sample(const ScatteringOutcome& outcome, long long shots, SeededRng& rng) {
    if (shots < 1) {
        throw std::invalid_argument("sample: shots must be >= 1");
    }
    const double cos_phi = std::cos(outcome.settings.phi);
    if (std::abs(cos_phi) < 1e-9) {
        throw std::domain_error(
            "sample: visibility unrecoverable at phi = pi/2; use the probability fields");
    }

    ShotResult r;
    r.shots = shots;
    r.n0 = rng.binomial(shots, outcome.p0);
    r.n1 = shots - r.n0;

    const double diff = static_cast<double>(r.n0 - r.n1) / static_cast<double>(shots);
    r.estimate = std::clamp(diff / cos_phi, -1.0, 1.0);

    const double p_hat = static_cast<double>(r.n0) / static_cast<double>(shots);
    const double se_p = std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) /
                                  static_cast<double>(shots));
    r.std_error = 2.0 * se_p / std::abs(cos_phi);
    return r;
}

double measure_visibility(const QubitState& rho_a, const QubitState& rho_b,
                          const PhaseGateSettings& settings, const NoiseConfig& noise,
                          std::optional<long long> shots, SeededRng& rng) {
    const QubitState a =
        noise.depolarize_prep > 0.0 ? depolarize(rho_a, noise.depolarize_prep) : rho_a;
    const QubitState b =
        noise.depolarize_prep > 0.0 ? depolarize(rho_b, noise.depolarize_prep) : rho_b;

    ScatteringOutcome out = run_circuit(a, b, settings);
    if (noise.depolarize_gate > 0.0) {
        const QubitState blurred = depolarize(out.ancilla, noise.depolarize_gate);
        out.ancilla = blurred;
        out.p0 = clamp01(blurred.matrix().at(0, 0).real());
        out.p1 = clamp01(blurred.matrix().at(1, 1).real());
        out.visibility = extract_visibility(blurred, settings.phi);
    }

    double v = out.visibility;
    if (shots.has_value()) {
        v = sample(out, *shots, rng).estimate;
    }
    if (noise.readout_sigma > 0.0) {
        v += rng.normal(0.0, noise.readout_sigma);
    }
    return v;
}

}  // namespace qmeter
