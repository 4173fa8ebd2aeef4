#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qmeter/circuit.hpp"

namespace qmeter {

struct TomographyResult {
    QubitState reconstructed;
    std::array<double, 3> raw_visibilities{0.0, 0.0, 0.0};  // vx, vy, vz
    BlochVector bloch_estimate;
    std::optional<double> fidelity_vs_truth;
};

// Three-probe state determination: compare the unknown against (I+sigma_x)/2,
// (I+sigma_y)/2 and (I+sigma_z)/2, read r_alpha = 2 v_alpha - 1 from each
// visibility, and rebuild the state.  Estimates whose Bloch vector leaves
// the unit ball (possible under noise) are radially clamped back onto it.
TomographyResult tomography(const QubitState& unknown, const NoiseConfig& noise,
                            std::optional<long long> shots, std::uint64_t seed);

struct EigenScanPoint {
    double theta = 0.0;  // polar angle from +z, radians
    double phi = 0.0;    // azimuth, radians
    double visibility = 0.0;
    int theta_index = 0;
    int phi_index = 0;
};

struct EigenScanResult {
    std::vector<EigenScanPoint> grid;
    EigenScanPoint max_point;
    EigenScanPoint min_point;
    std::array<double, 2> eigenvalues{0.0, 0.0};  // {max, min}
    std::array<BlochVector, 2> eigenvectors;
};

// Sweeps a pure probe over the whole sphere -- theta in [0, pi], phi in
// [0, 2 pi) -- and records the visibility against the unknown state.  The
// grid extrema estimate the eigenvalues; the probe directions there are the
// eigenvector estimates.  Both poles appear once per phi column; a pole
// state is prepared and measured once per scan and its value is replicated
// across the duplicate rows.  Ties break on first occurrence in (theta
// ascending, phi ascending) order.
EigenScanResult eigen_scan(const QubitState& unknown, double theta_step, double phi_step,
                           const NoiseConfig& noise = {}, std::uint64_t seed = 0);

// Circuit-derived overlap of two states; equals Tr[rho_a rho_b] exactly in
// the noiseless infinite-shot mode.
double overlap_experiment(const QubitState& rho_a, const QubitState& rho_b,
                          const PhaseGateSettings& settings, const NoiseConfig& noise,
                          std::optional<long long> shots, std::uint64_t seed);
double overlap_experiment(const QubitState& rho_a, const QubitState& rho_b,
                          const PhaseGateSettings& settings, const NoiseConfig& noise,
                          std::optional<long long> shots, SeededRng& rng);

struct PurityResult {
    double visibility = 0.0;
    double extracted_r = 0.0;
};

// Feeds the circuit two copies of (I + cos(eta) sigma_z)/2 and extracts the
// purity r = sqrt(2 v - 1) from the measured visibility, clamped at 0 when
// noise drives the radicand negative.
PurityResult purity_experiment(double eta, const PhaseGateSettings& settings,
                               const NoiseConfig& noise, std::optional<long long> shots,
                               std::uint64_t seed);
PurityResult purity_experiment(double eta, const PhaseGateSettings& settings,
                               const NoiseConfig& noise, std::optional<long long> shots,
                               SeededRng& rng);

}  // namespace qmeter
