#include "qmeter/multimeter.hpp"

#include <cmath>
#include <stdexcept>

namespace qmeter {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kTwoPi = 6.283185307179586;

// Comparisons run at the phi = 0 convention, where p0 - p1 is the
// visibility itself.
PhaseGateSettings comparison_settings() {
    return PhaseGateSettings{0.0, 1.5707963267948966, 0.0};
}

}  // namespace

TomographyResult tomography(const QubitState& unknown, const NoiseConfig& noise,
                            std::optional<long long> shots, std::uint64_t seed) {
    static const std::array<BlochVector, 3> probe_axes{
        BlochVector{1.0, 0.0, 0.0}, BlochVector{0.0, 1.0, 0.0}, BlochVector{0.0, 0.0, 1.0}};

    SeededRng rng(seed);
    std::array<double, 3> vis{};
    for (std::size_t i = 0; i < 3; ++i) {
        const QubitState probe = from_bloch(probe_axes[i]);
        vis[i] = measure_visibility(probe, unknown, comparison_settings(), noise, shots, rng);
    }

    BlochVector estimate{2.0 * vis[0] - 1.0, 2.0 * vis[1] - 1.0, 2.0 * vis[2] - 1.0};
    const double len = estimate.norm();
    if (len > 1.0) {
        estimate.rx /= len;
        estimate.ry /= len;
        estimate.rz /= len;
    }

    TomographyResult result{from_bloch(estimate), vis, estimate, std::nullopt};
    result.fidelity_vs_truth = uhlmann_fidelity(unknown, result.reconstructed);
    return result;
}

EigenScanResult eigen_scan(const QubitState& unknown, double theta_step, double phi_step,
                           const NoiseConfig& noise, std::uint64_t seed) {
    if (!(theta_step > 0.0) || !(phi_step > 0.0)) {
        throw std::invalid_argument("eigen_scan: steps must be positive");
    }
    const double theta_count_exact = kPi / theta_step;
    const double phi_count_exact = kTwoPi / phi_step;
    const long theta_count = std::lround(theta_count_exact);
    const long phi_count = std::lround(phi_count_exact);
    if (std::abs(theta_count_exact - static_cast<double>(theta_count)) > 1e-9 ||
        std::abs(phi_count_exact - static_cast<double>(phi_count)) > 1e-9) {
        throw std::invalid_argument("eigen_scan: steps must divide the scan ranges evenly");
    }

    SeededRng rng(seed);
    EigenScanResult result;
    result.grid.reserve(static_cast<std::size_t>((theta_count + 1) * phi_count));

    bool first = true;
    std::array<BlochVector, 2> extremal_probes;
    for (long ti = 0; ti <= theta_count; ++ti) {
        const double theta = static_cast<double>(ti) * theta_step;
        const bool pole = std::abs(std::cos(theta)) > 1.0 - 1e-12;
        double pole_value = 0.0;
        for (long fi = 0; fi < phi_count; ++fi) {
            const double phi = static_cast<double>(fi) * phi_step;
            const BlochVector probe_dir{std::sin(theta) * std::cos(phi),
                                        std::sin(theta) * std::sin(phi), std::cos(theta)};
            double v;
            if (pole && fi > 0) {
                v = pole_value;  // same physical state, one measurement per scan
            } else {
                const QubitState probe = from_bloch(probe_dir);
                v = measure_visibility(probe, unknown, comparison_settings(), noise,
                                       std::nullopt, rng);
                if (pole) pole_value = v;
            }
            result.grid.push_back(
                EigenScanPoint{theta, phi, v, static_cast<int>(ti), static_cast<int>(fi)});

            const EigenScanPoint& point = result.grid.back();
            if (first || point.visibility > result.max_point.visibility) {
                result.max_point = point;
                extremal_probes[0] = probe_dir;
            }
            if (first || point.visibility < result.min_point.visibility) {
                result.min_point = point;
                extremal_probes[1] = probe_dir;
            }
            first = false;
        }
    }

    result.eigenvalues = {result.max_point.visibility, result.min_point.visibility};
    result.eigenvectors = extremal_probes;
    return result;
}

double overlap_experiment(const QubitState& rho_a, const QubitState& rho_b,
                          const PhaseGateSettings& settings, const NoiseConfig& noise,
                          std::optional<long long> shots, std::uint64_t seed) {
    SeededRng rng(seed);
    return overlap_experiment(rho_a, rho_b, settings, noise, shots, rng);
}

double overlap_experiment(const QubitState& rho_a, const QubitState& rho_b,
                          const PhaseGateSettings& settings, const NoiseConfig& noise,
                          std::optional<long long> shots, SeededRng& rng) {
    return measure_visibility(rho_a, rho_b, settings, noise, shots, rng);
}

PurityResult purity_experiment(double eta, const PhaseGateSettings& settings,
                               const NoiseConfig& noise, std::optional<long long> shots,
                               std::uint64_t seed) {
    SeededRng rng(seed);
    return purity_experiment(eta, settings, noise, shots, rng);
}

PurityResult purity_experiment(double eta, const PhaseGateSettings& settings,
                               const NoiseConfig& noise, std::optional<long long> shots,
                               SeededRng& rng) {
    if (!(eta >= 0.0 && eta <= kPi / 2.0 + 1e-12)) {
        throw std::domain_error("purity_experiment: eta must lie in [0, pi/2]");
    }
    const QubitState state = from_bloch(BlochVector{0.0, 0.0, std::cos(eta)});
    const double v = measure_visibility(state, state, settings, noise, shots, rng);
    const double radicand = 2.0 * v - 1.0;
    return PurityResult{v, radicand > 0.0 ? std::sqrt(radicand) : 0.0};
}

}  // namespace qmeter
