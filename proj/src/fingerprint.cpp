#include "qmeter/fingerprint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmeter {

namespace {

// The decision rule lives at the effective phi = 0 convention regardless of
// the caller's phi; delta and the swap phase gamma pass through.
PhaseGateSettings referee_settings(const PhaseGateSettings& requested = {}) {
    return PhaseGateSettings{0.0, requested.delta, requested.gamma};
}

const FingerprintAlphabet& alphabet() {
    static const FingerprintAlphabet a = build_alphabet();
    return a;
}

void check_index(int i, const char* name) {
    if (i < 0 || i > 5) {
        throw std::invalid_argument(std::string("fingerprint: ") + name +
                                    " index must lie in 0..5");
    }
}

}  // namespace

FingerprintAlphabet build_alphabet() {
    FingerprintAlphabet a{{from_bloch({1.0, 0.0, 0.0}), from_bloch({-1.0, 0.0, 0.0}),
                           from_bloch({0.0, 1.0, 0.0}), from_bloch({0.0, -1.0, 0.0}),
                           from_bloch({0.0, 0.0, 1.0}), from_bloch({0.0, 0.0, -1.0})},
                          {"+x", "-x", "+y", "-y", "+z", "-z"},
                          0.0};
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (i == j) continue;
            const double inner = std::sqrt(std::max(0.0, overlap(a.states[i], a.states[j])));
            a.delta_max = std::max(a.delta_max, inner);
        }
    }
    return a;
}

RefereeResult referee_compare(int alpha_index, int beta_index,
                              const PhaseGateSettings& settings, const NoiseConfig& noise,
                              std::optional<long long> shots, std::uint64_t seed) {
    check_index(alpha_index, "alpha");
    check_index(beta_index, "beta");
    const FingerprintAlphabet& a = alphabet();
    SeededRng rng(seed);
    const double est = measure_visibility(a.states[alpha_index], a.states[beta_index],
                                          referee_settings(settings), noise, shots, rng);
    return RefereeResult{est, 0.5 * (1.0 + est)};
}

RefereeResult referee_compare(int alpha_index, int beta_index, const NoiseConfig& noise,
                              std::optional<long long> shots, std::uint64_t seed) {
    return referee_compare(alpha_index, beta_index, PhaseGateSettings{}, noise, shots, seed);
}

FingerprintReport full_report(const PhaseGateSettings& settings, const NoiseConfig& noise,
                              std::optional<long long> shots, std::uint64_t seed) {
    FingerprintReport report;
    SeededRng rng(seed);
    const FingerprintAlphabet& a = alphabet();
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const double est = measure_visibility(a.states[i], a.states[j],
                                                  referee_settings(settings), noise, shots,
                                                  rng);
            report.table[i][j] = est;
            report.accept_prob[i][j] = 0.5 * (1.0 + est);
            if (i != j) {
                report.max_distinct_overlap = std::max(report.max_distinct_overlap, est);
            }
        }
    }
    report.one_sided_error = 0.5 * (1.0 + report.max_distinct_overlap);
    report.classical_error = classical_baseline();
    report.quantum_classical_gap = report.classical_error - report.one_sided_error;
    return report;
}

FingerprintReport full_report(const NoiseConfig& noise, std::optional<long long> shots,
                              std::uint64_t seed) {
    return full_report(PhaseGateSettings{}, noise, shots, seed);
}

double classical_baseline() {
    return 1.0;
}

double amplified_accept_rate(int alpha_index, int beta_index, int rounds, long long trials,
                             const NoiseConfig& noise, std::uint64_t seed) {
    check_index(alpha_index, "alpha");
    check_index(beta_index, "beta");
    if (rounds < 1 || trials < 1) {
        throw std::invalid_argument("amplified_accept_rate: rounds and trials must be >= 1");
    }
    const FingerprintAlphabet& a = alphabet();
    SeededRng rng(seed);
    long long accepted = 0;
    for (long long t = 0; t < trials; ++t) {
        bool all_rounds_accept = true;
        for (int round = 0; round < rounds; ++round) {
            // Each round is an independent single-shot comparison; the
            // referee sees |0> with probability (1 + v)/2.
            const double v = measure_visibility(a.states[alpha_index], a.states[beta_index],
                                                referee_settings(), noise, std::nullopt, rng);
            const double p_accept = std::clamp(0.5 * (1.0 + v), 0.0, 1.0);
            if (!rng.bernoulli(p_accept)) {
                all_rounds_accept = false;
                break;
            }
        }
        if (all_rounds_accept) ++accepted;
    }
    return static_cast<double>(accepted) / static_cast<double>(trials);
}

}  // namespace qmeter
