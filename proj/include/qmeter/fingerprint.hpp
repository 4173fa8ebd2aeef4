#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qmeter/circuit.hpp"

namespace qmeter {

// The six Pauli eigenstates |+x>, |-x>, |+y>, |-y>, |+z>, |-z> used as the
// fingerprint set.  delta_max is the largest |<alpha|beta>| over distinct
// pairs, found by exhaustive check (1/sqrt 2 for this set).
struct FingerprintAlphabet {
    std::array<QubitState, 6> states;
    std::array<std::string, 6> labels;
    double delta_max = 0.0;
};

FingerprintAlphabet build_alphabet();

struct RefereeResult {
    double overlap_estimate = 0.0;
    double accept_prob = 0.0;
};

// One referee comparison: the circuit reads |<phi_alpha|phi_beta>|^2 as the
// visibility; the referee declares "equal" on ancilla outcome |0>, which at
// phi = 0 happens with probability (1 + overlap)/2.  The decision rule is
// pinned at the effective phi = 0 convention: settings.phi is ignored, while
// the swap phase gamma (and the readout delta) pass through to the gate.
RefereeResult referee_compare(int alpha_index, int beta_index,
                              const PhaseGateSettings& settings, const NoiseConfig& noise,
                              std::optional<long long> shots, std::uint64_t seed);
RefereeResult referee_compare(int alpha_index, int beta_index, const NoiseConfig& noise = {},
                              std::optional<long long> shots = std::nullopt,
                              std::uint64_t seed = 0);

struct FingerprintReport {
    std::array<std::array<double, 6>, 6> table{};             // overlaps
    std::array<std::array<double, 6>, 6> accept_prob{};
    double max_distinct_overlap = 0.0;
    double one_sided_error = 0.0;   // (1 + max_distinct_overlap)/2
    double classical_error = 1.0;
    double quantum_classical_gap = 0.0;
};

// All 36 combinations, evaluated exhaustively.
FingerprintReport full_report(const PhaseGateSettings& settings, const NoiseConfig& noise,
                              std::optional<long long> shots, std::uint64_t seed);
FingerprintReport full_report(const NoiseConfig& noise = {}, std::optional<long long> shots
                              = std::nullopt, std::uint64_t seed = 0);

// Any classical one-bit fingerprinting with one-sided error fails with
// probability 1; recorded as a constant, not computed over strategies.
double classical_baseline();

// Empirical acceptance rate of the k-round protocol ("reject if any round
// rejects") over seeded single-shot trials.
double amplified_accept_rate(int alpha_index, int beta_index, int rounds, long long trials,
                             const NoiseConfig& noise, std::uint64_t seed);

}  // namespace qmeter
