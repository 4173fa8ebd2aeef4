#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qmeter/multimeter.hpp"
#include "qmeter/prep.hpp"

namespace qmeter::cli {

// Bad flags, malformed config, unknown state specs.  The CLI maps this to
// exit code 2 (std::domain_error maps to exit code 3).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Options shared by every subcommand.  Angles arriving from the CLI or the
// config are in degrees except gamma, which the interface defines in
// radians.
struct CommonOptions {
    std::uint64_t seed = 0;
    std::optional<long long> shots;
    NoiseConfig noise;
    double gamma = 0.0;
};

struct InterferenceConfig {
    CommonOptions common;
    BlochVector state_a{0.0, 0.0, 1.0};
    BlochVector state_b{0.0, 0.0, 1.0};
    double phi_start_deg = 0.0;
    double phi_stop_deg = 360.0;
    double phi_step_deg = 10.0;
};

struct TomographyConfig {
    CommonOptions common;
    BlochVector unknown{0.0, 0.0, 0.7071067811865476};
};

struct EigenScanConfig {
    CommonOptions common;
    BlochVector unknown{0.0, 0.0, 0.7071067811865476};
    double theta_step_deg = 15.0;
    double phi_step_deg = 15.0;
};

struct OverlapConfig {
    CommonOptions common;
    double r_a = 1.0;
    double r_b = 1.0;
    double theta_start_deg = 0.0;
    double theta_stop_deg = 180.0;
    double theta_step_deg = 15.0;
};

struct PurityConfig {
    CommonOptions common;
    int max_n = 6;  // eta = n pi/12 for n = 0..max_n
};

struct FingerprintConfig {
    CommonOptions common;
};

// CSV text plus, for subcommands that produce one, a JSON summary.
struct CommandOutput {
    std::string csv;
    std::string json;
};

CommandOutput cmd_interference(const InterferenceConfig& cfg);
CommandOutput cmd_tomography(const TomographyConfig& cfg);
CommandOutput cmd_eigenscan(const EigenScanConfig& cfg);
CommandOutput cmd_overlap(const OverlapConfig& cfg);
CommandOutput cmd_purity(const PurityConfig& cfg);
CommandOutput cmd_fingerprint(const FingerprintConfig& cfg);

// Values given on the command line; they win over config-file fields.
struct FlagOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<long long> shots;
    std::optional<double> noise_readout;
    std::optional<double> noise_depolarize;
    std::optional<double> gamma;
};

// Parses the config document (empty string = all defaults), applies the
// subcommand's section and the flag overrides, runs the subcommand.
// Precedence: flags > subcommand section > top-level fields > defaults.
CommandOutput run_command(const std::string& subcommand, const std::string& config_text,
                          const FlagOverrides& flags);

// Fixed 12-significant-digit formatting used for every numeric CSV field.
std::string format_number(double value);

// Ordered {kind, axis, angle} list for CLI display of a preparation recipe.
std::string recipe_to_json(const PreparationRecipe& recipe);

}  // namespace qmeter::cli
