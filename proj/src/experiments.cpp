#include "qmeter/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "json.hpp"
#include "qmeter/fingerprint.hpp"

namespace qmeter::cli {

namespace {

using nlohmann::json;

constexpr double kPi = 3.141592653589793;

double deg2rad(double deg) {
    return deg * kPi / 180.0;
}

double clamp01(double x) {
    return std::clamp(x, 0.0, 1.0);
}

PhaseGateSettings settings_for(double phi_rad, double gamma) {
    return PhaseGateSettings{phi_rad, 1.5707963267948966, gamma};
}

// Simulated P0 estimate for the interference sweep: depolarize the inputs,
// run the circuit, depolarize the ancilla, take the binomial count when
// shots are requested, and fold the readout perturbation in at the
// probability scale (half the visibility-scale sigma, since v = 2 p0 - 1).
double sampled_p0(const QubitState& a, const QubitState& b, const PhaseGateSettings& s,
                  const NoiseConfig& noise, std::optional<long long> shots, SeededRng& rng) {
    const QubitState pa = noise.depolarize_prep > 0.0 ? depolarize(a, noise.depolarize_prep) : a;
    const QubitState pb = noise.depolarize_prep > 0.0 ? depolarize(b, noise.depolarize_prep) : b;
    ScatteringOutcome out = run_circuit(pa, pb, s);
    double p0 = out.p0;
    if (noise.depolarize_gate > 0.0) {
        p0 = clamp01(depolarize(out.ancilla, noise.depolarize_gate).matrix().at(0, 0).real());
        out.p0 = p0;
        out.p1 = 1.0 - p0;
    }
    if (shots.has_value()) {
        if (*shots < 1) throw UsageError("shots must be >= 1");
        const long long n0 = rng.binomial(*shots, p0);
        p0 = static_cast<double>(n0) / static_cast<double>(*shots);
    }
    if (noise.readout_sigma > 0.0) {
        p0 = clamp01(p0 + rng.normal(0.0, 0.5 * noise.readout_sigma));
    }
    return p0;
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

json bloch_to_json(const BlochVector& b) {
    return json::array({b.rx, b.ry, b.rz});
}

// ---- config handling -------------------------------------------------

BlochVector parse_state_spec(const json& j, const std::string& what) {
    if (j.is_object() && j.contains("bloch")) {
        const json& arr = j.at("bloch");
        if (!arr.is_array() || arr.size() != 3) {
            throw UsageError(what + ": \"bloch\" must be an array of three numbers");
        }
        BlochVector b{arr.at(0).get<double>(), arr.at(1).get<double>(), arr.at(2).get<double>()};
        if (b.norm() > 1.0 + kPhysicalityTolerance) {
            throw UsageError(what + ": Bloch vector longer than 1");
        }
        return b;
    }
    if (j.is_object() && j.contains("r")) {
        const double r = j.at("r").get<double>();
        const double theta = deg2rad(j.value("theta_deg", 90.0));
        const double phi = deg2rad(j.value("phi_deg", 0.0));
        if (!(r >= 0.0 && r <= 1.0)) {
            throw UsageError(what + ": r must lie in [0, 1]");
        }
        return BlochVector{r * std::cos(theta) * std::cos(phi),
                           r * std::cos(theta) * std::sin(phi), r * std::sin(theta)};
    }
    throw UsageError(what + ": unknown state spec (expected {\"bloch\": [x,y,z]} or "
                            "{\"r\": .., \"theta_deg\": .., \"phi_deg\": ..})");
}

void check_probability(double p, const std::string& what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(what + " must lie in [0, 1]");
    }
}

void merge_common(const json& j, CommonOptions& common) {
    if (j.contains("seed")) common.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("shots")) {
        if (j.at("shots").is_null()) {
            common.shots.reset();
        } else {
            const long long s = j.at("shots").get<long long>();
            if (s < 1) throw UsageError("shots must be >= 1");
            common.shots = s;
        }
    }
    if (j.contains("gamma")) common.gamma = j.at("gamma").get<double>();
    if (j.contains("noise")) {
        const json& n = j.at("noise");
        if (n.contains("readout_sigma")) {
            common.noise.readout_sigma = n.at("readout_sigma").get<double>();
            if (common.noise.readout_sigma < 0.0) throw UsageError("readout_sigma must be >= 0");
        }
        if (n.contains("depolarize_prep")) {
            common.noise.depolarize_prep = n.at("depolarize_prep").get<double>();
            check_probability(common.noise.depolarize_prep, "depolarize_prep");
        }
        if (n.contains("depolarize_gate")) {
            common.noise.depolarize_gate = n.at("depolarize_gate").get<double>();
            check_probability(common.noise.depolarize_gate, "depolarize_gate");
        }
    }
}

void apply_flags(const FlagOverrides& flags, CommonOptions& common) {
    if (flags.seed) common.seed = *flags.seed;
    if (flags.shots) {
        if (*flags.shots < 1) throw UsageError("--shots must be >= 1");
        common.shots = *flags.shots;
    }
    if (flags.noise_readout) {
        if (*flags.noise_readout < 0.0) throw UsageError("--noise-readout must be >= 0");
        common.noise.readout_sigma = *flags.noise_readout;
    }
    if (flags.noise_depolarize) {
        check_probability(*flags.noise_depolarize, "--noise-depolarize");
        common.noise.depolarize_prep = *flags.noise_depolarize;
    }
    if (flags.gamma) common.gamma = *flags.gamma;
}

// Sweep validation shared by interference and overlap.
int sweep_count(double start_deg, double stop_deg, double step_deg, const std::string& what) {
    if (!(step_deg > 0.0)) throw UsageError(what + ": step must be positive");
    if (stop_deg < start_deg) throw UsageError(what + ": stop must be >= start");
    const double n = (stop_deg - start_deg) / step_deg;
    const long count = std::lround(n);
    if (std::abs(n - static_cast<double>(count)) > 1e-9) {
        throw UsageError(what + ": step must divide the range evenly");
    }
    return static_cast<int>(count) + 1;
}

}  // namespace

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string recipe_to_json(const PreparationRecipe& recipe) {
    json steps = json::array();
    for (const auto& step : recipe.steps) {
        steps.push_back(
            {{"kind", step.kind == PreparationStep::Kind::Dephase ? "dephase" : "rotation"},
             {"axis", json::array({step.axis[0], step.axis[1], step.axis[2]})},
             {"angle", step.angle}});
    }
    return steps.dump();
}

CommandOutput cmd_interference(const InterferenceConfig& cfg) {
    const int count =
        sweep_count(cfg.phi_start_deg, cfg.phi_stop_deg, cfg.phi_step_deg, "interference");
    const QubitState a = from_bloch(cfg.state_a);
    const QubitState b = from_bloch(cfg.state_b);

    SeededRng rng(cfg.common.seed);
    std::string csv = csv_join({"phi_deg", "p0_exact", "p0_sampled", "visibility"});
    for (int i = 0; i < count; ++i) {
        const double phi_deg = cfg.phi_start_deg + i * cfg.phi_step_deg;
        const PhaseGateSettings s = settings_for(deg2rad(phi_deg), cfg.common.gamma);
        const ScatteringOutcome exact = run_circuit(a, b, s);
        const double p0_sampled =
            sampled_p0(a, b, s, cfg.common.noise, cfg.common.shots, rng);
        csv += csv_join({format_number(phi_deg), format_number(exact.p0),
                         format_number(p0_sampled), format_number(exact.visibility)});
    }
    return CommandOutput{csv, ""};
}

CommandOutput cmd_tomography(const TomographyConfig& cfg) {
    const QubitState unknown = from_bloch(cfg.unknown);
    const TomographyResult result =
        tomography(unknown, cfg.common.noise, cfg.common.shots, cfg.common.seed);

    std::string csv = csv_join({"probe", "visibility", "r_estimate"});
    const char* axes[3] = {"x", "y", "z"};
    const double estimates[3] = {result.bloch_estimate.rx, result.bloch_estimate.ry,
                                 result.bloch_estimate.rz};
    for (int i = 0; i < 3; ++i) {
        csv += csv_join({axes[i], format_number(result.raw_visibilities[i]),
                         format_number(estimates[i])});
    }

    json summary;
    summary["bloch_estimate"] = bloch_to_json(result.bloch_estimate);
    summary["raw_visibilities"] = json::array({result.raw_visibilities[0],
                                               result.raw_visibilities[1],
                                               result.raw_visibilities[2]});
    if (result.fidelity_vs_truth) {
        summary["fidelity_vs_truth"] = *result.fidelity_vs_truth;
    }
    return CommandOutput{csv, summary.dump()};
}

CommandOutput cmd_eigenscan(const EigenScanConfig& cfg) {
    if (!(cfg.theta_step_deg > 0.0) || !(cfg.phi_step_deg > 0.0)) {
        throw UsageError("eigenscan: steps must be positive");
    }
    if (std::abs(std::remainder(180.0, cfg.theta_step_deg)) > 1e-9 ||
        std::abs(std::remainder(360.0, cfg.phi_step_deg)) > 1e-9) {
        throw UsageError("eigenscan: steps must divide the scan ranges evenly");
    }
    const QubitState unknown = from_bloch(cfg.unknown);
    const EigenScanResult result =
        eigen_scan(unknown, deg2rad(cfg.theta_step_deg), deg2rad(cfg.phi_step_deg),
                   cfg.common.noise, cfg.common.seed);

    std::string csv = csv_join({"theta_deg", "phi_deg", "visibility"});
    for (const EigenScanPoint& p : result.grid) {
        csv += csv_join({format_number(p.theta_index * cfg.theta_step_deg),
                         format_number(p.phi_index * cfg.phi_step_deg),
                         format_number(p.visibility)});
    }

    auto point_json = [&](const EigenScanPoint& p) {
        return json{{"theta_deg", p.theta_index * cfg.theta_step_deg},
                    {"phi_deg", p.phi_index * cfg.phi_step_deg},
                    {"visibility", p.visibility}};
    };
    json summary;
    summary["eigenvalues"] = json::array({result.eigenvalues[0], result.eigenvalues[1]});
    summary["max_point"] = point_json(result.max_point);
    summary["min_point"] = point_json(result.min_point);
    summary["eigenvectors"] = json::array(
        {bloch_to_json(result.eigenvectors[0]), bloch_to_json(result.eigenvectors[1])});
    return CommandOutput{csv, summary.dump()};
}

CommandOutput cmd_overlap(const OverlapConfig& cfg) {
    if (!(cfg.r_a >= 0.0 && cfg.r_a <= 1.0) || !(cfg.r_b >= 0.0 && cfg.r_b <= 1.0)) {
        throw UsageError("overlap: purities must lie in [0, 1]");
    }
    const int count =
        sweep_count(cfg.theta_start_deg, cfg.theta_stop_deg, cfg.theta_step_deg, "overlap");

    SeededRng rng(cfg.common.seed);
    const QubitState a = from_bloch(BlochVector{0.0, 0.0, cfg.r_a});
    const PhaseGateSettings s = settings_for(0.0, cfg.common.gamma);

    std::string csv = csv_join({"theta_deg", "overlap", "expected"});
    for (int i = 0; i < count; ++i) {
        const double theta_deg = cfg.theta_start_deg + i * cfg.theta_step_deg;
        const double theta = deg2rad(theta_deg);
        const QubitState b = from_bloch(
            BlochVector{cfg.r_b * std::sin(theta), 0.0, cfg.r_b * std::cos(theta)});
        const double measured =
            overlap_experiment(a, b, s, cfg.common.noise, cfg.common.shots, rng);
        const double expected = 0.5 * (1.0 + cfg.r_a * cfg.r_b * std::cos(theta));
        csv += csv_join({format_number(theta_deg), format_number(measured),
                         format_number(expected)});
    }
    return CommandOutput{csv, ""};
}

CommandOutput cmd_purity(const PurityConfig& cfg) {
    if (cfg.max_n < 0 || cfg.max_n > 6) {
        throw UsageError("purity: max_n must lie in 0..6 (eta = n pi/12 up to pi/2)");
    }
    SeededRng rng(cfg.common.seed);
    const PhaseGateSettings s = settings_for(0.0, cfg.common.gamma);

    std::string csv = csv_join({"eta_deg", "visibility", "extracted_r", "expected_r"});
    for (int n = 0; n <= cfg.max_n; ++n) {
        const double eta = n * kPi / 12.0;
        const PurityResult result =
            purity_experiment(eta, s, cfg.common.noise, cfg.common.shots, rng);
        csv += csv_join({format_number(n * 15.0), format_number(result.visibility),
                         format_number(result.extracted_r), format_number(std::cos(eta))});
    }
    return CommandOutput{csv, ""};
}

CommandOutput cmd_fingerprint(const FingerprintConfig& cfg) {
    const FingerprintReport report =
        full_report(settings_for(0.0, cfg.common.gamma), cfg.common.noise, cfg.common.shots,
                    cfg.common.seed);
    const FingerprintAlphabet alphabet = build_alphabet();

    std::string csv = csv_join({"alpha", "beta", "overlap", "accept_prob"});
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            csv += csv_join({alphabet.labels[i], alphabet.labels[j],
                             format_number(report.table[i][j]),
                             format_number(report.accept_prob[i][j])});
        }
    }

    json summary;
    summary["max_distinct_overlap"] = report.max_distinct_overlap;
    summary["one_sided_error"] = report.one_sided_error;
    return CommandOutput{csv, summary.dump()};
}

CommandOutput run_command(const std::string& subcommand, const std::string& config_text,
                          const FlagOverrides& flags) {
    json doc = json::object();
    if (!config_text.empty()) {
        try {
            doc = json::parse(config_text);
        } catch (const json::exception& e) {
            throw UsageError(std::string("config: ") + e.what());
        }
        if (!doc.is_object()) throw UsageError("config: top level must be a JSON object");
    }

    CommonOptions common;
    try {
        merge_common(doc, common);
        const json section = doc.value(subcommand, json::object());
        if (!section.is_object()) {
            throw UsageError("config: section \"" + subcommand + "\" must be an object");
        }
        merge_common(section, common);
        apply_flags(flags, common);

        if (subcommand == "interference") {
            InterferenceConfig cfg;
            cfg.common = common;
            if (section.contains("state_a"))
                cfg.state_a = parse_state_spec(section.at("state_a"), "state_a");
            if (section.contains("state_b"))
                cfg.state_b = parse_state_spec(section.at("state_b"), "state_b");
            cfg.phi_start_deg = section.value("phi_start_deg", cfg.phi_start_deg);
            cfg.phi_stop_deg = section.value("phi_stop_deg", cfg.phi_stop_deg);
            cfg.phi_step_deg = section.value("phi_step_deg", cfg.phi_step_deg);
            return cmd_interference(cfg);
        }
        if (subcommand == "tomography") {
            TomographyConfig cfg;
            cfg.common = common;
            if (section.contains("unknown"))
                cfg.unknown = parse_state_spec(section.at("unknown"), "unknown");
            return cmd_tomography(cfg);
        }
        if (subcommand == "eigenscan") {
            EigenScanConfig cfg;
            cfg.common = common;
            if (section.contains("unknown"))
                cfg.unknown = parse_state_spec(section.at("unknown"), "unknown");
            cfg.theta_step_deg = section.value("theta_step_deg", cfg.theta_step_deg);
            cfg.phi_step_deg = section.value("phi_step_deg", cfg.phi_step_deg);
            return cmd_eigenscan(cfg);
        }
        if (subcommand == "overlap") {
            OverlapConfig cfg;
            cfg.common = common;
            cfg.r_a = section.value("r_a", cfg.r_a);
            cfg.r_b = section.value("r_b", cfg.r_b);
            cfg.theta_start_deg = section.value("theta_start_deg", cfg.theta_start_deg);
            cfg.theta_stop_deg = section.value("theta_stop_deg", cfg.theta_stop_deg);
            cfg.theta_step_deg = section.value("theta_step_deg", cfg.theta_step_deg);
            return cmd_overlap(cfg);
        }
        if (subcommand == "purity") {
            PurityConfig cfg;
            cfg.common = common;
            cfg.max_n = section.value("max_n", cfg.max_n);
            return cmd_purity(cfg);
        }
        if (subcommand == "fingerprint") {
            FingerprintConfig cfg;
            cfg.common = common;
            return cmd_fingerprint(cfg);
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    throw UsageError("unknown subcommand: " + subcommand);
}

}  // namespace qmeter::cli
