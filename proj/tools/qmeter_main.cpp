#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmeter/experiments.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qmeter::cli::UsageError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// The JSON summary lands next to the CSV: last extension replaced by
// ".json", or appended when the path has none.
std::string json_sidecar_path(const std::string& out_path) {
    const auto slash = out_path.find_last_of('/');
    const auto dot = out_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return out_path + ".json";
    }
    return out_path.substr(0, dot) + ".json";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw qmeter::cli::UsageError("cannot write output file: " + path);
    }
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qmeter: scattering-circuit quantum multimeter simulator.\n"
        "Each subcommand emits a CSV table (stdout, or --out PATH); tomography,\n"
        "eigenscan and fingerprint also emit a JSON summary (stdout, or PATH with\n"
        "the extension swapped to .json).  Angles are degrees at this boundary\n"
        "except --gamma, which is radians.  Identical config and seed give\n"
        "byte-identical outputs."};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    qmeter::cli::FlagOverrides flags;

    app.add_option("--config", config_path,
                   "JSON config with top-level common fields (seed, shots, gamma, noise)"
                   " and one section per subcommand; flags override config fields");
    app.add_option("--seed", flags.seed, "Random seed (default 0)");
    app.add_option("--shots", flags.shots,
                   "Measurement shots per point; omit for exact (infinite-statistics) mode");
    app.add_option("--noise-readout", flags.noise_readout,
                   "Gaussian sigma added to each measured visibility");
    app.add_option("--noise-depolarize", flags.noise_depolarize,
                   "Depolarizing probability applied to each prepared input state");
    app.add_option("--gamma", flags.gamma,
                   "Extra phase (radians) of the modified controlled-SWAP; 0 = exact gate."
                   " Felt by interference, overlap, purity and fingerprint; tomography and"
                   " eigenscan are defined at the ideal comparison convention");
    app.add_option("--out", out_path, "Write CSV here instead of stdout");

    auto* interference = app.add_subcommand(
        "interference",
        "P0 vs phase-gate angle sweep; columns phi_deg,p0_exact,p0_sampled,visibility."
        " Config keys: state_a, state_b, phi_start_deg, phi_stop_deg, phi_step_deg"
        " (default: two pure +z states, 0..360 step 10)");
    auto* tomography = app.add_subcommand(
        "tomography",
        "Three-probe state determination; columns probe,visibility,r_estimate, plus a"
        " JSON summary with bloch_estimate and fidelity_vs_truth. Config key: unknown");
    auto* eigenscan = app.add_subcommand(
        "eigenscan",
        "Bloch-sphere visibility scan; columns theta_deg,phi_deg,visibility (heat-map"
        " ready), plus a JSON summary with the eigenvalue/eigenvector estimates."
        " Config keys: unknown, theta_step_deg, phi_step_deg (default 15/15)");
    auto* overlap = app.add_subcommand(
        "overlap",
        "Overlap vs mutual angle for fixed purities; columns theta_deg,overlap,expected."
        " Config keys: r_a, r_b, theta_start_deg, theta_stop_deg, theta_step_deg");
    auto* purity = app.add_subcommand(
        "purity",
        "Purity extraction r = sqrt(2v - 1) on the eta = n*pi/12 grid; columns"
        " eta_deg,visibility,extracted_r,expected_r. Config key: max_n (default 6)");
    auto* fingerprint = app.add_subcommand(
        "fingerprint",
        "All 36 fingerprint comparisons; columns alpha,beta,overlap,accept_prob, plus a"
        " JSON summary {max_distinct_overlap, one_sided_error}");

    for (CLI::App* sub : {interference, tomography, eigenscan, overlap, purity, fingerprint}) {
        sub->fallthrough();  // common flags may follow the subcommand name
    }

    CLI11_PARSE(app, argc, argv);

    const CLI::App* chosen = nullptr;
    for (const CLI::App* sub : {interference, tomography, eigenscan, overlap, purity,
                                fingerprint}) {
        if (sub->parsed()) chosen = sub;
    }

    try {
        const std::string config_text = config_path.empty() ? "" : read_file(config_path);
        const qmeter::cli::CommandOutput output =
            qmeter::cli::run_command(chosen->get_name(), config_text, flags);

        if (out_path.empty()) {
            std::cout << output.csv;
            if (!output.json.empty()) {
                std::cout << output.json << '\n';
            }
        } else {
            write_file(out_path, output.csv);
            if (!output.json.empty()) {
                write_file(json_sidecar_path(out_path), output.json + "\n");
            }
        }
    } catch (const qmeter::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
