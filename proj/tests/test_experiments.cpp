#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qmeter/experiments.hpp"

using namespace qmeter;
using namespace qmeter::cli;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

TEST_CASE("interference CSV: default grid, header, pinned rows") {
    const CommandOutput out = run_command("interference", "", {});
    const auto lines = lines_of(out.csv);
    REQUIRE(lines.size() == 38);  // header + 37 rows at 10-degree steps
    CHECK(lines[0] == "phi_deg,p0_exact,p0_sampled,visibility");

    // phi = 0 (pure pair): p0 = 1; phi = 180: p0 = 0.
    CHECK(fields_of(lines[1])[0] == "0");
    CHECK(fields_of(lines[1])[1] == "1");
    CHECK(fields_of(lines[19])[0] == "180");
    CHECK(fields_of(lines[19])[1] == "0");
    CHECK(out.json.empty());
}

TEST_CASE("interference CSV: mixed pair row value") {
    const std::string config = R"({
      "interference": {
        "state_a": {"bloch": [0, 0, 0.8660254037844387]},
        "state_b": {"bloch": [0, 0, 0.8660254037844387]}
      }
    })";
    const CommandOutput out = run_command("interference", config, {});
    const auto row = fields_of(lines_of(out.csv)[1]);
    CHECK(row[1] == "0.9375");  // (1 + 7/8)/2
    CHECK(row[3] == "0.875");
}

TEST_CASE("purity CSV emits the seven-point grid") {
    const CommandOutput out = run_command("purity", "", {});
    const auto lines = lines_of(out.csv);
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "eta_deg,visibility,extracted_r,expected_r");
    CHECK(fields_of(lines[1])[0] == "0");
    CHECK(fields_of(lines[1])[2] == "1");
    CHECK(fields_of(lines[7])[0] == "90");
    CHECK(fields_of(lines[7])[1] == "0.5");
    CHECK(fields_of(lines[7])[2] == "0");
}

TEST_CASE("eigenscan CSV emits the 13 x 24 grid plus a summary") {
    const CommandOutput out = run_command("eigenscan", "", {});
    const auto lines = lines_of(out.csv);
    REQUIRE(lines.size() == 313);
    CHECK(lines[0] == "theta_deg,phi_deg,visibility");
    CHECK(fields_of(lines[1])[0] == "0");
    CHECK(fields_of(lines[312])[0] == "180");
    CHECK(fields_of(lines[312])[1] == "345");

    CHECK(out.json.find("\"eigenvalues\":[0.853553390593") != std::string::npos);
    CHECK(out.json.find("0.146446609406") != std::string::npos);
}

TEST_CASE("fingerprint emits 36 rows and the exact summary JSON") {
    const CommandOutput out = run_command("fingerprint", "", {});
    const auto lines = lines_of(out.csv);
    REQUIRE(lines.size() == 37);
    CHECK(lines[0] == "alpha,beta,overlap,accept_prob");
    CHECK(fields_of(lines[1])[0] == "+x");
    CHECK(fields_of(lines[1])[1] == "+x");
    CHECK(fields_of(lines[1])[2] == "1");

    CHECK(out.json == R"({"max_distinct_overlap":0.5,"one_sided_error":0.75})");
}

TEST_CASE("tomography outputs three probe rows and a summary") {
    const CommandOutput out = run_command("tomography", "", {});
    const auto lines = lines_of(out.csv);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "probe,visibility,r_estimate");
    CHECK(fields_of(lines[1])[0] == "x");
    CHECK(fields_of(lines[3])[0] == "z");
    CHECK(out.json.find("\"fidelity_vs_truth\":1") != std::string::npos);
}

TEST_CASE("overlap sweep matches the closed formula") {
    const std::string config = R"({"overlap": {"r_a": 1.0, "r_b": 0.5}})";
    const CommandOutput out = run_command("overlap", config, {});
    const auto lines = lines_of(out.csv);
    REQUIRE(lines.size() == 14);  // header + 13 rows (0..180 step 15)
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = fields_of(lines[i]);
        CHECK(f[1] == f[2]);  // measured == expected, noiselessly
    }
}

TEST_CASE("identical config and seed give byte-identical output") {
    const std::string config = R"({"seed": 5, "shots": 200, "noise": {"readout_sigma": 0.01}})";
    const CommandOutput a = run_command("interference", config, {});
    const CommandOutput b = run_command("interference", config, {});
    CHECK(a.csv == b.csv);

    const CommandOutput fa = run_command("fingerprint", config, {});
    const CommandOutput fb = run_command("fingerprint", config, {});
    CHECK(fa.csv == fb.csv);
    CHECK(fa.json == fb.json);
}

TEST_CASE("different seeds give different sampled columns") {
    const std::string c1 = R"({"seed": 1, "shots": 50})";
    const std::string c2 = R"({"seed": 2, "shots": 50})";
    CHECK(run_command("interference", c1, {}).csv !=
          run_command("interference", c2, {}).csv);
}

TEST_CASE("flags override config fields") {
    const std::string config = R"({"seed": 1, "shots": 50})";
    FlagOverrides flags;
    flags.seed = 2;
    const CommandOutput via_flag = run_command("interference", config, flags);
    const CommandOutput direct = run_command("interference", R"({"seed": 2, "shots": 50})", {});
    CHECK(via_flag.csv == direct.csv);
}

TEST_CASE("subcommand sections override top-level fields") {
    const std::string config = R"({"seed": 1, "shots": 50, "interference": {"seed": 9}})";
    const CommandOutput sectioned = run_command("interference", config, {});
    const CommandOutput direct = run_command("interference", R"({"seed": 9, "shots": 50})", {});
    CHECK(sectioned.csv == direct.csv);
}

TEST_CASE("usage errors: malformed config, bad specs, bad ranges") {
    CHECK_THROWS_AS(run_command("interference", "{not json", {}), UsageError);
    CHECK_THROWS_AS(run_command("frobnicate", "", {}), UsageError);
    CHECK_THROWS_AS(
        run_command("interference", R"({"interference": {"state_a": {"weird": 1}}})", {}),
        UsageError);
    CHECK_THROWS_AS(
        run_command("interference", R"({"interference": {"state_a": {"bloch": [1, 1, 1]}}})",
                    {}),
        UsageError);
    CHECK_THROWS_AS(
        run_command("interference", R"({"interference": {"phi_step_deg": -4}})", {}),
        UsageError);
    CHECK_THROWS_AS(run_command("purity", R"({"purity": {"max_n": 9}})", {}), UsageError);
    CHECK_THROWS_AS(run_command("overlap", R"({"overlap": {"r_b": 1.5}})", {}), UsageError);
    CHECK_THROWS_AS(run_command("eigenscan", R"({"eigenscan": {"theta_step_deg": 7}})", {}),
                    UsageError);
    CHECK_THROWS_AS(run_command("interference", R"({"shots": 0})", {}), UsageError);
    CHECK_THROWS_AS(run_command("interference", R"({"noise": {"depolarize_prep": 1.5}})", {}),
                    UsageError);
}

TEST_CASE("gamma flows through to the circuit settings") {
    FlagOverrides flags;
    flags.gamma = 1.0;
    // Diagonal default states are insensitive to gamma; visibility column
    // must stay the ideal one.
    const CommandOutput out = run_command("interference", "", flags);
    const auto row = fields_of(lines_of(out.csv)[1]);
    CHECK(row[3] == "1");

    // An equatorial pair does feel the phase.
    const std::string config = R"({
      "interference": {
        "state_a": {"bloch": [1, 0, 0]},
        "state_b": {"bloch": [1, 0, 0]}
      }
    })";
    const CommandOutput ideal = run_command("interference", config, {});
    const CommandOutput phased = run_command("interference", config, flags);
    CHECK(ideal.csv != phased.csv);
}

TEST_CASE("number formatting is 12 significant digits") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(0.8535533905932737) == "0.853553390593");
    CHECK(format_number(15.0) == "15");
    CHECK(format_number(0.0) == "0");
}

TEST_CASE("recipe serializes to an ordered JSON step list") {
    const PreparedState p = prepare({0.0, 0.0, 0.7071067811865476});
    const std::string j = recipe_to_json(p.recipe);
    CHECK(j.find("\"kind\":\"rotation\"") != std::string::npos);
    CHECK(j.find("\"kind\":\"dephase\"") != std::string::npos);
    CHECK(j.find("\"axis\":[1.0,0.0,0.0]") != std::string::npos);
}
