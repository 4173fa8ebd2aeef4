#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmeter/circuit.hpp"
#include "qmeter/experiments.hpp"
#include "qmeter/fingerprint.hpp"
#include "qmeter/multimeter.hpp"
#include "qmeter/prep.hpp"

namespace py = pybind11;
using namespace qmeter;

namespace {

py::array_t<Complex> matrix_to_numpy(const ComplexMatrix& m) {
    const int n = m.dim();
    py::array_t<Complex> out({n, n});
    auto view = out.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            view(i, j) = m.at(i, j);
        }
    }
    return out;
}

ComplexMatrix numpy_to_matrix(const py::array_t<Complex, py::array::c_style |
                                                             py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) {
        throw py::value_error("expected a square 2-D array");
    }
    const int n = static_cast<int>(arr.shape(0));
    std::vector<Complex> entries(static_cast<std::size_t>(n) * n);
    auto view = arr.unchecked<2>();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries[static_cast<std::size_t>(i) * n + j] = view(i, j);
        }
    }
    return ComplexMatrix(n, std::move(entries));
}

std::optional<long long> opt_shots(const py::object& shots) {
    if (shots.is_none()) return std::nullopt;
    return shots.cast<long long>();
}

py::dict scan_point_dict(const EigenScanPoint& p) {
    py::dict d;
    d["theta"] = p.theta;
    d["phi"] = p.phi;
    d["visibility"] = p.visibility;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Scattering-circuit quantum multimeter simulator";

    py::class_<BlochVector>(m, "BlochVector")
        .def(py::init<double, double, double>(), py::arg("rx") = 0.0, py::arg("ry") = 0.0,
             py::arg("rz") = 0.0)
        .def_readwrite("rx", &BlochVector::rx)
        .def_readwrite("ry", &BlochVector::ry)
        .def_readwrite("rz", &BlochVector::rz)
        .def("norm", &BlochVector::norm)
        .def("__repr__", [](const BlochVector& b) {
            return "BlochVector(" + std::to_string(b.rx) + ", " + std::to_string(b.ry) + ", " +
                   std::to_string(b.rz) + ")";
        });

    py::class_<QubitState>(m, "QubitState")
        .def(py::init([](const py::array_t<Complex, py::array::c_style |
                                                        py::array::forcecast>& arr) {
                 return QubitState(numpy_to_matrix(arr));
             }),
             py::arg("matrix"))
        .def("matrix", [](const QubitState& s) { return matrix_to_numpy(s.matrix()); })
        .def("bloch", [](const QubitState& s) { return to_bloch(s); });

    py::class_<EigenPair>(m, "EigenPair")
        .def_readonly("lambda1", &EigenPair::lambda1)
        .def_readonly("lambda2", &EigenPair::lambda2)
        .def_readonly("axis1", &EigenPair::axis1)
        .def_readonly("axis2", &EigenPair::axis2)
        .def_readonly("degenerate", &EigenPair::degenerate);

    m.def("from_bloch", &from_bloch, py::arg("r"));
    m.def(
        "from_bloch",
        [](double rx, double ry, double rz) { return from_bloch(BlochVector{rx, ry, rz}); },
        py::arg("rx"), py::arg("ry"), py::arg("rz"));
    m.def("to_bloch", &to_bloch, py::arg("rho"));
    m.def("purity_length", &purity_length, py::arg("rho"));
    m.def("eigen", &eigen, py::arg("rho"));
    m.def("uhlmann_fidelity", &uhlmann_fidelity, py::arg("rho"), py::arg("sigma"));
    m.def("overlap", &overlap, py::arg("rho"), py::arg("sigma"));

    m.def("hadamard", [] { return matrix_to_numpy(hadamard()); });
    m.def("phase_gate", [](double phi) { return matrix_to_numpy(phase_gate(phi)); },
          py::arg("phi"));
    m.def(
        "rotation",
        [](const std::array<double, 3>& axis, double angle) {
            return matrix_to_numpy(rotation(axis, angle));
        },
        py::arg("axis"), py::arg("angle"));
    m.def("fredkin", [](double gamma) { return matrix_to_numpy(fredkin(gamma)); },
          py::arg("gamma") = 0.0);
    m.def("dephase_z", &dephase_z, py::arg("rho"));
    m.def("depolarize", &depolarize, py::arg("rho"), py::arg("p"));

    py::class_<PhaseGateSettings>(m, "PhaseGateSettings")
        .def(py::init<double, double, double>(), py::arg("phi") = 0.0,
             py::arg("delta") = 1.5707963267948966, py::arg("gamma") = 0.0)
        .def_readwrite("phi", &PhaseGateSettings::phi)
        .def_readwrite("delta", &PhaseGateSettings::delta)
        .def_readwrite("gamma", &PhaseGateSettings::gamma);

    py::class_<NoiseConfig>(m, "NoiseConfig")
        .def(py::init<double, double, double>(), py::arg("depolarize_prep") = 0.0,
             py::arg("depolarize_gate") = 0.0, py::arg("readout_sigma") = 0.0)
        .def_readwrite("depolarize_prep", &NoiseConfig::depolarize_prep)
        .def_readwrite("depolarize_gate", &NoiseConfig::depolarize_gate)
        .def_readwrite("readout_sigma", &NoiseConfig::readout_sigma);

    py::class_<ScatteringOutcome>(m, "ScatteringOutcome")
        .def_readonly("ancilla", &ScatteringOutcome::ancilla)
        .def_readonly("p0", &ScatteringOutcome::p0)
        .def_readonly("p1", &ScatteringOutcome::p1)
        .def_readonly("visibility", &ScatteringOutcome::visibility)
        .def_readonly("signal", &ScatteringOutcome::signal);

    py::class_<ShotResult>(m, "ShotResult")
        .def_readonly("shots", &ShotResult::shots)
        .def_readonly("n0", &ShotResult::n0)
        .def_readonly("n1", &ShotResult::n1)
        .def_readonly("estimate", &ShotResult::estimate)
        .def_readonly("std_error", &ShotResult::std_error);

    m.def("run_closed_form", &run_closed_form, py::arg("rho_a"), py::arg("rho_b"),
          py::arg("settings") = PhaseGateSettings{});
    m.def("run_full", &run_full, py::arg("rho_a"), py::arg("rho_b"),
          py::arg("settings") = PhaseGateSettings{});
    m.def(
        "sample",
        [](const ScatteringOutcome& outcome, long long shots, std::uint64_t seed) {
            return sample(outcome, shots, seed);
        },
        py::arg("outcome"), py::arg("shots"), py::arg("seed"));

    py::class_<PreparationStep>(m, "PreparationStep")
        .def_property_readonly("kind",
                               [](const PreparationStep& s) {
                                   return s.kind == PreparationStep::Kind::Dephase
                                              ? "dephase"
                                              : "rotation";
                               })
        .def_readonly("axis", &PreparationStep::axis)
        .def_readonly("angle", &PreparationStep::angle);

    py::class_<PreparationRecipe>(m, "PreparationRecipe")
        .def_readonly("steps", &PreparationRecipe::steps)
        .def("to_json", [](const PreparationRecipe& r) { return cli::recipe_to_json(r); });

    py::class_<PreparedState>(m, "PreparedState")
        .def_readonly("state", &PreparedState::state)
        .def_readonly("recipe", &PreparedState::recipe);

    m.def("prepare", &prepare, py::arg("target"));
    m.def("prepare_angles", &prepare_angles, py::arg("r"), py::arg("theta"), py::arg("phi"));

    py::class_<TomographyResult>(m, "TomographyResult")
        .def_readonly("reconstructed", &TomographyResult::reconstructed)
        .def_readonly("raw_visibilities", &TomographyResult::raw_visibilities)
        .def_readonly("bloch_estimate", &TomographyResult::bloch_estimate)
        .def_readonly("fidelity_vs_truth", &TomographyResult::fidelity_vs_truth);

    py::class_<EigenScanResult>(m, "EigenScanResult")
        .def_property_readonly("grid",
                               [](const EigenScanResult& r) {
                                   py::list out;
                                   for (const auto& p : r.grid) out.append(scan_point_dict(p));
                                   return out;
                               })
        .def_property_readonly(
            "max_point", [](const EigenScanResult& r) { return scan_point_dict(r.max_point); })
        .def_property_readonly(
            "min_point", [](const EigenScanResult& r) { return scan_point_dict(r.min_point); })
        .def_readonly("eigenvalues", &EigenScanResult::eigenvalues)
        .def_readonly("eigenvectors", &EigenScanResult::eigenvectors);

    m.def(
        "tomography",
        [](const QubitState& unknown, const NoiseConfig& noise, const py::object& shots,
           std::uint64_t seed) { return tomography(unknown, noise, opt_shots(shots), seed); },
        py::arg("unknown"), py::arg("noise") = NoiseConfig{}, py::arg("shots") = py::none(),
        py::arg("seed") = 0);
    m.def(
        "eigen_scan",
        [](const QubitState& unknown, double theta_step, double phi_step,
           const NoiseConfig& noise, std::uint64_t seed) {
            return eigen_scan(unknown, theta_step, phi_step, noise, seed);
        },
        py::arg("unknown"), py::arg("theta_step"), py::arg("phi_step"),
        py::arg("noise") = NoiseConfig{}, py::arg("seed") = 0);
    m.def(
        "overlap_experiment",
        [](const QubitState& a, const QubitState& b, const PhaseGateSettings& settings,
           const NoiseConfig& noise, const py::object& shots, std::uint64_t seed) {
            return overlap_experiment(a, b, settings, noise, opt_shots(shots), seed);
        },
        py::arg("rho_a"), py::arg("rho_b"), py::arg("settings") = PhaseGateSettings{},
        py::arg("noise") = NoiseConfig{}, py::arg("shots") = py::none(), py::arg("seed") = 0);
    m.def(
        "purity_experiment",
        [](double eta, const PhaseGateSettings& settings, const NoiseConfig& noise,
           const py::object& shots, std::uint64_t seed) {
            const PurityResult r = purity_experiment(eta, settings, noise, opt_shots(shots),
                                                     seed);
            return py::make_tuple(r.visibility, r.extracted_r);
        },
        py::arg("eta"), py::arg("settings") = PhaseGateSettings{},
        py::arg("noise") = NoiseConfig{}, py::arg("shots") = py::none(), py::arg("seed") = 0);

    py::class_<FingerprintAlphabet>(m, "FingerprintAlphabet")
        .def_readonly("states", &FingerprintAlphabet::states)
        .def_readonly("labels", &FingerprintAlphabet::labels)
        .def_readonly("delta_max", &FingerprintAlphabet::delta_max);

    py::class_<FingerprintReport>(m, "FingerprintReport")
        .def_readonly("table", &FingerprintReport::table)
        .def_readonly("accept_prob", &FingerprintReport::accept_prob)
        .def_readonly("max_distinct_overlap", &FingerprintReport::max_distinct_overlap)
        .def_readonly("one_sided_error", &FingerprintReport::one_sided_error)
        .def_readonly("classical_error", &FingerprintReport::classical_error)
        .def_readonly("quantum_classical_gap", &FingerprintReport::quantum_classical_gap);

    m.def("build_alphabet", &build_alphabet);
    m.def(
        "referee_compare",
        [](int alpha, int beta, const PhaseGateSettings& settings, const NoiseConfig& noise,
           const py::object& shots, std::uint64_t seed) {
            const RefereeResult r =
                referee_compare(alpha, beta, settings, noise, opt_shots(shots), seed);
            return py::make_tuple(r.overlap_estimate, r.accept_prob);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("settings") = PhaseGateSettings{},
        py::arg("noise") = NoiseConfig{}, py::arg("shots") = py::none(), py::arg("seed") = 0);
    m.def(
        "full_report",
        [](const PhaseGateSettings& settings, const NoiseConfig& noise,
           const py::object& shots, std::uint64_t seed) {
            return full_report(settings, noise, opt_shots(shots), seed);
        },
        py::arg("settings") = PhaseGateSettings{}, py::arg("noise") = NoiseConfig{},
        py::arg("shots") = py::none(), py::arg("seed") = 0);
    m.def("classical_baseline", &classical_baseline);
    m.def("amplified_accept_rate", &amplified_accept_rate, py::arg("alpha"), py::arg("beta"),
          py::arg("rounds"), py::arg("trials"), py::arg("noise") = NoiseConfig{},
          py::arg("seed") = 0);

    m.def(
        "run_command",
        [](const std::string& subcommand, const std::string& config_text) {
            const cli::CommandOutput out = cli::run_command(subcommand, config_text, {});
            return py::make_tuple(out.csv, out.json);
        },
        py::arg("subcommand"), py::arg("config_text") = "",
        "Run a CLI subcommand in-process; returns (csv, json) text");
}
