// Copyright 2026 The qrouter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrouter/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include "qrouter/noise.h"
#include "qrouter/qasm.h"
#include "qrouter/router.h"
#include "qrouter/transpile.h"

namespace qrouter {

namespace {

constexpr std::string_view kCustom = "custom";

// Entanglement thresholds for the control|paths cut.
constexpr double kSuperpositionMinNegativity = 0.1;
constexpr double kClassicalMaxNegativityExact = 1e-6;
constexpr double kClassicalMaxNegativitySampled = 0.02;
constexpr double kFidelityConsistency = 1e-9;

bool is_named(std::string_view experiment) {
    return experiment == kRouterSuperposition || experiment == kRouterControl0 || experiment == kRouterControl1;
}

bool is_classical_control(std::string_view experiment) {
    return experiment == kRouterControl0 || experiment == kRouterControl1;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json load_json(const std::filesystem::path& path) {
    try {
        return read_json_file(path);
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
}

NoiseModel resolve_noise(const std::string& noise) {
    if (noise == "ibmqx4") {
        return NoiseModel::ibmqx4();
    }
    try {
        return noise_model_from_json(load_json(noise));
    } catch (const std::invalid_argument& e) {
        throw InputError(noise + ": " + e.what());
    }
}

CouplingMap resolve_coupling_map(const std::string& name) {
    if (name == "ibmqx4") {
        return CouplingMap::ibmqx4();
    }
    try {
        return coupling_map_from_json(load_json(name));
    } catch (const std::invalid_argument& e) {
        throw InputError(name + ": " + e.what());
    }
}

ExperimentSpec resolve_defaults(ExperimentSpec spec, int n_qubits) {
    if (!spec.tomography) {
        spec.tomography = is_classical_control(spec.experiment) ? TomographyKind::Routed : TomographyKind::Full;
    }
    if (spec.layout.empty()) {
        if (n_qubits == 3) {
            spec.layout = default_router_layout();
        } else {
            spec.layout.resize(static_cast<std::size_t>(n_qubits));
            std::iota(spec.layout.begin(), spec.layout.end(), 0);
        }
    }
    return spec;
}

Json spec_to_json(const ExperimentSpec& spec) {
    return {
        {"experiment", spec.experiment},
        {"qasm", spec.qasm_file ? Json(spec.qasm_file->generic_string()) : Json(nullptr)},
        {"noise", spec.noise},
        {"shots", spec.shots},
        {"seed", spec.seed},
        {"tomography", std::string(tomography_name(spec.tomography.value_or(TomographyKind::Full)))},
        {"transpile", spec.transpile.empty() ? Json(nullptr) : Json(spec.transpile)},
        {"layout", spec.layout},
        {"settings_per_observable", spec.settings_per_observable},
    };
}

std::string basis_label(std::size_t index, int n) {
    std::string s = "|";
    for (int q = 0; q < n; ++q) {
        s += ((index >> bit_position(q, n)) & 1u) ? '1' : '0';
    }
    return s + "⟩";
}

}  // namespace

std::string_view tomography_name(TomographyKind kind) {
    switch (kind) {
        case TomographyKind::Full: return "full";
        case TomographyKind::Routed: return "routed";
        case TomographyKind::None: return "none";
    }
    return "full";
}

TomographyKind tomography_from_name(std::string_view name) {
    if (name == "full") return TomographyKind::Full;
    if (name == "routed" || name == "routed-qubit") return TomographyKind::Routed;
    if (name == "none") return TomographyKind::None;
    throw SpecError("unknown tomography mode '" + std::string(name) + "'");
}

FidelityBand fidelity_band(std::string_view experiment, bool noisy, TomographyKind tomography) {
    if (!is_named(experiment)) {
        return {0.0, 1.0};
    }
    if (noisy) {
        return tomography == TomographyKind::None ? FidelityBand{0.90, 1.0} : FidelityBand{0.90, 0.995};
    }
    switch (tomography) {
        case TomographyKind::Full: return {0.98, 1.0};
        case TomographyKind::Routed: return {0.99, 1.0};
        case TomographyKind::None: return {1.0 - 1e-9, 1.0};
    }
    return {0.0, 1.0};
}

ExperimentReport run_experiment(const ExperimentSpec& requested) {
    if (requested.shots < 1) {
        throw SpecError("shots must be at least 1");
    }

    // Circuit source.
    std::optional<Circuit> built;
    if (requested.qasm_file) {
        if (is_named(requested.experiment)) {
            throw SpecError("--qasm cannot be combined with a named experiment");
        }
        const std::string text = read_text(*requested.qasm_file);
        built = qasm::parse(text, requested.qasm_file->stem().string());
    } else if (is_named(requested.experiment)) {
        built = named_router_circuit(requested.experiment);
    } else {
        throw SpecError("unknown experiment '" + requested.experiment + "' (custom experiments need --qasm)");
    }
    const Circuit circuit = *built;
    const int n = circuit.n_qubits();
    if (n > 6) {
        throw SpecError("circuits above 6 qubits are not supported for tomography");
    }

    ExperimentSpec spec = resolve_defaults(requested, n);
    if (!requested.qasm_file) {
        spec.qasm_file.reset();
    } else {
        spec.experiment = std::string(kCustom);
    }
    if (*spec.tomography == TomographyKind::Routed && !is_classical_control(spec.experiment)) {
        throw SpecError("routed-qubit tomography applies only to router-control0 and router-control1");
    }
    if (static_cast<int>(spec.layout.size()) != n) {
        throw SpecError("layout has " + std::to_string(spec.layout.size()) + " entries for " + std::to_string(n) +
                        " qubits");
    }
    {
        std::vector<int> sorted = spec.layout;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || (!sorted.empty() && sorted[0] < 0)) {
            throw SpecError("layout must map qubits to distinct non-negative device indices");
        }
    }

    std::vector<std::string> warnings;
    const bool noisy = spec.noise != "none";
    NoiseModel model = NoiseModel::noiseless();
    if (noisy) {
        model = resolve_noise(spec.noise);
        try {
            auto w = model.validate();
            warnings.insert(warnings.end(), w.begin(), w.end());
        } catch (const std::invalid_argument& e) {
            throw InputError(spec.noise + ": " + e.what());
        }
    }

    // Optional device legalization; the simulated circuit is the transpiled
    // one pulled back onto the logical register.
    Circuit to_simulate = circuit.gates_only();
    std::string transpiled_qasm;
    if (!spec.transpile.empty()) {
        const CouplingMap map = resolve_coupling_map(spec.transpile);
        if (n > map.n_qubits()) {
            throw SpecError("circuit has more qubits than the coupling map");
        }
        const Circuit device = [&] {
            try {
                return apply_layout(circuit, spec.layout, map.n_qubits());
            } catch (const std::invalid_argument& e) {
                throw SpecError(e.what());
            }
        }();
        const Circuit legal = transpile(device, map);
        transpiled_qasm = qasm::serialize(legal);
        to_simulate = remove_layout(legal, spec.layout, n).gates_only();
    }

    std::vector<int> rows = spec.layout;
    for (int r : rows) {
        if (noisy && (r < 0 || r >= static_cast<int>(model.device.qubits.size()))) {
            throw SpecError("layout maps onto device qubit " + std::to_string(r) + " which has no calibration row");
        }
    }

    const StateVector ideal = apply_circuit(to_simulate, basis_state(n, 0));
    DensityMatrix simulated = noisy ? simulate_noisy(to_simulate, model, rows) : to_density(ideal);

    ExperimentReport report{
        .spec = spec,
        .circuit_qasm = qasm::serialize(circuit),
        .transpiled_qasm = transpiled_qasm,
        .ideal_state = ideal,
        .simulated = simulated,
        .reconstructed = std::nullopt,
        .dataset = std::nullopt,
        .tomography_qubits = {},
        .negativity_source = "simulated",
        .warnings = warnings,
    };

    const double p_readout = noisy ? model.p_readout : 0.0;
    const SettingMode mode = spec.settings_per_observable ? SettingMode::PerObservable : SettingMode::Local;
    switch (*spec.tomography) {
        case TomographyKind::Full: {
            report.tomography_qubits.resize(static_cast<std::size_t>(n));
            std::iota(report.tomography_qubits.begin(), report.tomography_qubits.end(), 0);
            report.dataset = collect_dataset(simulated, spec.shots, spec.seed, p_readout, mode);
            report.reconstructed = reconstruct(*report.dataset);
            break;
        }
        case TomographyKind::Routed: {
            const int routed = spec.experiment == kRouterControl0 ? kPath1Qubit : kPath2Qubit;
            report.tomography_qubits = {routed};
            const int keep[] = {routed};
            report.dataset = collect_dataset(partial_trace(simulated, keep), spec.shots, spec.seed, p_readout, mode);
            report.reconstructed = reconstruct(*report.dataset);
            break;
        }
        case TomographyKind::None:
            break;
    }

    report.fidelity = fidelity(report.reconstructed ? *report.reconstructed : simulated, fidelity_target(report));

    // Entanglement across control | paths, from the best full-register state available.
    const DensityMatrix& full =
        (report.reconstructed && report.reconstructed->n_qubits() == n) ? *report.reconstructed : simulated;
    report.negativity_source = &full == &simulated ? "simulated" : "reconstructed";
    if (n >= 2) {
        Bipartition cut{{0}, {}};
        for (int q = 1; q < n; ++q) {
            cut.second.push_back(q);
        }
        report.negativity = negativity(full, cut);
        const int control[] = {0};
        report.entropy_control_bits = von_neumann_entropy(partial_trace(full, control));
    }
    return report;
}

DensityMatrix fidelity_target(const ExperimentReport& report) {
    const DensityMatrix ideal = to_density(report.ideal_state);
    if (report.tomography_qubits.empty() ||
        static_cast<int>(report.tomography_qubits.size()) == ideal.n_qubits()) {
        return ideal;
    }
    return partial_trace(ideal, report.tomography_qubits);
}

Json report_to_json(const ExperimentReport& report, const std::string& counts_file, const std::string& started_at,
                    const std::string& finished_at) {
    Json j;
    j["spec"] = spec_to_json(report.spec);
    j["circuit_qasm"] = report.circuit_qasm;
    j["transpiled_qasm"] = report.transpiled_qasm.empty() ? Json(nullptr) : Json(report.transpiled_qasm);
    j["ideal_state"] = state_to_json(report.ideal_state);
    j["simulated"] = density_to_json(report.simulated);
    j["reconstructed"] = report.reconstructed ? density_to_json(*report.reconstructed) : Json(nullptr);
    j["tomography_qubits"] = report.tomography_qubits;
    j["fidelity"] = report.fidelity;
    j["negativity"] = report.negativity;
    j["negativity_source"] = report.negativity_source;
    j["entropy_control_bits"] = report.entropy_control_bits;
    j["seed"] = report.spec.seed;
    j["generator"] = std::string(kGeneratorName);
    j["counts_file"] = report.dataset ? Json(counts_file) : Json(nullptr);
    j["warnings"] = report.warnings;
    if (!started_at.empty()) {
        j["started_at"] = started_at;
    }
    if (!finished_at.empty()) {
        j["finished_at"] = finished_at;
    }
    return j;
}

std::string emit_figure_data(const Matrix& m, MatrixPart part) {
    const int n = qubits_for_dimension(static_cast<std::size_t>(m.rows()));
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "basis";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out << ',' << basis_label(static_cast<std::size_t>(c), n);
    }
    out << '\n';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << basis_label(static_cast<std::size_t>(r), n);
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const double v = part == MatrixPart::Real ? m(r, c).real() : m(r, c).imag();
            out << ',' << v;
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_figure_data(const Json& report, MatrixPart part) {
    if (!report.contains("reconstructed") || report["reconstructed"].is_null()) {
        throw SpecError("report has no reconstructed density matrix (run with tomography enabled)");
    }
    try {
        return emit_figure_data(matrix_from_json(report["reconstructed"]), part);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("reconstructed matrix: ") + e.what());
    }
}

std::vector<VerifyCheck> verify_report(const Json& report) {
    std::vector<VerifyCheck> checks;
    auto add = [&](std::string name, bool passed, std::string detail) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    };
    auto fmt = [](double x) {
        std::ostringstream s;
        s << std::setprecision(6) << x;
        return s.str();
    };

    std::string experiment;
    std::string noise;
    TomographyKind tomo = TomographyKind::Full;
    Matrix state;
    double reported_fidelity = 0.0;
    double reported_negativity = 0.0;
    std::string negativity_source;
    Vector ideal;
    std::vector<int> tomo_qubits;
    try {
        const Json& spec = report.at("spec");
        experiment = spec.at("experiment").get<std::string>();
        noise = spec.at("noise").get<std::string>();
        tomo = tomography_from_name(spec.at("tomography").get<std::string>());
        const bool has_rec = report.contains("reconstructed") && !report["reconstructed"].is_null();
        state = matrix_from_json(has_rec ? report["reconstructed"] : report.at("simulated"));
        reported_fidelity = report.at("fidelity").get<double>();
        reported_negativity = report.at("negativity").get<double>();
        negativity_source = report.value("negativity_source", std::string("reconstructed"));
        ideal = vector_from_json(report.at("ideal_state"));
        tomo_qubits = report.value("tomography_qubits", std::vector<int>{});
    } catch (const Json::exception& e) {
        throw InputError(std::string("report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("report: ") + e.what());
    } catch (const SpecError& e) {
        throw InputError(std::string("report: ") + e.what());
    }

    const DensityDiagnostics diag = diagnose_density(state);
    add("finite", diag.finite, diag.finite ? "all entries finite" : "non-finite entry");
    add("hermitian", diag.finite && diag.hermiticity_error <= kStateTolerance,
        "max |m - m^dagger| = " + fmt(diag.hermiticity_error));
    add("unit-trace", diag.finite && diag.trace_error <= kStateTolerance, "|tr - 1| = " + fmt(diag.trace_error));
    add("positive-semidefinite", diag.finite && diag.min_eigenvalue >= -kPsdTolerance,
        "min eigenvalue = " + fmt(diag.min_eigenvalue));

    // Recompute the fidelity against the ideal state when the matrix is physical.
    if (diag.ok()) {
        try {
            const int n_ideal = qubits_for_dimension(static_cast<std::size_t>(ideal.size()));
            DensityMatrix target = to_density(StateVector(n_ideal, ideal));
            if (!tomo_qubits.empty() && static_cast<int>(tomo_qubits.size()) != n_ideal) {
                target = partial_trace(target, tomo_qubits);
            }
            const DensityMatrix rho(qubits_for_dimension(static_cast<std::size_t>(state.rows())), state);
            const double f = fidelity(rho, target);
            add("fidelity-consistent", std::abs(f - reported_fidelity) <= kFidelityConsistency,
                "recomputed " + fmt(f) + ", reported " + fmt(reported_fidelity));
        } catch (const std::invalid_argument& e) {
            add("fidelity-consistent", false, e.what());
        }
    }

    const FidelityBand band = fidelity_band(experiment, noise != "none", tomo);
    add("fidelity-band", reported_fidelity >= band.low && reported_fidelity <= band.high,
        "fidelity " + fmt(reported_fidelity) + " in [" + fmt(band.low) + ", " + fmt(band.high) + "]");

    if (experiment == kRouterSuperposition) {
        add("entanglement", reported_negativity > kSuperpositionMinNegativity,
            "negativity " + fmt(reported_negativity) + " > " + fmt(kSuperpositionMinNegativity));
    } else if (is_classical_control(experiment)) {
        const double limit =
            negativity_source == "simulated" ? kClassicalMaxNegativityExact : kClassicalMaxNegativitySampled;
        add("no-entanglement", reported_negativity <= limit,
            "negativity " + fmt(reported_negativity) + " <= " + fmt(limit) + " (" + negativity_source + ")");
    }
    return checks;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

}  // namespace qrouter
