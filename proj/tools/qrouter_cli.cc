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

// qrouter: run router experiments, export figure data, verify reports.
//
// Exit codes: 0 success, 1 invalid spec, 2 I/O or parse error, 3 unroutable circuit.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qrouter/experiment.h"
#include "qrouter/qasm.h"
#include "qrouter/transpile.h"

namespace {

constexpr int kExitSpec = 1;
constexpr int kExitIo = 2;
constexpr int kExitUnroutable = 3;

std::vector<int> parse_layout(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw qrouter::SpecError("invalid --layout entry '" + item + "'");
        }
    }
    return out;
}

std::filesystem::path counts_path_for(const std::filesystem::path& out) {
    std::filesystem::path p = out;
    p.replace_extension();
    p += ".counts.json";
    return p;
}

int run_command(const qrouter::ExperimentSpec& spec, const std::filesystem::path& out, bool timestamps) {
    const std::string started = timestamps ? qrouter::utc_timestamp() : std::string();
    const qrouter::ExperimentReport report = qrouter::run_experiment(spec);
    const std::string finished = timestamps ? qrouter::utc_timestamp() : std::string();

    const auto counts_path = counts_path_for(out);
    if (report.dataset) {
        qrouter::write_text_file(counts_path, qrouter::dataset_to_json(*report.dataset).dump(2) + "\n");
    }
    const auto doc = qrouter::report_to_json(report, counts_path.filename().string(), started, finished);
    qrouter::write_text_file(out, doc.dump(2) + "\n");

    for (const auto& w : report.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    std::cout << report.spec.experiment << ": fidelity " << report.fidelity << ", negativity "
              << report.negativity << " (" << report.negativity_source << "), control entropy "
              << report.entropy_control_bits << " bits\n";
    std::cout << "report written to " << out.string() << "\n";
    return 0;
}

int emit_figure_command(const std::filesystem::path& report_path, const std::string& part,
                        const std::filesystem::path& out) {
    const auto report = [&] {
        try {
            return qrouter::read_json_file(report_path);
        } catch (const std::runtime_error& e) {
            throw qrouter::InputError(e.what());
        }
    }();
    const auto which = part == "imag" ? qrouter::MatrixPart::Imag : qrouter::MatrixPart::Real;
    qrouter::write_text_file(out, qrouter::emit_figure_data(report, which));
    return 0;
}

int verify_command(const std::filesystem::path& report_path) {
    const auto report = [&] {
        try {
            return qrouter::read_json_file(report_path);
        } catch (const std::runtime_error& e) {
            throw qrouter::InputError(e.what());
        }
    }();
    bool all = true;
    for (const auto& check : qrouter::verify_report(report)) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << "\n";
        all = all && check.passed;
    }
    std::cout << (all ? "all checks passed" : "verification failed") << "\n";
    return all ? 0 : kExitSpec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Controlled-swap quantum router simulator and tomography toolkit"};
    app.require_subcommand(1);

    qrouter::ExperimentSpec spec;
    std::string experiment;
    std::string qasm_file;
    std::string tomography;
    std::string layout;
    std::string out;
    bool no_timestamps = false;

    auto* run = app.add_subcommand("run", "Simulate an experiment, run tomography and write a report");
    auto* exp_opt = run->add_option("--experiment", experiment,
                                    "router-superposition | router-control0 | router-control1");
    auto* qasm_opt = run->add_option("--qasm", qasm_file, "OpenQASM 2.0 circuit file (custom experiment)");
    exp_opt->excludes(qasm_opt);
    run->add_option("--noise", spec.noise, "none | ibmqx4 | device JSON file")->capture_default_str();
    run->add_option("--shots", spec.shots, "Shots per measurement setting")->capture_default_str();
    run->add_option("--seed", spec.seed, "Sampling seed (mt19937_64)")->capture_default_str();
    run->add_option("--tomography", tomography, "full | routed | none (default depends on experiment)");
    run->add_option("--transpile", spec.transpile, "Legalize CNOTs for a coupling map: ibmqx4 | JSON file");
    run->add_option("--layout", layout, "Logical-to-device qubit map, e.g. 2,0,1");
    run->add_flag("--settings-per-observable", spec.settings_per_observable,
                  "Execute one measurement setting per Pauli observable");
    run->add_flag("--no-timestamps", no_timestamps, "Omit timestamps for byte-stable reports");
    run->add_option("--out", out, "Report JSON path")->required();

    std::string report_path;
    std::string part = "real";
    std::string figure_out;
    auto* emit = app.add_subcommand("emit-figure", "Write the real or imaginary part of a reconstruction as CSV");
    emit->add_option("--report", report_path, "Report JSON")->required();
    emit->add_option("--part", part, "real | imag")->check(CLI::IsMember({"real", "imag"}))->capture_default_str();
    emit->add_option("--out", figure_out, "CSV path")->required();

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Re-check a report and print one line per check");
    verify->add_option("--report", verify_path, "Report JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitSpec;
    }

    try {
        if (*run) {
            if (!qasm_file.empty()) {
                spec.qasm_file = qasm_file;
                spec.experiment = "custom";
            } else if (!experiment.empty()) {
                spec.experiment = experiment;
            }
            if (!tomography.empty()) {
                spec.tomography = qrouter::tomography_from_name(tomography);
            }
            if (!layout.empty()) {
                spec.layout = parse_layout(layout);
            }
            return run_command(spec, out, !no_timestamps);
        }
        if (*emit) {
            return emit_figure_command(report_path, part, figure_out);
        }
        return verify_command(verify_path);
    } catch (const qrouter::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const qrouter::UnroutableCnot& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnroutable;
    } catch (const qrouter::qasm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qrouter::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpec;
    }
}
