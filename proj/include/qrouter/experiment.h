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

// End-to-end router experiments: build or load a circuit, optionally
// transpile it for the device, simulate it (ideal and noisy), run shot-based
// tomography and score the reconstruction.

#ifndef QROUTER_EXPERIMENT_H
#define QROUTER_EXPERIMENT_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrouter/json_io.h"
#include "qrouter/qstate.h"
#include "qrouter/tomography.h"

namespace qrouter {

/// Invalid experiment configuration (CLI exit code 1).
class SpecError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable or malformed input file (CLI exit code 2).
class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TomographyKind { Full, Routed, None };

std::string_view tomography_name(TomographyKind kind);
/// "full", "routed" (or "routed-qubit"), "none"; throws SpecError otherwise.
TomographyKind tomography_from_name(std::string_view name);

inline constexpr std::uint64_t kDefaultShots = 8192;
inline constexpr std::uint64_t kDefaultSeed = 2018;

struct ExperimentSpec {
    /// router-superposition, router-control0, router-control1 or custom.
    std::string experiment = "router-superposition";
    /// Circuit source for custom experiments.
    std::optional<std::filesystem::path> qasm_file;
    /// "none", "ibmqx4" or a device JSON path.
    std::string noise = "none";
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = kDefaultSeed;
    /// Unset: routed for the classical-control experiments, full otherwise.
    std::optional<TomographyKind> tomography;
    /// Empty, "ibmqx4" or a coupling-map JSON path.
    std::string transpile;
    /// Logical -> device qubit; empty selects {2,0,1} for 3 qubits, identity otherwise.
    std::vector<int> layout;
    bool settings_per_observable = false;
};

struct ExperimentReport {
    ExperimentSpec spec;  // with defaults resolved
    std::string circuit_qasm;
    std::string transpiled_qasm;  // empty unless transpiled
    StateVector ideal_state;
    DensityMatrix simulated;  // full register after the (possibly noisy) run
    std::optional<DensityMatrix> reconstructed;
    std::optional<TomographyDataset> dataset;
    std::vector<int> tomography_qubits;
    double fidelity = 0.0;
    double negativity = 0.0;
    std::string negativity_source;  // "reconstructed" or "simulated"
    double entropy_control_bits = 0.0;
    std::vector<std::string> warnings;
};

/// Runs the whole pipeline. Throws SpecError, InputError, qasm::ParseError or
/// UnroutableCnot.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Ideal density matrix of the qubits the report's reconstruction covers.
DensityMatrix fidelity_target(const ExperimentReport& report);

/// Report document. Timestamps are included only when given (non-empty).
Json report_to_json(const ExperimentReport& report, const std::string& counts_file,
                    const std::string& started_at = {}, const std::string& finished_at = {});

enum class MatrixPart { Real, Imag };

/// CSV with |b...> basis labels on both axes, values printed round-trip exact.
std::string emit_figure_data(const Matrix& m, MatrixPart part);
/// Uses the report's "reconstructed" matrix; throws SpecError if it is null.
std::string emit_figure_data(const Json& report, MatrixPart part);

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Re-checks a report document: density-matrix invariants, fidelity
/// consistency and band, and the entanglement sign condition. Throws
/// InputError when required fields are missing.
std::vector<VerifyCheck> verify_report(const Json& report);

/// Accepted fidelity band for a report's experiment, noise and tomography.
struct FidelityBand {
    double low;
    double high;
};
FidelityBand fidelity_band(std::string_view experiment, bool noisy, TomographyKind tomography);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace qrouter

#endif  // QROUTER_EXPERIMENT_H
