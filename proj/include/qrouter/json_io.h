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

// JSON encodings shared by the CLI and its output files. Complex numbers are
// [re, im] pairs; matrices are row-major nested arrays.

#ifndef QROUTER_JSON_IO_H
#define QROUTER_JSON_IO_H

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qrouter/noise.h"
#include "qrouter/qstate.h"
#include "qrouter/tomography.h"
#include "qrouter/transpile.h"

namespace qrouter {

using Json = nlohmann::json;

/// { "n_qubits": k, "entries": [[[re, im], ...], ...] }
Json density_to_json(const DensityMatrix& rho);
/// Reads the entries without checking density-matrix invariants.
Matrix matrix_from_json(const Json& j);
/// Reads and validates; throws std::invalid_argument on any violation.
DensityMatrix density_from_json(const Json& j);

/// [[re, im], ...]
Json state_to_json(const StateVector& psi);
Vector vector_from_json(const Json& j);

/// { "shots": N, "seed": S, "generator": "...", "mode": "local" | "per-observable",
///   "n_qubits": n, "settings": { "XYZ": { "000": count, ... }, ... } }
Json dataset_to_json(const TomographyDataset& ds);
TomographyDataset dataset_from_json(const Json& j);

/// { "qubits": [{ "t1_us": ..., "t2_us": ..., ... }], "p1": ..., "p2": ...,
///   "p_readout": ..., "dur_1q_ns": ..., "dur_2q_ns": ... }
/// Missing scalar fields fall back to the ibmqx4 defaults.
Json noise_model_to_json(const NoiseModel& model);
NoiseModel noise_model_from_json(const Json& j);

/// { "n_qubits": 5, "edges": [[1, 0], ...] }
Json coupling_map_to_json(const CouplingMap& map);
CouplingMap coupling_map_from_json(const Json& j);

/// Throws std::runtime_error when the file cannot be read or is not valid JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qrouter

#endif  // QROUTER_JSON_IO_H
