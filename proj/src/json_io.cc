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

#include "qrouter/json_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qrouter {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json density_to_json(const DensityMatrix& rho) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            row.push_back(complex_to_json(rho(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return {{"n_qubits", rho.n_qubits()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw std::invalid_argument("density matrix JSON needs an 'entries' array");
    }
    const Json& rows = j["entries"];
    const auto dim = static_cast<Eigen::Index>(rows.size());
    if (dim == 0) {
        throw std::invalid_argument("density matrix JSON has no rows");
    }
    Matrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const Json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw std::invalid_argument("density matrix JSON is not square");
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    if (j.contains("n_qubits") &&
        (!j["n_qubits"].is_number_integer() ||
         dimension(j["n_qubits"].get<int>()) != static_cast<std::size_t>(dim))) {
        throw std::invalid_argument("density matrix JSON: n_qubits does not match entries");
    }
    return m;
}

DensityMatrix density_from_json(const Json& j) {
    Matrix m = matrix_from_json(j);
    const int n = qubits_for_dimension(static_cast<std::size_t>(m.rows()));
    return DensityMatrix(n, std::move(m));
}

Json state_to_json(const StateVector& psi) {
    Json out = Json::array();
    for (std::size_t i = 0; i < psi.size(); ++i) {
        out.push_back(complex_to_json(psi[i]));
    }
    return out;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("expected a nonempty array of [re, im] pairs");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    }
    return v;
}

Json dataset_to_json(const TomographyDataset& ds) {
    Json settings = Json::object();
    for (const auto& [label, outcomes] : ds.counts) {
        Json c = Json::object();
        for (const auto& [bits, count] : outcomes) {
            c[bits] = count;
        }
        settings[label] = std::move(c);
    }
    return {
        {"shots", ds.shots_per_setting},
        {"seed", ds.seed},
        {"generator", ds.generator},
        {"mode", ds.mode == SettingMode::Local ? "local" : "per-observable"},
        {"n_qubits", ds.n_qubits},
        {"settings", std::move(settings)},
    };
}

TomographyDataset dataset_from_json(const Json& j) {
    try {
        TomographyDataset ds;
        ds.shots_per_setting = j.at("shots").get<std::uint64_t>();
        ds.seed = j.at("seed").get<std::uint64_t>();
        ds.generator = j.value("generator", std::string(kGeneratorName));
        const std::string mode = j.value("mode", std::string("local"));
        if (mode == "local") {
            ds.mode = SettingMode::Local;
        } else if (mode == "per-observable") {
            ds.mode = SettingMode::PerObservable;
        } else {
            throw std::invalid_argument("unknown tomography mode '" + mode + "'");
        }
        for (const auto& [label, outcomes] : j.at("settings").items()) {
            auto& c = ds.counts[label];
            for (const auto& [bits, count] : outcomes.items()) {
                c[bits] = count.get<std::uint64_t>();
            }
        }
        if (ds.counts.empty()) {
            throw std::invalid_argument("counts file has no settings");
        }
        ds.n_qubits = j.value("n_qubits", static_cast<int>(ds.counts.begin()->first.size()));
        ds.validate();
        return ds;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("counts JSON: ") + e.what());
    }
}

Json noise_model_to_json(const NoiseModel& model) {
    Json qubits = Json::array();
    for (const auto& q : model.device.qubits) {
        qubits.push_back({
            {"resonator_ghz", q.resonator_ghz},
            {"qubit_ghz", q.qubit_ghz},
            {"anharmonicity_mhz", q.anharmonicity_mhz},
            {"chi_khz", q.chi_khz},
            {"t1_us", q.t1_us},
            {"t2_us", q.t2_us},
        });
    }
    return {
        {"qubits", std::move(qubits)},
        {"p1", model.p1},
        {"p2", model.p2},
        {"p_readout", model.p_readout},
        {"dur_1q_ns", model.dur_1q_ns},
        {"dur_2q_ns", model.dur_2q_ns},
    };
}

NoiseModel noise_model_from_json(const Json& j) {
    try {
        NoiseModel model = NoiseModel::ibmqx4();
        if (j.contains("qubits")) {
            model.device.qubits.clear();
            for (const auto& q : j.at("qubits")) {
                QubitCalibration cal;
                cal.resonator_ghz = q.value("resonator_ghz", 0.0);
                cal.qubit_ghz = q.value("qubit_ghz", 0.0);
                cal.anharmonicity_mhz = q.value("anharmonicity_mhz", 0.0);
                cal.chi_khz = q.value("chi_khz", 0.0);
                cal.t1_us = q.at("t1_us").get<double>();
                cal.t2_us = q.at("t2_us").get<double>();
                model.device.qubits.push_back(cal);
            }
        }
        model.p1 = j.value("p1", model.p1);
        model.p2 = j.value("p2", model.p2);
        model.p_readout = j.value("p_readout", model.p_readout);
        model.dur_1q_ns = j.value("dur_1q_ns", model.dur_1q_ns);
        model.dur_2q_ns = j.value("dur_2q_ns", model.dur_2q_ns);
        return model;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("device JSON: ") + e.what());
    }
}

Json coupling_map_to_json(const CouplingMap& map) {
    Json edges = Json::array();
    for (const auto& [c, t] : map.edges()) {
        edges.push_back({c, t});
    }
    return {{"n_qubits", map.n_qubits()}, {"edges", std::move(edges)}};
}

CouplingMap coupling_map_from_json(const Json& j) {
    try {
        std::set<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("coupling map edges must be [control, target] pairs");
            }
            edges.emplace(e[0].get<int>(), e[1].get<int>());
        }
        return CouplingMap(j.at("n_qubits").get<int>(), std::move(edges));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("coupling map JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace qrouter
