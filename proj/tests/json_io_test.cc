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

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "test_util.h"

using namespace qrouter;
using namespace qrouter::testing;

TEST(DensityJson, RoundTripIsExactThroughText) {
    std::mt19937_64 rng(81);
    for (int n = 1; n <= 3; ++n) {
        const auto rho = random_density(n, rng);
        const Json j = Json::parse(density_to_json(rho).dump());
        EXPECT_EQ(j["n_qubits"], n);
        EXPECT_EQ(density_from_json(j).entries(), rho.entries());
    }
}

TEST(DensityJson, Errors) {
    EXPECT_THROW(matrix_from_json(Json::object()), std::invalid_argument);
    EXPECT_THROW(matrix_from_json(Json{{"entries", {{{1, 0}, {0, 0}}}}}), std::invalid_argument);
    EXPECT_THROW(matrix_from_json(Json{{"entries", {{{1, 0}}}}, {"n_qubits", 2}}), std::invalid_argument);
    // Parses as a matrix, but is not a density matrix.
    const Json bad = {{"entries", {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}}};
    EXPECT_NO_THROW(matrix_from_json(bad));
    EXPECT_THROW(density_from_json(bad), std::invalid_argument);
}

TEST(StateJson, RoundTrip) {
    std::mt19937_64 rng(82);
    const auto psi = random_state(3, rng);
    EXPECT_EQ(vector_from_json(Json::parse(state_to_json(psi).dump())), psi.amplitudes());
    EXPECT_THROW(vector_from_json(Json::array()), std::invalid_argument);
    EXPECT_THROW(vector_from_json(Json{{1, 2, 3}}), std::invalid_argument);
}

TEST(DatasetJson, RoundTripAndSchema) {
    std::mt19937_64 rng(83);
    const auto rho = random_density(2, rng);
    for (auto mode : {SettingMode::Local, SettingMode::PerObservable}) {
        const auto ds = collect_dataset(rho, 128, 9, 0.01, mode);
        const Json j = dataset_to_json(ds);
        EXPECT_EQ(j["shots"], 128);
        EXPECT_EQ(j["seed"], 9);
        EXPECT_EQ(j["generator"], "mt19937_64");
        EXPECT_EQ(j["mode"], mode == SettingMode::Local ? "local" : "per-observable");
        const auto back = dataset_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.counts, ds.counts);
        EXPECT_EQ(back.mode, ds.mode);
        EXPECT_EQ(back.n_qubits, 2);
    }
}

TEST(DatasetJson, RejectsInconsistentCounts) {
    Json j = {{"shots", 10}, {"seed", 1}, {"settings", {{"Z", {{"0", 4}, {"1", 5}}}}}};
    EXPECT_THROW(dataset_from_json(j), std::invalid_argument);
    j["settings"]["Z"]["1"] = 6;
    EXPECT_NO_THROW(dataset_from_json(j));
    j["mode"] = "weird";
    EXPECT_THROW(dataset_from_json(j), std::invalid_argument);
    EXPECT_THROW(dataset_from_json(Json{{"seed", 1}}), std::invalid_argument);
}

TEST(NoiseJson, RoundTripAndDefaults) {
    NoiseModel m = NoiseModel::ibmqx4();
    m.p1 = 2e-3;
    m.dur_2q_ns = 300;
    const auto back = noise_model_from_json(Json::parse(noise_model_to_json(m).dump()));
    EXPECT_EQ(back.p1, 2e-3);
    EXPECT_EQ(back.dur_2q_ns, 300);
    EXPECT_EQ(back.device.qubits.size(), 5u);
    EXPECT_EQ(back.device.qubits[4].t2_us, 19.2);

    const auto partial = noise_model_from_json(Json{{"qubits", {{{"t1_us", 10.0}, {"t2_us", 5.0}}}}, {"p2", 0.05}});
    EXPECT_EQ(partial.device.qubits.size(), 1u);
    EXPECT_EQ(partial.p2, 0.05);
    EXPECT_EQ(partial.p1, 1e-3);
    EXPECT_EQ(partial.p_readout, 0.02);
    EXPECT_THROW(noise_model_from_json(Json{{"qubits", {{{"t1_us", 10.0}}}}}), std::invalid_argument);
}

TEST(CouplingJson, RoundTrip) {
    const auto m = CouplingMap::ibmqx4();
    const auto back = coupling_map_from_json(Json::parse(coupling_map_to_json(m).dump()));
    EXPECT_EQ(back.edges(), m.edges());
    EXPECT_EQ(back.n_qubits(), 5);
    EXPECT_THROW(coupling_map_from_json(Json{{"n_qubits", 2}, {"edges", {{0, 0}}}}), std::invalid_argument);
    EXPECT_THROW(coupling_map_from_json(Json{{"edges", Json::array()}}), std::invalid_argument);
}

TEST(Files, ReadWrite) {
    const auto dir = std::filesystem::temp_directory_path() / "qrouter_json_io_test";
    std::filesystem::create_directories(dir);
    write_text_file(dir / "a.json", "{\"x\": 1}\n");
    EXPECT_EQ(read_json_file(dir / "a.json")["x"], 1);
    write_text_file(dir / "b.json", "{not json");
    EXPECT_THROW(read_json_file(dir / "b.json"), std::runtime_error);
    EXPECT_THROW(read_json_file(dir / "missing.json"), std::runtime_error);
    std::filesystem::remove_all(dir);
}
