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

#include "qrouter/noise.h"

#include <gtest/gtest.h>

#include <random>

#include "qrouter/router.h"
#include "test_util.h"

using namespace qrouter;
using namespace qrouter::testing;

namespace {

// Closed-form channel actions written directly on matrix elements. They share
// nothing with the Kraus path except gate_matrix via circuit_unitary.

int bit_of(Eigen::Index i, int q, int n) { return static_cast<int>((i >> (n - 1 - q)) & 1); }

Matrix depolarize_direct(const Matrix& rho, const std::vector<int>& qs, double p, int n) {
    Eigen::Index mask = 0;
    for (int q : qs) mask |= Eigen::Index{1} << (n - 1 - q);
    const double k = static_cast<double>(1 << qs.size());
    Matrix out = (1 - p) * rho;
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            if ((i & mask) != (j & mask)) continue;
            Complex traced = 0;
            for (Eigen::Index s = 0; s < rho.rows(); ++s) {
                if (s & ~mask) continue;
                traced += rho((i & ~mask) | s, (j & ~mask) | s);
            }
            out(i, j) += p / k * traced;
        }
    return out;
}

Matrix amp_damp_direct(const Matrix& rho, int q, double gamma, int n) {
    Matrix out = rho;
    const Eigen::Index b = Eigen::Index{1} << (n - 1 - q);
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            const int a = bit_of(i, q, n), c = bit_of(j, q, n);
            if (a == 0 && c == 0) out(i, j) = rho(i, j) + gamma * rho(i | b, j | b);
            else if (a == 1 && c == 1) out(i, j) = (1 - gamma) * rho(i, j);
            else out(i, j) = std::sqrt(1 - gamma) * rho(i, j);
        }
    return out;
}

Matrix dephase_direct(const Matrix& rho, int q, double factor, int n) {
    Matrix out = rho;
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
        for (Eigen::Index j = 0; j < rho.cols(); ++j)
            if (bit_of(i, q, n) != bit_of(j, q, n)) out(i, j) *= factor;
    return out;
}

Matrix simulate_direct(const Circuit& c, const NoiseModel& m, const std::vector<int>& rows) {
    const int n = c.n_qubits();
    Matrix rho = Matrix::Zero(1 << n, 1 << n);
    rho(0, 0) = 1;
    for (const auto& inst : c.instructions()) {
        if (inst.kind != InstructionKind::Gate) continue;
        Circuit one(n);
        one.append(inst);
        const Matrix u = circuit_unitary(one);
        rho = u * rho * u.adjoint();
        const bool two = inst.gate == GateKind::CNOT;
        rho = depolarize_direct(rho, inst.qubits, two ? m.p2 : m.p1, n);
        const double t_us = (two ? m.dur_2q_ns : m.dur_1q_ns) / 1000.0;
        for (int q : inst.qubits) {
            const auto& cal = m.device.qubits[static_cast<std::size_t>(rows[static_cast<std::size_t>(q)])];
            rho = amp_damp_direct(rho, q, 1 - std::exp(-t_us / cal.t1_us), n);
            const double rate = std::max(0.0, 1 / cal.t2_us - 1 / (2 * cal.t1_us));
            rho = dephase_direct(rho, q, std::exp(-t_us * rate), n);
        }
    }
    return rho;
}

double overlap(const DensityMatrix& rho, const Vector& psi) { return (psi.adjoint() * rho.entries() * psi)(0, 0).real(); }

}  // namespace

TEST(Device, Ibmqx4TableValues) {
    const auto d = DeviceParams::ibmqx4();
    ASSERT_EQ(d.qubits.size(), 5u);
    const double t1[] = {35.2, 57.5, 36.6, 43.0, 49.5};
    const double t2[] = {38.1, 40.5, 54.8, 42.1, 19.2};
    const double chi[] = {410, 512, 408, 434, 458};
    for (int i = 0; i < 5; ++i) {
        EXPECT_DOUBLE_EQ(d.qubits[i].t1_us, t1[i]);
        EXPECT_DOUBLE_EQ(d.qubits[i].t2_us, t2[i]);
        EXPECT_DOUBLE_EQ(d.qubits[i].chi_khz, chi[i]);
    }
    EXPECT_DOUBLE_EQ(d.qubits[0].resonator_ghz, 6.52396);
    EXPECT_DOUBLE_EQ(d.qubits[3].qubit_ghz, 5.4317);
    EXPECT_DOUBLE_EQ(d.qubits[4].anharmonicity_mhz, -332.5);
    EXPECT_TRUE(d.validate().empty());
}

TEST(Device, Validation) {
    DeviceParams d = DeviceParams::ibmqx4();
    d.qubits[1].t2_us = 2 * d.qubits[1].t1_us + 1;
    EXPECT_EQ(d.validate().size(), 1u);
    d.qubits[2].t1_us = 0;
    EXPECT_THROW(d.validate(), std::invalid_argument);

    NoiseModel m = NoiseModel::ibmqx4();
    m.p2 = 1.5;
    EXPECT_THROW(m.validate(), std::invalid_argument);
    m = NoiseModel::ibmqx4();
    m.dur_1q_ns = -1;
    EXPECT_THROW(m.validate(), std::invalid_argument);
}

TEST(AmplitudeDamping, Examples) {
    const auto id = amplitude_damping(0, 35.2);
    EXPECT_LT(max_abs(id.operators()[0] - Matrix::Identity(2, 2)), 1e-15);

    // One full T1 of q[0].
    const auto ch = amplitude_damping(35200, 35.2);
    const double gamma = 1 - std::exp(-1.0);
    EXPECT_NEAR(std::norm(ch.operators()[1](0, 1)), gamma, 1e-12);
    EXPECT_NEAR(ch.operators()[0](1, 1).real(), std::sqrt(1 - gamma), 1e-12);

    const int q0[] = {0};
    const auto relaxed = apply_channel(to_density(basis_state(1, 1)), amplitude_damping(1e9, 35.2), q0);
    EXPECT_NEAR(relaxed(0, 0).real(), 1.0, 1e-12);

    // gamma = 1 on qubit 1 of |11>.
    const int q1[] = {1};
    const auto out = apply_channel(to_density(basis_state(2, 3)), amplitude_damping(1e12, 1.0), q1);
    EXPECT_LT(max_abs(out.entries() - to_density(basis_state(2, 2)).entries()), 1e-12);

    EXPECT_THROW(amplitude_damping(10, 0), std::invalid_argument);
    EXPECT_THROW(amplitude_damping(-1, 10), std::invalid_argument);
}

TEST(PhaseDamping, Examples) {
    const int q0[] = {0};
    const auto plus = to_density(StateVector(1, plus_ket()));
    EXPECT_LT(max_abs(apply_channel(plus, phase_damping(0, 35.2, 38.1), q0).entries() - plus.entries()), 1e-15);

    // T2 = 2 T1: no pure dephasing.
    EXPECT_LT(max_abs(apply_channel(plus, phase_damping(5000, 10, 20), q0).entries() - plus.entries()), 1e-15);

    // q[4] over 19.2 us.
    const double rate = 1 / 19.2 - 1 / (2 * 49.5);
    const auto out = apply_channel(plus, phase_damping(19200, 49.5, 19.2), q0);
    EXPECT_NEAR(out(0, 1).real(), 0.5 * std::exp(-19.2 * rate), 1e-12);
    EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-15);

    // T2 > 2 T1 clamps to zero rate.
    EXPECT_LT(max_abs(apply_channel(plus, phase_damping(5000, 10, 30), q0).entries() - plus.entries()), 1e-15);
}

TEST(Depolarizing, Examples) {
    const int q0[] = {0};
    const auto zero = to_density(basis_state(1, 0));
    EXPECT_LT(max_abs(apply_channel(zero, depolarizing(0, 1), q0).entries() - zero.entries()), 1e-15);
    const auto mixed = apply_channel(to_density(StateVector(1, signal_ket())), depolarizing(1, 1), q0);
    EXPECT_LT(max_abs(mixed.entries() - Matrix::Identity(2, 2) / 2.0), 1e-15);
    const auto d = apply_channel(zero, depolarizing(0.01, 1), q0);
    EXPECT_NEAR(d(0, 0).real(), 0.995, 1e-15);
    EXPECT_NEAR(d(1, 1).real(), 0.005, 1e-15);
    EXPECT_THROW(depolarizing(1.01, 1), std::invalid_argument);
    EXPECT_THROW(depolarizing(0.1, 3), std::invalid_argument);
    EXPECT_EQ(depolarizing(0.1, 2).operators().size(), 16u);
}

TEST(Depolarizing, NegativityOfBellPairDecreasesWithP) {
    const StateVector bell(2, ket({1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)}));
    const int q1[] = {1};
    double prev = 1;
    for (double p : {0.0, 0.1, 0.2, 0.4, 0.6, 0.8, 1.0}) {
        const auto rho = apply_channel(to_density(bell), depolarizing(p, 1), q1);
        const double n = negativity(rho, {{0}, {1}});
        // The partial transpose of this Werner state has smallest eigenvalue
        // (3p - 2)/4, so the negativity is max(0, (2 - 3p)/4).
        EXPECT_NEAR(n, std::max(0.0, (2 - 3 * p) / 4), 1e-12) << p;
        EXPECT_LE(n, prev + 1e-12);
        prev = n;
    }
}

TEST(Channels, ApplyChannelDimensionMismatch) {
    const int both[] = {0, 1};
    EXPECT_THROW(apply_channel(to_density(basis_state(2, 0)), depolarizing(0.1, 1), both), std::invalid_argument);
    EXPECT_THROW(KrausChannel({Matrix::Identity(2, 2) * 0.5}), std::invalid_argument);
}

TEST(Channels, AllTraceComplete) {
    for (double t : {0.0, 100.0, 400.0, 1e5})
        for (const auto& q : DeviceParams::ibmqx4().qubits) {
            EXPECT_LE(amplitude_damping(t, q.t1_us).completeness_error(), 1e-9);
            EXPECT_LE(phase_damping(t, q.t1_us, q.t2_us).completeness_error(), 1e-9);
        }
    for (double p : {0.0, 1e-3, 1e-2, 0.5, 1.0}) {
        EXPECT_LE(depolarizing(p, 1).completeness_error(), 1e-9);
        EXPECT_LE(depolarizing(p, 2).completeness_error(), 1e-9);
    }
}

TEST(SimulateNoisy, ZeroNoiseMatchesPureState) {
    for (auto name : {kRouterSuperposition, kRouterControl0, kRouterControl1}) {
        const Circuit c = *named_router_circuit(name);
        const auto rho = simulate_noisy(c, NoiseModel::noiseless());
        const auto pure = to_density(apply_circuit(c, basis_state(3, 0)));
        EXPECT_LT(max_abs(rho.entries() - pure.entries()), 1e-9) << name;
    }
}

TEST(SimulateNoisy, SingleXGateDepolarizing) {
    NoiseModel m = NoiseModel::noiseless();
    m.p1 = 1e-3;
    Circuit c(1);
    c.x(0);
    const auto rho = simulate_noisy(c, m);
    EXPECT_NEAR(overlap(rho, one_ket()), 1 - m.p1 / 2, 5e-4);
    EXPECT_NEAR(overlap(rho, one_ket()), 1 - m.p1 / 2, 1e-15);
}

TEST(SimulateNoisy, MatchesDirectFormulaOracle) {
    const NoiseModel m = NoiseModel::ibmqx4();
    const std::vector<int> rows = {2, 0, 1};
    for (auto name : {kRouterSuperposition, kRouterControl0, kRouterControl1}) {
        const Circuit c = *named_router_circuit(name);
        const auto rho = simulate_noisy(c, m, rows);
        EXPECT_LT(max_abs(rho.entries() - simulate_direct(c, m, rows)), 1e-12) << name;
        EXPECT_TRUE(diagnose_density(rho.entries()).ok());
    }
    std::mt19937_64 rng(61);
    const std::vector<int> ident = {0, 1, 2, 3};
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit c = random_circuit(4, 25, rng);
        EXPECT_LT(max_abs(simulate_noisy(c, m).entries() - simulate_direct(c, m, ident)), 1e-12);
    }
}

TEST(SimulateNoisy, DeviceRowsMatter) {
    const Circuit c = *named_router_circuit(kRouterSuperposition);
    const std::vector<int> a = {2, 0, 1}, b = {4, 3, 2};
    const auto ra = simulate_noisy(c, NoiseModel::ibmqx4(), a);
    const auto rb = simulate_noisy(c, NoiseModel::ibmqx4(), b);
    EXPECT_GT(max_abs(ra.entries() - rb.entries()), 1e-6);
    const std::vector<int> short_rows = {0, 1};
    EXPECT_THROW(simulate_noisy(c, NoiseModel::ibmqx4(), short_rows), std::invalid_argument);
}

TEST(NoiseProperties, FidelityMonotoneInScale) {
    const std::vector<int> rows = {2, 0, 1};
    for (auto name : {kRouterSuperposition, kRouterControl0, kRouterControl1}) {
        const Circuit c = *named_router_circuit(name);
        const Vector ideal = apply_circuit(c, basis_state(3, 0)).amplitudes();
        double prev = 1 + 1e-12;
        for (double factor : {0.0, 1.0, 2.0, 4.0}) {
            const double f = overlap(simulate_noisy(c, NoiseModel::ibmqx4().scaled(factor), rows), ideal);
            EXPECT_LE(f, prev) << name << " x" << factor;
            prev = f;
        }
    }
}

TEST(NoiseProperties, RandomCircuitsStayPhysical) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit c = random_circuit(3, 30, rng);
        const auto rho = simulate_noisy(c, NoiseModel::ibmqx4().scaled(1 + trial % 4));
        EXPECT_TRUE(diagnose_density(rho.entries()).ok());
        EXPECT_NEAR(rho.entries().trace().real(), 1.0, 1e-9);
    }
}

TEST(Readout, Examples) {
    const std::vector<double> zero = {1, 0};
    EXPECT_EQ(readout_flip(zero, 0), zero);
    const auto r = readout_flip(zero, 0.02);
    EXPECT_NEAR(r[0], 0.98, 1e-15);
    EXPECT_NEAR(r[1], 0.02, 1e-15);
    const std::vector<double> skewed = {0.3, 0.7};
    const auto u = readout_flip(skewed, 0.5);
    EXPECT_NEAR(u[0], 0.5, 1e-15);
    EXPECT_NEAR(u[1], 0.5, 1e-15);

    // Two qubits: |01> -> 0.98*0.98 on 01, flips independent.
    const std::vector<double> two = {0, 1, 0, 0};
    const auto t = readout_flip(two, 0.1);
    EXPECT_NEAR(t[1], 0.81, 1e-15);
    EXPECT_NEAR(t[0], 0.09, 1e-15);
    EXPECT_NEAR(t[3], 0.09, 1e-15);
    EXPECT_NEAR(t[2], 0.01, 1e-15);

    const std::vector<double> bad = {0.5, 0.2};
    EXPECT_THROW(readout_flip(bad, 0.1), std::invalid_argument);
    EXPECT_THROW(readout_flip(zero, 1.5), std::invalid_argument);
}
