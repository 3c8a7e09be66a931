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

#include "qrouter/gates.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"

using namespace qrouter;
using namespace qrouter::testing;

namespace {

constexpr GateKind kAll[] = {GateKind::H, GateKind::X, GateKind::S, GateKind::Sdg,
                             GateKind::T, GateKind::Tdg, GateKind::CNOT};

// Independent single-gate application: loop over basis indices directly.
Vector reference_apply(const Vector& psi, int n, const Instruction& inst) {
    Vector out = Vector::Zero(psi.size());
    const Matrix g = gate_matrix(inst.gate);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (inst.gate == GateKind::CNOT) {
            const int c = n - 1 - inst.qubits[0], t = n - 1 - inst.qubits[1];
            const Eigen::Index j = ((i >> c) & 1) ? (i ^ (Eigen::Index{1} << t)) : i;
            out(j) += psi(i);
        } else {
            const int b = n - 1 - inst.qubits[0];
            const int bit = (i >> b) & 1;
            for (int r = 0; r < 2; ++r) {
                const Eigen::Index j = (i & ~(Eigen::Index{1} << b)) | (Eigen::Index{r} << b);
                out(j) += g(r, bit) * psi(i);
            }
        }
    }
    return out;
}

}  // namespace

TEST(GateMatrix, AllUnitary) {
    for (GateKind k : kAll) {
        const Matrix u = gate_matrix(k);
        EXPECT_LT(max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())), 1e-15) << gate_name(k);
    }
}

TEST(GateMatrix, Relations) {
    const Matrix t = gate_matrix(GateKind::T), s = gate_matrix(GateKind::S);
    EXPECT_LT(max_abs(t * t - s), 1e-15);
    EXPECT_LT(max_abs(s * gate_matrix(GateKind::Sdg) - Matrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs(t * gate_matrix(GateKind::Tdg) - Matrix::Identity(2, 2)), 1e-15);
    const Matrix h = gate_matrix(GateKind::H);
    EXPECT_LT(max_abs(h * h - Matrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs(h * gate_matrix(GateKind::X) * h - (Matrix(2, 2) << 1, 0, 0, -1).finished()), 1e-15);
    EXPECT_NEAR(std::arg(t(1, 1)), pi / 4, 1e-15);
}

TEST(GateMatrix, CnotHasControlAsLeadingQubit) {
    const Matrix cx = gate_matrix(GateKind::CNOT);
    // |10> -> |11>
    EXPECT_EQ(cx(3, 2), Complex(1, 0));
    EXPECT_EQ(cx(2, 3), Complex(1, 0));
    EXPECT_EQ(cx(1, 1), Complex(1, 0));
}

TEST(GateNames, RoundTrip) {
    for (GateKind k : kAll) EXPECT_EQ(gate_from_name(gate_name(k)), k);
    EXPECT_FALSE(gate_from_name("rz").has_value());
    EXPECT_EQ(gate_arity(GateKind::CNOT), 2);
    EXPECT_EQ(gate_arity(GateKind::T), 1);
}

TEST(Circuit, AppendValidation) {
    Circuit c(2, 1);
    EXPECT_THROW(c.h(2), std::invalid_argument);
    EXPECT_THROW(c.h(-1), std::invalid_argument);
    EXPECT_THROW(c.cx(0, 0), std::invalid_argument);
    EXPECT_THROW(c.gate(GateKind::H, {0, 1}), std::invalid_argument);
    EXPECT_THROW(c.gate(GateKind::CNOT, {0}), std::invalid_argument);
    EXPECT_THROW(c.measure(0, 1), std::invalid_argument);
    c.measure(0, 0);
    EXPECT_TRUE(c.has_measurements());
    EXPECT_THROW(c.h(0), std::invalid_argument);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
}

TEST(Circuit, EqualityIgnoresName) {
    Circuit a(2, 0, "a"), b(2, 0, "b");
    a.h(0).cx(0, 1);
    b.h(0).cx(0, 1);
    EXPECT_EQ(a, b);
    b.t(1);
    EXPECT_NE(a, b);
}

TEST(Circuit, GatesOnlyDropsMeasureAndBarrier) {
    Circuit c(2, 2);
    c.h(0).barrier({0, 1}).cx(0, 1).measure(0, 0).measure(1, 1);
    const Circuit g = c.gates_only();
    EXPECT_EQ(g.size(), 2u);
    EXPECT_FALSE(g.has_measurements());
}

TEST(ApplyCircuit, Examples) {
    Circuit bell(2);
    bell.h(0).cx(0, 1);
    const auto out = apply_circuit(bell, basis_state(2, 0));
    EXPECT_LT(max_abs(out.amplitudes() - ket({1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)})), 1e-15);

    Circuit flip(3);
    flip.x(0);
    EXPECT_EQ(apply_circuit(flip, basis_state(3, 0)).amplitudes(), basis_state(3, 4).amplitudes());

    Circuit m(1, 1);
    m.measure(0, 0);
    EXPECT_THROW(apply_circuit(m, basis_state(1, 0)), std::invalid_argument);
    EXPECT_THROW(apply_circuit(flip, basis_state(2, 0)), std::invalid_argument);
}

TEST(ApplyCircuit, BarrierIsNoOp) {
    Circuit c(2);
    c.h(0).barrier({0, 1}).t(1);
    Circuit d(2);
    d.h(0).t(1);
    EXPECT_LT(max_abs(apply_circuit(c, basis_state(2, 0)).amplitudes() - apply_circuit(d, basis_state(2, 0)).amplitudes()),
              1e-15);
}

TEST(GatesProperties, ApplyMatchesIndexLoopReference) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 4;
        const Circuit c = random_circuit(n, 30, rng);
        Vector ref = random_ket(n, rng);
        const StateVector psi(n, ref);
        for (const auto& inst : c.instructions()) ref = reference_apply(ref, n, inst);
        EXPECT_LT(max_abs(apply_circuit(c, psi).amplitudes() - ref), 1e-12);
    }
}

TEST(GatesProperties, UnitaryMatchesApplyAndIsUnitary) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 3;
        const Circuit c = random_circuit(n, 25, rng);
        const Matrix u = circuit_unitary(c);
        EXPECT_LT(max_abs(u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())), 1e-12);
        const auto psi = random_state(n, rng);
        EXPECT_LT(max_abs(apply_circuit(c, psi).amplitudes() - u * psi.amplitudes()), 1e-12);
        EXPECT_NEAR(apply_circuit(c, psi).amplitudes().norm(), 1.0, 1e-12);
    }
}
