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

#ifndef QROUTER_GATES_H
#define QROUTER_GATES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrouter/qstate.h"

namespace qrouter {

/// The gate set available on the device: H, X, S, S†, T, T† and CNOT.
enum class GateKind { H, X, S, Sdg, T, Tdg, CNOT };

/// Lower-case QASM mnemonic ("h", "sdg", "cx", ...).
std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; nullopt for anything outside the gate set.
std::optional<GateKind> gate_from_name(std::string_view name);
int gate_arity(GateKind kind);

/// 2x2 for single-qubit gates, 4x4 for CNOT with the control as the leading qubit.
Matrix gate_matrix(GateKind kind);

enum class InstructionKind { Gate, Measure, Barrier };

struct Instruction {
    InstructionKind kind = InstructionKind::Gate;
    GateKind gate = GateKind::H;  // meaningful only for Gate
    std::vector<int> qubits;      // CNOT: {control, target}
    int clbit = -1;               // meaningful only for Measure

    bool operator==(const Instruction&) const = default;
};

/// Ordered instruction list over an n-qubit register. Measurement is terminal:
/// once a qubit is measured no further gate may touch it.
class Circuit {
public:
    explicit Circuit(int n_qubits, int n_clbits = 0, std::string name = {});

    int n_qubits() const { return n_qubits_; }
    int n_clbits() const { return n_clbits_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::vector<Instruction>& instructions() const { return instructions_; }
    std::size_t size() const { return instructions_.size(); }
    bool has_measurements() const;

    /// Validates and appends; throws std::invalid_argument on bad operands.
    Circuit& append(const Instruction& inst);
    Circuit& gate(GateKind kind, std::vector<int> qubits);
    Circuit& h(int q) { return gate(GateKind::H, {q}); }
    Circuit& x(int q) { return gate(GateKind::X, {q}); }
    Circuit& s(int q) { return gate(GateKind::S, {q}); }
    Circuit& sdg(int q) { return gate(GateKind::Sdg, {q}); }
    Circuit& t(int q) { return gate(GateKind::T, {q}); }
    Circuit& tdg(int q) { return gate(GateKind::Tdg, {q}); }
    Circuit& cx(int control, int target) { return gate(GateKind::CNOT, {control, target}); }
    Circuit& measure(int qubit, int clbit);
    Circuit& barrier(std::vector<int> qubits);
    /// Appends every instruction of `other` (same register sizes required).
    Circuit& extend(const Circuit& other);

    /// Copy with Measure and Barrier instructions removed.
    Circuit gates_only() const;

    /// Structural equality: register sizes and instruction sequence. The name is ignored.
    bool operator==(const Circuit& other) const {
        return n_qubits_ == other.n_qubits_ && n_clbits_ == other.n_clbits_ &&
               instructions_ == other.instructions_;
    }

private:
    int n_qubits_;
    int n_clbits_;
    std::string name_;
    std::vector<Instruction> instructions_;
    std::vector<bool> measured_;
};

/// Applies each gate in place on the amplitude vector. Throws on Measure or size mismatch.
StateVector apply_circuit(const Circuit& c, const StateVector& psi);

/// Product of the embedded gate unitaries, built by explicit embedding.
Matrix circuit_unitary(const Circuit& c);

}  // namespace qrouter

#endif  // QROUTER_GATES_H
