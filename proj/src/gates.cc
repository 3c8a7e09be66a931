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

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrouter {

namespace {

struct GateInfo {
    GateKind kind;
    std::string_view name;
};

constexpr std::array<GateInfo, 7> kGates = {{
    {GateKind::H, "h"},
    {GateKind::X, "x"},
    {GateKind::S, "s"},
    {GateKind::Sdg, "sdg"},
    {GateKind::T, "t"},
    {GateKind::Tdg, "tdg"},
    {GateKind::CNOT, "cx"},
}};

const Complex kI(0.0, 1.0);

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto& g : kGates) {
        if (g.kind == kind) {
            return g.name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (const auto& g : kGates) {
        if (g.name == name) {
            return g.kind;
        }
    }
    return std::nullopt;
}

int gate_arity(GateKind kind) { return kind == GateKind::CNOT ? 2 : 1; }

Matrix gate_matrix(GateKind kind) {
    using std::numbers::pi;
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m = Matrix::Identity(2, 2);
    switch (kind) {
        case GateKind::H:
            m << r, r, r, -r;
            break;
        case GateKind::X:
            m << 0, 1, 1, 0;
            break;
        case GateKind::S:
            m(1, 1) = kI;
            break;
        case GateKind::Sdg:
            m(1, 1) = -kI;
            break;
        case GateKind::T:
            m(1, 1) = std::polar(1.0, pi / 4);
            break;
        case GateKind::Tdg:
            m(1, 1) = std::polar(1.0, -pi / 4);
            break;
        case GateKind::CNOT:
            m = Matrix::Zero(4, 4);
            m(0, 0) = 1;
            m(1, 1) = 1;
            m(2, 3) = 1;
            m(3, 2) = 1;
            break;
    }
    return m;
}

Circuit::Circuit(int n_qubits, int n_clbits, std::string name)
    : n_qubits_(n_qubits), n_clbits_(n_clbits), name_(std::move(name)) {
    if (n_qubits < 1 || n_clbits < 0) {
        throw std::invalid_argument("Circuit: register sizes must be positive");
    }
    measured_.assign(static_cast<std::size_t>(n_qubits), false);
}

bool Circuit::has_measurements() const {
    for (const auto& inst : instructions_) {
        if (inst.kind == InstructionKind::Measure) {
            return true;
        }
    }
    return false;
}

Circuit& Circuit::append(const Instruction& inst) {
    std::vector<bool> used(static_cast<std::size_t>(n_qubits_), false);
    for (int q : inst.qubits) {
        if (q < 0 || q >= n_qubits_) {
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range [0, " +
                                        std::to_string(n_qubits_) + ")");
        }
        if (used[static_cast<std::size_t>(q)]) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " repeated in one instruction");
        }
        used[static_cast<std::size_t>(q)] = true;
    }
    switch (inst.kind) {
        case InstructionKind::Gate:
            if (static_cast<int>(inst.qubits.size()) != gate_arity(inst.gate)) {
                throw std::invalid_argument(std::string(gate_name(inst.gate)) + " expects " +
                                            std::to_string(gate_arity(inst.gate)) + " operand(s)");
            }
            for (int q : inst.qubits) {
                if (measured_[static_cast<std::size_t>(q)]) {
                    throw std::invalid_argument("gate on qubit " + std::to_string(q) +
                                                " after it was measured");
                }
            }
            break;
        case InstructionKind::Measure:
            if (inst.qubits.size() != 1) {
                throw std::invalid_argument("measure expects exactly one qubit");
            }
            if (inst.clbit < 0 || inst.clbit >= n_clbits_) {
                throw std::invalid_argument("classical bit " + std::to_string(inst.clbit) +
                                            " out of range [0, " + std::to_string(n_clbits_) + ")");
            }
            measured_[static_cast<std::size_t>(inst.qubits[0])] = true;
            break;
        case InstructionKind::Barrier:
            if (inst.qubits.empty()) {
                throw std::invalid_argument("barrier needs at least one qubit");
            }
            break;
    }
    Instruction stored = inst;
    if (stored.kind != InstructionKind::Measure) {
        stored.clbit = -1;
    }
    if (stored.kind != InstructionKind::Gate) {
        stored.gate = GateKind::H;
    }
    instructions_.push_back(std::move(stored));
    return *this;
}

Circuit& Circuit::gate(GateKind kind, std::vector<int> qubits) {
    return append(Instruction{InstructionKind::Gate, kind, std::move(qubits), -1});
}

Circuit& Circuit::measure(int qubit, int clbit) {
    return append(Instruction{InstructionKind::Measure, GateKind::H, {qubit}, clbit});
}

Circuit& Circuit::barrier(std::vector<int> qubits) {
    return append(Instruction{InstructionKind::Barrier, GateKind::H, std::move(qubits), -1});
}

Circuit& Circuit::extend(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_ || other.n_clbits_ > n_clbits_) {
        throw std::invalid_argument("Circuit::extend: register size mismatch");
    }
    for (const auto& inst : other.instructions_) {
        append(inst);
    }
    return *this;
}

Circuit Circuit::gates_only() const {
    Circuit out(n_qubits_, n_clbits_, name_);
    for (const auto& inst : instructions_) {
        if (inst.kind == InstructionKind::Gate) {
            out.append(inst);
        }
    }
    return out;
}

namespace {

// In-place application of a single-qubit unitary to the target bit.
void apply_1q(Vector& amps, const Matrix& u, int target, int n) {
    const std::size_t stride = std::size_t{1} << bit_position(target, n);
    const auto dim = static_cast<std::size_t>(amps.size());
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & stride) {
            continue;
        }
        const auto i0 = static_cast<Eigen::Index>(i);
        const auto i1 = static_cast<Eigen::Index>(i | stride);
        const Complex a0 = amps(i0);
        const Complex a1 = amps(i1);
        amps(i0) = u(0, 0) * a0 + u(0, 1) * a1;
        amps(i1) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void apply_cnot(Vector& amps, int control, int target, int n) {
    const std::size_t cbit = std::size_t{1} << bit_position(control, n);
    const std::size_t tbit = std::size_t{1} << bit_position(target, n);
    const auto dim = static_cast<std::size_t>(amps.size());
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps(static_cast<Eigen::Index>(i)), amps(static_cast<Eigen::Index>(i | tbit)));
        }
    }
}

}  // namespace

StateVector apply_circuit(const Circuit& c, const StateVector& psi) {
    if (c.n_qubits() != psi.n_qubits()) {
        throw std::invalid_argument("apply_circuit: circuit has " + std::to_string(c.n_qubits()) +
                                    " qubits, state has " + std::to_string(psi.n_qubits()));
    }
    Vector amps = psi.amplitudes();
    for (const auto& inst : c.instructions()) {
        switch (inst.kind) {
            case InstructionKind::Measure:
                throw std::invalid_argument("apply_circuit: measurement is not unitary");
            case InstructionKind::Barrier:
                break;
            case InstructionKind::Gate:
                if (inst.gate == GateKind::CNOT) {
                    apply_cnot(amps, inst.qubits[0], inst.qubits[1], c.n_qubits());
                } else {
                    apply_1q(amps, gate_matrix(inst.gate), inst.qubits[0], c.n_qubits());
                }
                break;
        }
    }
    return StateVector(c.n_qubits(), std::move(amps));
}

Matrix circuit_unitary(const Circuit& c) {
    const auto dim = static_cast<Eigen::Index>(dimension(c.n_qubits()));
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto& inst : c.instructions()) {
        switch (inst.kind) {
            case InstructionKind::Measure:
                throw std::invalid_argument("circuit_unitary: measurement is not unitary");
            case InstructionKind::Barrier:
                break;
            case InstructionKind::Gate:
                u = embed_operator(gate_matrix(inst.gate), inst.qubits, c.n_qubits()) * u;
                break;
        }
    }
    return u;
}

}  // namespace qrouter
