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

#include "qrouter/transpile.h"

namespace qrouter {

CouplingMap::CouplingMap(int n_qubits, std::set<std::pair<int, int>> edges)
    : n_qubits_(n_qubits), edges_(std::move(edges)) {
    if (n_qubits < 1) {
        throw std::invalid_argument("CouplingMap: need at least one qubit");
    }
    for (const auto& [c, t] : edges_) {
        if (c < 0 || c >= n_qubits || t < 0 || t >= n_qubits) {
            throw std::invalid_argument("CouplingMap: edge (" + std::to_string(c) + ", " +
                                        std::to_string(t) + ") out of range");
        }
        if (c == t) {
            throw std::invalid_argument("CouplingMap: self-edge on qubit " + std::to_string(c));
        }
    }
}

CouplingMap CouplingMap::ibmqx4() {
    return CouplingMap(5, {{1, 0}, {2, 0}, {2, 1}, {2, 4}, {3, 2}, {3, 4}});
}

UnroutableCnot::UnroutableCnot(int control, int target)
    : std::runtime_error("UnroutableCnot(" + std::to_string(control) + ", " + std::to_string(target) +
                         "): no coupling between these qubits"),
      control_(control),
      target_(target) {}

Circuit transpile(const Circuit& c, const CouplingMap& map) {
    if (c.n_qubits() > map.n_qubits()) {
        throw std::invalid_argument("transpile: circuit has " + std::to_string(c.n_qubits()) +
                                    " qubits but the device has " + std::to_string(map.n_qubits()));
    }
    Circuit out(c.n_qubits(), c.n_clbits(), c.name());
    for (const auto& inst : c.instructions()) {
        if (inst.kind != InstructionKind::Gate || inst.gate != GateKind::CNOT) {
            out.append(inst);
            continue;
        }
        const int control = inst.qubits[0];
        const int target = inst.qubits[1];
        if (map.has_edge(control, target)) {
            out.append(inst);
        } else if (map.has_edge(target, control)) {
            out.h(control).h(target);
            out.cx(target, control);
            out.h(control).h(target);
        } else {
            throw UnroutableCnot(control, target);
        }
    }
    return out;
}

Circuit apply_layout(const Circuit& c, std::span<const int> layout, int device_qubits) {
    if (static_cast<int>(layout.size()) != c.n_qubits()) {
        throw std::invalid_argument("apply_layout: layout has " + std::to_string(layout.size()) +
                                    " entries for " + std::to_string(c.n_qubits()) + " qubits");
    }
    std::vector<bool> used(static_cast<std::size_t>(device_qubits), false);
    for (int d : layout) {
        if (d < 0 || d >= device_qubits || used[static_cast<std::size_t>(d)]) {
            throw std::invalid_argument("apply_layout: invalid or repeated device qubit " + std::to_string(d));
        }
        used[static_cast<std::size_t>(d)] = true;
    }
    Circuit out(device_qubits, c.n_clbits(), c.name());
    for (auto inst : c.instructions()) {
        for (int& q : inst.qubits) {
            q = layout[static_cast<std::size_t>(q)];
        }
        out.append(inst);
    }
    return out;
}

Circuit remove_layout(const Circuit& c, std::span<const int> layout, int logical_qubits) {
    std::vector<int> inverse(static_cast<std::size_t>(c.n_qubits()), -1);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const int d = layout[i];
        if (d < 0 || d >= c.n_qubits()) {
            throw std::invalid_argument("remove_layout: device qubit " + std::to_string(d) + " out of range");
        }
        inverse[static_cast<std::size_t>(d)] = static_cast<int>(i);
    }
    Circuit out(logical_qubits, c.n_clbits(), c.name());
    for (auto inst : c.instructions()) {
        for (int& q : inst.qubits) {
            const int logical = inverse[static_cast<std::size_t>(q)];
            if (logical < 0) {
                throw std::invalid_argument("remove_layout: device qubit " + std::to_string(q) +
                                            " is not part of the layout");
            }
            q = logical;
        }
        out.append(inst);
    }
    return out;
}

std::vector<int> default_router_layout() { return {2, 0, 1}; }

}  // namespace qrouter
