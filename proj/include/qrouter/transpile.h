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

#ifndef QROUTER_TRANSPILE_H
#define QROUTER_TRANSPILE_H

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrouter/gates.h"

namespace qrouter {

/// Directed graph of native CNOT (control, target) pairs.
class CouplingMap {
public:
    /// Throws std::invalid_argument on self-edges or out-of-range indices.
    CouplingMap(int n_qubits, std::set<std::pair<int, int>> edges);

    /// Five-qubit ibmqx4: 1->0, 2->0, 2->1, 2->4, 3->2, 3->4.
    static CouplingMap ibmqx4();

    int n_qubits() const { return n_qubits_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int control, int target) const { return edges_.contains({control, target}); }

private:
    int n_qubits_;
    std::set<std::pair<int, int>> edges_;
};

class UnroutableCnot : public std::runtime_error {
public:
    UnroutableCnot(int control, int target);
    int control() const { return control_; }
    int target() const { return target_; }

private:
    int control_;
    int target_;
};

/// Rewrites CNOTs so every one runs along a native edge. Reversed pairs are
/// conjugated by Hadamards on both qubits; pairs with no edge in either
/// direction throw UnroutableCnot. Qubit indices are device indices.
Circuit transpile(const Circuit& c, const CouplingMap& map);

/// Relabels logical qubit i as device qubit layout[i] in a register of
/// `device_qubits`. The layout must be injective and in range.
Circuit apply_layout(const Circuit& c, std::span<const int> layout, int device_qubits);

/// Inverse of apply_layout: pulls a device circuit back onto the logical
/// register. Throws if an instruction touches a device qubit outside the layout.
Circuit remove_layout(const Circuit& c, std::span<const int> layout, int logical_qubits);

/// Logical {0,1,2} -> device {2,0,1}: every CNOT of the router's controlled
/// swap lands on an ibmqx4 edge in one direction or the other.
std::vector<int> default_router_layout();

}  // namespace qrouter

#endif  // QROUTER_TRANSPILE_H
