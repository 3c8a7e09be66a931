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

// Builders for the controlled-swap router: one control qubit steers the signal
// held on path 1 into a superposition of path 1 and path 2. Qubit 0 is the
// control, qubit 1 is path 1 (initially holding the signal), qubit 2 is path 2
// (initially |+>, the empty "null" path).

#ifndef QROUTER_ROUTER_H
#define QROUTER_ROUTER_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrouter/gates.h"

namespace qrouter {

inline constexpr int kControlQubit = 0;
inline constexpr int kPath1Qubit = 1;
inline constexpr int kPath2Qubit = 2;

inline constexpr std::string_view kRouterSuperposition = "router-superposition";
inline constexpr std::string_view kRouterControl0 = "router-control0";
inline constexpr std::string_view kRouterControl1 = "router-control1";

/// Single-qubit state preparation, expressed as gates applied to |0> in order.
struct PrepSpec {
    std::string label;
    std::vector<GateKind> gates;

    /// (|0> - e^{i pi/4}|1>)/sqrt(2) via H, S, T, S.
    static PrepSpec superposed_control();
    static PrepSpec zero();
    static PrepSpec one();
    /// cos(pi/8)|0> + sin(pi/8)|1> (up to global phase) via H, T, H, S.
    static PrepSpec signal();
    static PrepSpec plus();

    /// Named preset ("control", "zero", "one", "signal", "plus") or a
    /// comma-separated list of single-qubit gate names such as "h,t,h,s".
    /// Throws std::invalid_argument for unknown or two-qubit gate names.
    static PrepSpec parse(std::string_view text);

    bool operator==(const PrepSpec&) const = default;
};

/// Controlled swap of `a` and `b` conditioned on `control`:
/// CNOT(b->a) . Toffoli(control, a; b) . CNOT(b->a), with the Toffoli expanded
/// into 6 CNOTs, 7 T/T-dagger and 2 H gates. `n_qubits` must cover all three.
Circuit fredkin_circuit(int control, int a, int b, int n_qubits = 3);

/// The 8x8 CSWAP permutation on qubits (0; 1, 2), built directly.
Matrix ideal_cswap();

/// Three-qubit router: control prep on qubit 0, signal prep on qubit 1, H on
/// qubit 2, then the controlled swap.
Circuit router_circuit(const PrepSpec& control_prep, const PrepSpec& signal_prep,
                       std::string name = "router-custom");

/// router-superposition, router-control0 or router-control1; nullopt otherwise.
std::optional<Circuit> named_router_circuit(std::string_view name);

/// Prepared single-qubit state for a prep spec.
StateVector prepared_state(const PrepSpec& prep);

/// Closed-form final state of the superposition router:
/// (|0>|s>|+> - e^{i pi/4}|1>|+>|s>)/sqrt(2), |s> = cos(pi/8)|0> + sin(pi/8)|1>.
StateVector analytic_superposition_output();
/// |0>|s>|+>
StateVector analytic_control0_output();
/// |1>|+>|s>
StateVector analytic_control1_output();

}  // namespace qrouter

#endif  // QROUTER_ROUTER_H
