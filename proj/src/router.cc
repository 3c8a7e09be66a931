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

#include "qrouter/router.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrouter {

PrepSpec PrepSpec::superposed_control() {
    return {"control", {GateKind::H, GateKind::S, GateKind::T, GateKind::S}};
}
PrepSpec PrepSpec::zero() { return {"zero", {}}; }
PrepSpec PrepSpec::one() { return {"one", {GateKind::X}}; }
PrepSpec PrepSpec::signal() {
    return {"signal", {GateKind::H, GateKind::T, GateKind::H, GateKind::S}};
}
PrepSpec PrepSpec::plus() { return {"plus", {GateKind::H}}; }

PrepSpec PrepSpec::parse(std::string_view text) {
    std::string lowered(text);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lowered == "control") return superposed_control();
    if (lowered == "zero") return zero();
    if (lowered == "one") return one();
    if (lowered == "signal") return signal();
    if (lowered == "plus") return plus();

    PrepSpec spec{lowered, {}};
    std::size_t start = 0;
    while (start <= lowered.size()) {
        const std::size_t comma = lowered.find(',', start);
        const std::size_t end = comma == std::string::npos ? lowered.size() : comma;
        std::string token = lowered.substr(start, end - start);
        token.erase(std::remove_if(token.begin(), token.end(),
                                   [](unsigned char ch) { return std::isspace(ch); }),
                    token.end());
        if (!token.empty()) {
            const auto kind = gate_from_name(token);
            if (!kind) {
                throw std::invalid_argument("unknown gate '" + token + "' in preparation");
            }
            if (gate_arity(*kind) != 1) {
                throw std::invalid_argument("preparation gates must act on one qubit, got '" + token + "'");
            }
            spec.gates.push_back(*kind);
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return spec;
}

Circuit fredkin_circuit(int control, int a, int b, int n_qubits) {
    if (control == a || control == b || a == b) {
        throw std::invalid_argument("fredkin_circuit: control and targets must be distinct");
    }
    Circuit c(n_qubits, 0, "fredkin");
    c.cx(b, a);
    // Toffoli(control, a; b)
    c.h(b);
    c.cx(a, b);
    c.tdg(b);
    c.cx(control, b);
    c.t(b);
    c.cx(a, b);
    c.tdg(b);
    c.cx(control, b);
    c.t(a);
    c.t(b);
    c.h(b);
    c.cx(control, a);
    c.t(control);
    c.tdg(a);
    c.cx(control, a);
    c.cx(b, a);
    return c;
}

Matrix ideal_cswap() {
    Matrix m = Matrix::Zero(8, 8);
    for (Eigen::Index i = 0; i < 8; ++i) {
        Eigen::Index j = i;
        if (i == 0b101) j = 0b110;
        if (i == 0b110) j = 0b101;
        m(j, i) = 1.0;
    }
    return m;
}

Circuit router_circuit(const PrepSpec& control_prep, const PrepSpec& signal_prep, std::string name) {
    Circuit c(3, 0, std::move(name));
    for (GateKind g : control_prep.gates) {
        c.gate(g, {kControlQubit});
    }
    for (GateKind g : signal_prep.gates) {
        c.gate(g, {kPath1Qubit});
    }
    c.h(kPath2Qubit);
    c.extend(fredkin_circuit(kControlQubit, kPath1Qubit, kPath2Qubit));
    return c;
}

std::optional<Circuit> named_router_circuit(std::string_view name) {
    if (name == kRouterSuperposition) {
        return router_circuit(PrepSpec::superposed_control(), PrepSpec::signal(), std::string(name));
    }
    if (name == kRouterControl0) {
        return router_circuit(PrepSpec::zero(), PrepSpec::signal(), std::string(name));
    }
    if (name == kRouterControl1) {
        return router_circuit(PrepSpec::one(), PrepSpec::signal(), std::string(name));
    }
    return std::nullopt;
}

StateVector prepared_state(const PrepSpec& prep) {
    Circuit c(1);
    for (GateKind g : prep.gates) {
        c.gate(g, {0});
    }
    return apply_circuit(c, basis_state(1, 0));
}

namespace {

StateVector signal_ket() {
    using std::numbers::pi;
    Vector v(2);
    v << std::cos(pi / 8), std::sin(pi / 8);
    return StateVector(1, v);
}

StateVector plus_ket() {
    Vector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return StateVector(1, v);
}

}  // namespace

StateVector analytic_control0_output() {
    return tensor_product(tensor_product(basis_state(1, 0), signal_ket()), plus_ket());
}

StateVector analytic_control1_output() {
    return tensor_product(tensor_product(basis_state(1, 1), plus_ket()), signal_ket());
}

StateVector analytic_superposition_output() {
    using std::numbers::pi;
    const Vector v = (analytic_control0_output().amplitudes() -
                      std::polar(1.0, pi / 4) * analytic_control1_output().amplitudes()) /
                     std::sqrt(2.0);
    return StateVector(3, v);
}

}  // namespace qrouter
