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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrouter {

DeviceParams DeviceParams::ibmqx4() {
    return {{
        {6.52396, 5.2461, -330.1, 410.0, 35.2, 38.1},
        {6.48078, 5.3025, -329.7, 512.0, 57.5, 40.5},
        {6.43875, 5.3025, -329.7, 408.0, 36.6, 54.8},
        {6.58036, 5.4317, -327.9, 434.0, 43.0, 42.1},
        {6.52698, 5.1824, -332.5, 458.0, 49.5, 19.2},
    }};
}

std::vector<std::string> DeviceParams::validate() const {
    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        const auto& q = qubits[i];
        if (!(q.t1_us > 0.0) || !(q.t2_us > 0.0)) {
            throw std::invalid_argument("qubit " + std::to_string(i) + ": T1 and T2 must be positive");
        }
        if (q.t2_us > 2.0 * q.t1_us) {
            std::ostringstream msg;
            msg << "qubit " << i << ": T2 = " << q.t2_us << " us exceeds 2*T1 = " << 2.0 * q.t1_us
                << " us; pure dephasing clamped to zero";
            warnings.push_back(msg.str());
        }
    }
    return warnings;
}

NoiseModel NoiseModel::ibmqx4() { return NoiseModel{DeviceParams::ibmqx4()}; }

NoiseModel NoiseModel::noiseless() { return NoiseModel{DeviceParams::ibmqx4(), 0.0, 0.0, 0.0, 0.0, 0.0}; }

NoiseModel NoiseModel::scaled(double factor) const {
    NoiseModel m = *this;
    m.p1 = std::min(1.0, p1 * factor);
    m.p2 = std::min(1.0, p2 * factor);
    m.dur_1q_ns = dur_1q_ns * factor;
    m.dur_2q_ns = dur_2q_ns * factor;
    return m;
}

std::vector<std::string> NoiseModel::validate() const {
    for (double p : {p1, p2, p_readout}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("noise probabilities must lie in [0, 1]");
        }
    }
    if (!(dur_1q_ns >= 0.0) || !(dur_2q_ns >= 0.0)) {
        throw std::invalid_argument("gate durations must be non-negative");
    }
    return device.validate();
}

KrausChannel::KrausChannel(std::vector<Matrix> operators) : operators_(std::move(operators)), n_qubits_(0) {
    if (operators_.empty()) {
        throw std::invalid_argument("KrausChannel: no operators");
    }
    const Eigen::Index dim = operators_.front().rows();
    for (const auto& k : operators_) {
        if (k.rows() != dim || k.cols() != dim) {
            throw std::invalid_argument("KrausChannel: operators must be square and of equal size");
        }
    }
    n_qubits_ = qubits_for_dimension(static_cast<std::size_t>(dim));
    if (completeness_error() > kStateTolerance) {
        throw std::invalid_argument("KrausChannel: sum K^dagger K deviates from identity by " +
                                    std::to_string(completeness_error()));
    }
}

double KrausChannel::completeness_error() const {
    const Eigen::Index dim = operators_.front().rows();
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& k : operators_) {
        sum += k.adjoint() * k;
    }
    return (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

KrausChannel amplitude_damping(double t_ns, double t1_us) {
    if (!(t1_us > 0.0)) {
        throw std::invalid_argument("amplitude_damping: T1 must be positive");
    }
    if (!(t_ns >= 0.0)) {
        throw std::invalid_argument("amplitude_damping: duration must be non-negative");
    }
    const double gamma = 1.0 - std::exp(-(t_ns / 1000.0) / t1_us);
    Matrix k0 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - gamma);
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    return KrausChannel({k0, k1});
}

KrausChannel phase_damping(double t_ns, double t1_us, double t2_us) {
    if (!(t1_us > 0.0) || !(t2_us > 0.0)) {
        throw std::invalid_argument("phase_damping: T1 and T2 must be positive");
    }
    if (!(t_ns >= 0.0)) {
        throw std::invalid_argument("phase_damping: duration must be non-negative");
    }
    const double rate = std::max(0.0, 1.0 / t2_us - 1.0 / (2.0 * t1_us));  // per microsecond
    const double decay = std::exp(-(t_ns / 1000.0) * rate);
    Matrix k0 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = decay;
    Matrix k1 = Matrix::Zero(2, 2);
    k1(1, 1) = std::sqrt(1.0 - decay * decay);
    return KrausChannel({k0, k1});
}

namespace {

Matrix pauli(int which) {
    Matrix m = Matrix::Zero(2, 2);
    switch (which) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

Matrix apply_kraus(const Matrix& rho, const KrausChannel& ch, std::span<const int> qubits, int n) {
    if (static_cast<int>(qubits.size()) != ch.n_qubits()) {
        throw std::invalid_argument("apply_channel: channel acts on " + std::to_string(ch.n_qubits()) +
                                    " qubit(s), " + std::to_string(qubits.size()) + " given");
    }
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (const auto& k : ch.operators()) {
        const Matrix full = embed_operator(k, qubits, n);
        out += full * rho * full.adjoint();
    }
    return out;
}

}  // namespace

KrausChannel depolarizing(double p, int n_qubits) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarizing: p must lie in [0, 1]");
    }
    if (n_qubits != 1 && n_qubits != 2) {
        throw std::invalid_argument("depolarizing: only 1- and 2-qubit channels are supported");
    }
    const int terms = n_qubits == 1 ? 4 : 16;
    const double weight_other = p / terms;
    const double weight_identity = 1.0 - p + weight_other;
    std::vector<Matrix> ops;
    for (int i = 0; i < terms; ++i) {
        const Matrix op = n_qubits == 1 ? pauli(i) : kron(pauli(i / 4), pauli(i % 4));
        ops.push_back(std::sqrt(i == 0 ? weight_identity : weight_other) * op);
    }
    return KrausChannel(std::move(ops));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, std::span<const int> qubits) {
    return DensityMatrix(rho.n_qubits(), apply_kraus(rho.entries(), ch, qubits, rho.n_qubits()));
}

DensityMatrix simulate_noisy(const Circuit& c, const NoiseModel& model, std::span<const int> device_rows) {
    model.validate();
    const int n = c.n_qubits();
    if (!device_rows.empty() && static_cast<int>(device_rows.size()) != n) {
        throw std::invalid_argument("simulate_noisy: device_rows must map every circuit qubit");
    }
    auto row_of = [&](int q) -> const QubitCalibration& {
        const int row = device_rows.empty() ? q : device_rows[static_cast<std::size_t>(q)];
        if (row < 0 || row >= static_cast<int>(model.device.qubits.size())) {
            throw std::invalid_argument("simulate_noisy: no calibration row for qubit " + std::to_string(q));
        }
        return model.device.qubits[static_cast<std::size_t>(row)];
    };

    const auto dim = static_cast<Eigen::Index>(dimension(n));
    Matrix rho = Matrix::Zero(dim, dim);
    rho(0, 0) = 1.0;

    const KrausChannel depol1 = depolarizing(model.p1, 1);
    const KrausChannel depol2 = depolarizing(model.p2, 2);

    for (const auto& inst : c.instructions()) {
        if (inst.kind != InstructionKind::Gate) {
            continue;
        }
        const Matrix u = embed_operator(gate_matrix(inst.gate), inst.qubits, n);
        rho = u * rho * u.adjoint();

        const bool two_qubit = inst.gate == GateKind::CNOT;
        const double p = two_qubit ? model.p2 : model.p1;
        if (p > 0.0) {
            rho = apply_kraus(rho, two_qubit ? depol2 : depol1, inst.qubits, n);
        }
        const double duration = two_qubit ? model.dur_2q_ns : model.dur_1q_ns;
        if (duration > 0.0) {
            for (int q : inst.qubits) {
                const auto& cal = row_of(q);
                const int target[] = {q};
                rho = apply_kraus(rho, amplitude_damping(duration, cal.t1_us), target, n);
                rho = apply_kraus(rho, phase_damping(duration, cal.t1_us, cal.t2_us), target, n);
            }
        }
    }
    return DensityMatrix(n, std::move(rho));
}

std::vector<double> readout_flip(std::span<const double> distribution, double p_readout) {
    if (!(p_readout >= 0.0 && p_readout <= 1.0)) {
        throw std::invalid_argument("readout_flip: probability must lie in [0, 1]");
    }
    const int n = qubits_for_dimension(distribution.size());
    double total = 0.0;
    for (double x : distribution) {
        if (!std::isfinite(x) || x < -kStateTolerance) {
            throw std::invalid_argument("readout_flip: invalid probability entry");
        }
        total += x;
    }
    if (std::abs(total - 1.0) > kStateTolerance) {
        throw std::invalid_argument("readout_flip: distribution sums to " + std::to_string(total));
    }

    std::vector<double> current(distribution.begin(), distribution.end());
    // One 2x2 confusion matrix per qubit, applied in turn.
    for (int q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << bit_position(q, n);
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (i & bit) {
                continue;
            }
            const double p0 = current[i];
            const double p1 = current[i | bit];
            current[i] = (1.0 - p_readout) * p0 + p_readout * p1;
            current[i | bit] = p_readout * p0 + (1.0 - p_readout) * p1;
        }
    }
    return current;
}

}  // namespace qrouter
