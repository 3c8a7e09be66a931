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

#ifndef QROUTER_NOISE_H
#define QROUTER_NOISE_H

#include <span>
#include <string>
#include <vector>

#include "qrouter/gates.h"
#include "qrouter/qstate.h"

namespace qrouter {

/// Calibration row for one transmon. Only t1_us and t2_us enter the noise
/// channels; the remaining fields are carried for completeness.
struct QubitCalibration {
    double resonator_ghz = 0.0;
    double qubit_ghz = 0.0;
    double anharmonicity_mhz = 0.0;
    double chi_khz = 0.0;
    double t1_us = 0.0;
    double t2_us = 0.0;
};

struct DeviceParams {
    std::vector<QubitCalibration> qubits;

    /// The five ibmqx4 rows.
    static DeviceParams ibmqx4();

    /// Throws std::invalid_argument for T1 <= 0 or T2 <= 0. Rows with T2 > 2*T1
    /// are accepted; one warning string per such row is returned.
    std::vector<std::string> validate() const;
};

struct NoiseModel {
    DeviceParams device;
    double p1 = 1e-3;         // single-qubit depolarizing probability
    double p2 = 1e-2;         // two-qubit depolarizing probability
    double p_readout = 0.02;  // per-qubit assignment flip probability
    double dur_1q_ns = 100.0;
    double dur_2q_ns = 400.0;

    /// ibmqx4 calibration with the default error magnitudes above.
    static NoiseModel ibmqx4();
    /// All error probabilities and durations zero.
    static NoiseModel noiseless();

    /// Multiplies p1, p2 and both durations by `factor`; probabilities are capped at 1.
    NoiseModel scaled(double factor) const;

    /// Range checks plus DeviceParams::validate; returns device warnings.
    std::vector<std::string> validate() const;
};

/// Completely positive, trace-preserving map in Kraus form.
class KrausChannel {
public:
    /// Throws std::invalid_argument unless sum K^dagger K = I within 1e-9.
    explicit KrausChannel(std::vector<Matrix> operators);

    const std::vector<Matrix>& operators() const { return operators_; }
    int n_qubits() const { return n_qubits_; }
    /// Max-abs deviation of sum K^dagger K from the identity.
    double completeness_error() const;

private:
    std::vector<Matrix> operators_;
    int n_qubits_;
};

/// Energy relaxation over `t_ns` with relaxation time `t1_us`:
/// gamma = 1 - exp(-t/T1), K0 = diag(1, sqrt(1-gamma)), K1 = sqrt(gamma)|0><1|.
KrausChannel amplitude_damping(double t_ns, double t1_us);

/// Pure dephasing at rate 1/T2 - 1/(2 T1), clamped at zero. Coherences are
/// multiplied by exp(-t * rate).
KrausChannel phase_damping(double t_ns, double t1_us, double t2_us);

/// rho -> (1-p) rho + p I/2^n using the 4^n Pauli operators, n in {1, 2}.
KrausChannel depolarizing(double p, int n_qubits);

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, std::span<const int> qubits);

/// Density-matrix simulation from |0...0>. After each gate: the unitary, then
/// depolarizing on the touched qubits, then amplitude and phase damping for the
/// gate duration on each touched qubit. Logical qubit i uses calibration row
/// device_rows[i] (identity mapping when empty). Measure and Barrier are skipped.
DensityMatrix simulate_noisy(const Circuit& c, const NoiseModel& model, std::span<const int> device_rows = {});

/// Applies an independent bit flip with probability p_readout to every qubit of
/// an outcome distribution indexed by basis state (qubit 0 most significant).
std::vector<double> readout_flip(std::span<const double> distribution, double p_readout);

}  // namespace qrouter

#endif  // QROUTER_NOISE_H
