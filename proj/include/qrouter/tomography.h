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

// Pauli-basis state tomography.
//
// Every qubit is measured in X, Y or Z. For n qubits the 3^n local settings
// serve all 4^n - 1 non-identity Pauli observables: an observable is estimated
// from every setting that agrees with it on its non-identity positions, with
// the remaining qubits marginalized. Alternatively one setting per observable
// can be executed (identity positions measured in Z and ignored).
//
// Basis changes before the Z measurement: X -> H, Y -> S-dagger then H, Z -> none.
// Outcome bitstrings list qubit 0 first; bit 0 is the +1 eigenvalue.

#ifndef QROUTER_TOMOGRAPHY_H
#define QROUTER_TOMOGRAPHY_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qrouter/qstate.h"

namespace qrouter {

/// Tensor product of I/X/Y/Z letters, qubit 0 first.
class PauliString {
public:
    /// Throws std::invalid_argument for letters outside IXYZ or an empty string.
    explicit PauliString(std::string letters);

    const std::string& str() const { return letters_; }
    int n_qubits() const { return static_cast<int>(letters_.size()); }
    char operator[](std::size_t q) const { return letters_[q]; }
    bool is_identity() const { return letters_.find_first_not_of('I') == std::string::npos; }
    Matrix matrix() const;

    auto operator<=>(const PauliString&) const = default;

private:
    std::string letters_;
};

/// Per-qubit measurement basis, letters X/Y/Z.
class MeasurementSetting {
public:
    explicit MeasurementSetting(std::string letters);

    const std::string& str() const { return letters_; }
    int n_qubits() const { return static_cast<int>(letters_.size()); }
    char operator[](std::size_t q) const { return letters_[q]; }
    /// Unitary rotating each qubit's basis onto Z.
    Matrix rotation() const;

    auto operator<=>(const MeasurementSetting&) const = default;

private:
    std::string letters_;
};

/// Outcome bitstring -> count.
using Counts = std::map<std::string, std::uint64_t>;

enum class SettingMode {
    Local,          // 3^n settings shared by all observables
    PerObservable,  // one setting per non-identity observable (4^n - 1)
};

inline constexpr std::string_view kGeneratorName = "mt19937_64";

struct TomographyDataset {
    int n_qubits = 0;
    std::uint64_t shots_per_setting = 0;
    std::uint64_t seed = 0;
    std::string generator{kGeneratorName};
    SettingMode mode = SettingMode::Local;
    /// Keyed by the setting label: a MeasurementSetting string in Local mode,
    /// the observable's Pauli string in PerObservable mode.
    std::map<std::string, Counts> counts;

    /// Throws std::invalid_argument if any setting's counts do not sum to shots_per_setting.
    void validate() const;
};

/// All 3^n settings, lexicographic with X < Y < Z.
std::vector<MeasurementSetting> settings_for(int n_qubits);

/// All 4^n - 1 non-identity Pauli strings, lexicographic with I < X < Y < Z.
std::vector<PauliString> observables_for(int n_qubits);

/// Setting labels in execution order for a mode; the index in this list is
/// XORed into the seed for that setting.
std::vector<std::string> setting_labels(int n_qubits, SettingMode mode);

/// Physical basis for a label: identity positions are measured in Z.
MeasurementSetting basis_for_label(std::string_view label);

/// Born probabilities after the basis change (index: qubit 0 most significant).
std::vector<double> outcome_distribution(const DensityMatrix& rho, const MeasurementSetting& setting);

/// Draws `shots` outcomes by inverse-transform sampling with mt19937_64(seed),
/// after applying readout flips with probability p_readout. Deterministic.
Counts sample_counts(const DensityMatrix& rho, const MeasurementSetting& setting, std::uint64_t shots,
                     std::uint64_t seed, double p_readout);

/// Runs every setting of `mode`; setting i uses seed ^ i.
TomographyDataset collect_dataset(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed,
                                  double p_readout, SettingMode mode = SettingMode::Local);

/// Mean over compatible settings of sum_outcome (-1)^parity * frequency.
/// Throws std::invalid_argument if no setting is compatible.
double expectation(const TomographyDataset& dataset, const PauliString& pauli);

/// Estimates for every non-identity observable.
std::map<std::string, double> estimate_expectations(const TomographyDataset& dataset);

/// Tr(P rho) for every non-identity observable.
std::map<std::string, double> exact_expectations(const DensityMatrix& rho);

/// (1/2^n) sum_P <P> P, identity term fixed to 1. Hermitian with unit trace; may
/// have negative eigenvalues. Throws if any observable is missing.
Matrix linear_inversion(const std::map<std::string, double>& expectations, int n_qubits);

/// Closest physical state by eigenvalue water-filling: the most negative
/// eigenvalue is zeroed and its weight spread evenly over the remaining
/// nonzero eigenvalues, repeated until none is negative.
DensityMatrix project_to_physical(const Matrix& m);

/// Linear inversion followed by projection.
DensityMatrix reconstruct(const TomographyDataset& dataset);

/// Squared Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
/// <psi|rho|psi>
double fidelity(const DensityMatrix& rho, const StateVector& psi);

}  // namespace qrouter

#endif  // QROUTER_TOMOGRAPHY_H
