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

#include "qrouter/tomography.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qrouter/gates.h"
#include "qrouter/noise.h"

namespace qrouter {

namespace {

Matrix pauli_letter(char letter) {
    Matrix m = Matrix::Zero(2, 2);
    switch (letter) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
    return m;
}

void check_letters(const std::string& s, std::string_view allowed, const char* what) {
    if (s.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty");
    }
    if (s.size() > 14) {
        throw std::invalid_argument(std::string(what) + ": too many qubits");
    }
    if (s.find_first_not_of(allowed) != std::string::npos) {
        throw std::invalid_argument(std::string(what) + " '" + s + "' has letters outside " + std::string(allowed));
    }
}

// Enumerates all strings of length n over `alphabet` in lexicographic order.
std::vector<std::string> all_words(int n, std::string_view alphabet) {
    std::vector<std::string> words{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        next.reserve(words.size() * alphabet.size());
        for (const auto& w : words) {
            for (char ch : alphabet) {
                next.push_back(w + ch);
            }
        }
        words = std::move(next);
    }
    return words;
}

std::string bitstring(std::size_t index, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((index >> bit_position(q, n)) & 1u) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

bool compatible(const TomographyDataset& dataset, const std::string& label, const PauliString& pauli) {
    if (dataset.mode == SettingMode::PerObservable) {
        return label == pauli.str();
    }
    for (std::size_t q = 0; q < pauli.str().size(); ++q) {
        if (pauli[q] != 'I' && label[q] != pauli[q]) {
            return false;
        }
    }
    return true;
}

}  // namespace

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
    check_letters(letters_, "IXYZ", "PauliString");
}

Matrix PauliString::matrix() const {
    Matrix m = pauli_letter(letters_[0]);
    for (std::size_t q = 1; q < letters_.size(); ++q) {
        m = kron(m, pauli_letter(letters_[q]));
    }
    return m;
}

MeasurementSetting::MeasurementSetting(std::string letters) : letters_(std::move(letters)) {
    check_letters(letters_, "XYZ", "MeasurementSetting");
}

Matrix MeasurementSetting::rotation() const {
    const Matrix h = gate_matrix(GateKind::H);
    const Matrix y_to_z = h * gate_matrix(GateKind::Sdg);
    Matrix out = Matrix::Identity(1, 1);
    for (char letter : letters_) {
        const Matrix r = letter == 'X' ? h : letter == 'Y' ? y_to_z : Matrix::Identity(2, 2);
        out = kron(out, r);
    }
    return out;
}

void TomographyDataset::validate() const {
    for (const auto& [label, outcomes] : counts) {
        if (static_cast<int>(label.size()) != n_qubits) {
            throw std::invalid_argument("dataset: setting '" + label + "' has wrong length");
        }
        std::uint64_t total = 0;
        for (const auto& [bits, count] : outcomes) {
            if (static_cast<int>(bits.size()) != n_qubits || bits.find_first_not_of("01") != std::string::npos) {
                throw std::invalid_argument("dataset: bad outcome '" + bits + "' for setting " + label);
            }
            total += count;
        }
        if (total != shots_per_setting) {
            throw std::invalid_argument("dataset: setting " + label + " has " + std::to_string(total) +
                                        " shots, expected " + std::to_string(shots_per_setting));
        }
    }
}

std::vector<MeasurementSetting> settings_for(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("settings_for: need at least one qubit");
    }
    std::vector<MeasurementSetting> out;
    for (auto& w : all_words(n_qubits, "XYZ")) {
        out.emplace_back(std::move(w));
    }
    return out;
}

std::vector<PauliString> observables_for(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("observables_for: need at least one qubit");
    }
    std::vector<PauliString> out;
    for (auto& w : all_words(n_qubits, "IXYZ")) {
        if (w.find_first_not_of('I') != std::string::npos) {
            out.emplace_back(std::move(w));
        }
    }
    return out;
}

std::vector<std::string> setting_labels(int n_qubits, SettingMode mode) {
    std::vector<std::string> labels;
    if (mode == SettingMode::Local) {
        for (const auto& s : settings_for(n_qubits)) {
            labels.push_back(s.str());
        }
    } else {
        for (const auto& p : observables_for(n_qubits)) {
            labels.push_back(p.str());
        }
    }
    return labels;
}

MeasurementSetting basis_for_label(std::string_view label) {
    std::string letters(label);
    std::replace(letters.begin(), letters.end(), 'I', 'Z');
    return MeasurementSetting(std::move(letters));
}

std::vector<double> outcome_distribution(const DensityMatrix& rho, const MeasurementSetting& setting) {
    if (setting.n_qubits() != rho.n_qubits()) {
        throw std::invalid_argument("outcome_distribution: setting length does not match the state");
    }
    const Matrix u = setting.rotation();
    const Matrix rotated = u * rho.entries() * u.adjoint();
    std::vector<double> probs(rho.dim());
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        probs[i] = std::max(0.0, rotated(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
        total += probs[i];
    }
    for (double& p : probs) {
        p /= total;
    }
    return probs;
}

Counts sample_counts(const DensityMatrix& rho, const MeasurementSetting& setting, std::uint64_t shots,
                     std::uint64_t seed, double p_readout) {
    if (shots < 1) {
        throw std::invalid_argument("sample_counts: need at least one shot");
    }
    const std::vector<double> probs = readout_flip(outcome_distribution(rho, setting), p_readout);

    std::vector<double> cumulative(probs.size());
    double running = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cumulative[i] = running;
        if (probs[i] > 0.0) {
            last_nonzero = i;
        }
    }

    std::vector<std::uint64_t> tally(probs.size(), 0);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1), independent of the standard library's distributions.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto idx = std::min(static_cast<std::size_t>(it - cumulative.begin()), last_nonzero);
        ++tally[idx];
    }

    Counts counts;
    for (std::size_t i = 0; i < tally.size(); ++i) {
        counts[bitstring(i, rho.n_qubits())] = tally[i];
    }
    return counts;
}

TomographyDataset collect_dataset(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed,
                                  double p_readout, SettingMode mode) {
    TomographyDataset ds;
    ds.n_qubits = rho.n_qubits();
    ds.shots_per_setting = shots;
    ds.seed = seed;
    ds.mode = mode;
    const auto labels = setting_labels(rho.n_qubits(), mode);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        ds.counts[labels[i]] = sample_counts(rho, basis_for_label(labels[i]), shots, seed ^ i, p_readout);
    }
    return ds;
}

double expectation(const TomographyDataset& dataset, const PauliString& pauli) {
    if (pauli.n_qubits() != dataset.n_qubits) {
        throw std::invalid_argument("expectation: observable length does not match the dataset");
    }
    double sum = 0.0;
    int settings = 0;
    for (const auto& [label, outcomes] : dataset.counts) {
        if (!compatible(dataset, label, pauli)) {
            continue;
        }
        std::uint64_t total = 0;
        double signed_total = 0.0;
        for (const auto& [bits, count] : outcomes) {
            int parity = 0;
            for (std::size_t q = 0; q < bits.size(); ++q) {
                if (pauli[q] != 'I' && bits[q] == '1') {
                    parity ^= 1;
                }
            }
            signed_total += parity ? -static_cast<double>(count) : static_cast<double>(count);
            total += count;
        }
        if (total == 0) {
            continue;
        }
        sum += signed_total / static_cast<double>(total);
        ++settings;
    }
    if (settings == 0) {
        throw std::invalid_argument("expectation: no setting in the dataset measures " + pauli.str());
    }
    return std::clamp(sum / settings, -1.0, 1.0);
}

std::map<std::string, double> estimate_expectations(const TomographyDataset& dataset) {
    std::map<std::string, double> out;
    for (const auto& p : observables_for(dataset.n_qubits)) {
        out[p.str()] = expectation(dataset, p);
    }
    return out;
}

std::map<std::string, double> exact_expectations(const DensityMatrix& rho) {
    std::map<std::string, double> out;
    for (const auto& p : observables_for(rho.n_qubits())) {
        out[p.str()] = (p.matrix() * rho.entries()).trace().real();
    }
    return out;
}

Matrix linear_inversion(const std::map<std::string, double>& expectations, int n_qubits) {
    const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
    Matrix m = Matrix::Identity(dim, dim);
    for (const auto& p : observables_for(n_qubits)) {
        const auto it = expectations.find(p.str());
        if (it == expectations.end()) {
            throw std::invalid_argument("linear_inversion: missing expectation for " + p.str());
        }
        m += it->second * p.matrix();
    }
    return m / static_cast<double>(dim);
}

DensityMatrix project_to_physical(const Matrix& m) {
    constexpr double kInputTolerance = 1e-6;
    if (m.rows() != m.cols() || !m.allFinite()) {
        throw std::invalid_argument("project_to_physical: expected a finite square matrix");
    }
    const int n = qubits_for_dimension(static_cast<std::size_t>(m.rows()));
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kInputTolerance) {
        throw std::invalid_argument("project_to_physical: input is not Hermitian");
    }
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > kInputTolerance) {
        throw std::invalid_argument("project_to_physical: input trace is not 1");
    }

    const Matrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
    Eigen::VectorXd lambda = solver.eigenvalues();
    if (lambda.minCoeff() >= 0.0) {
        return DensityMatrix(n, herm);
    }

    std::vector<bool> active(static_cast<std::size_t>(lambda.size()), true);
    auto remaining = lambda.size();
    while (remaining > 0) {
        Eigen::Index worst = -1;
        for (Eigen::Index i = 0; i < lambda.size(); ++i) {
            if (active[static_cast<std::size_t>(i)] && (worst < 0 || lambda(i) < lambda(worst))) {
                worst = i;
            }
        }
        if (lambda(worst) >= 0.0) {
            break;
        }
        const double deficit = lambda(worst);
        lambda(worst) = 0.0;
        active[static_cast<std::size_t>(worst)] = false;
        --remaining;
        for (Eigen::Index i = 0; i < lambda.size(); ++i) {
            if (active[static_cast<std::size_t>(i)]) {
                lambda(i) += deficit / static_cast<double>(remaining);
            }
        }
    }
    const Matrix& v = solver.eigenvectors();
    Matrix out = v * lambda.cast<Complex>().asDiagonal() * v.adjoint();
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(n, std::move(out));
}

DensityMatrix reconstruct(const TomographyDataset& dataset) {
    return project_to_physical(linear_inversion(estimate_expectations(dataset), dataset.n_qubits));
}

namespace {

// Eigenvalues this close to zero are rounding noise; taking their square root
// would inject sqrt(eps) ~ 1e-8 errors into the fidelity, so they are zeroed.
constexpr double kRootCutoff = 1e-14;

Matrix psd_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
    Eigen::VectorXd roots = solver.eigenvalues();
    for (auto& x : roots) {
        x = x > kRootCutoff ? std::sqrt(x) : 0.0;
    }
    return solver.eigenvectors() * roots.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.n_qubits() != sigma.n_qubits()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    // F = ||sqrt(rho) sqrt(sigma)||_1^2. The trace norm via singular values is
    // symmetric by construction and avoids square-rooting tiny eigenvalues of
    // sqrt(rho) sigma sqrt(rho).
    const Matrix product = psd_sqrt(rho.entries()) * psd_sqrt(sigma.entries());
    const double trace_norm = Eigen::JacobiSVD<Matrix>(product).singularValues().sum();
    return std::clamp(trace_norm * trace_norm, 0.0, 1.0);
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
    if (rho.n_qubits() != psi.n_qubits()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    const Complex overlap = psi.amplitudes().dot(rho.entries() * psi.amplitudes());
    return std::clamp(overlap.real(), 0.0, 1.0);
}

}  // namespace qrouter
