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

#include "qrouter/qstate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qrouter {

namespace {

void check_qubit_list(std::span<const int> qubits, int n_qubits, const char* what) {
    std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
    for (int q : qubits) {
        if (q < 0 || q >= n_qubits) {
            throw std::invalid_argument(std::string(what) + ": qubit " + std::to_string(q) +
                                        " out of range for " + std::to_string(n_qubits) +
                                        " qubits");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw std::invalid_argument(std::string(what) + ": qubit " + std::to_string(q) +
                                        " listed twice");
        }
        seen[static_cast<std::size_t>(q)] = true;
    }
}

// Gathers the bits of `index` at the given qubits into a compact sub-index,
// first listed qubit most significant.
std::size_t gather_bits(std::size_t index, std::span<const int> qubits, int n_qubits) {
    std::size_t sub = 0;
    for (int q : qubits) {
        sub = (sub << 1) | ((index >> bit_position(q, n_qubits)) & 1u);
    }
    return sub;
}

}  // namespace

StateVector::StateVector(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 0 || n_qubits > 30) {
        throw std::invalid_argument("StateVector: unsupported qubit count " + std::to_string(n_qubits));
    }
    if (static_cast<std::size_t>(amplitudes_.size()) != dimension(n_qubits)) {
        throw std::invalid_argument("StateVector: expected " + std::to_string(dimension(n_qubits)) +
                                    " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    if (!amplitudes_.allFinite()) {
        throw std::invalid_argument("StateVector: non-finite amplitude");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kStateTolerance) {
        throw std::invalid_argument("StateVector: norm^2 = " + std::to_string(norm2));
    }
}

DensityDiagnostics diagnose_density(const Matrix& m) {
    DensityDiagnostics d;
    if (m.rows() != m.cols() || m.rows() == 0) {
        d.finite = false;
        return d;
    }
    d.finite = m.allFinite();
    if (!d.finite) {
        return d;
    }
    d.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
    d.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
    const Matrix herm = 0.5 * (m + m.adjoint());
    d.min_eigenvalue = hermitian_eigenvalues(herm).minCoeff();
    return d;
}

int qubits_for_dimension(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if ((std::size_t{1} << n) != dim) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return n;
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
    if (n_qubits < 0 || n_qubits > 14) {
        throw std::invalid_argument("DensityMatrix: unsupported qubit count " + std::to_string(n_qubits));
    }
    const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw std::invalid_argument("DensityMatrix: expected " + std::to_string(dim) + "x" +
                                    std::to_string(dim) + " entries");
    }
    const auto d = diagnose_density(entries_);
    if (!d.finite) {
        throw std::invalid_argument("DensityMatrix: non-finite entry");
    }
    if (d.hermiticity_error > kStateTolerance) {
        throw std::invalid_argument("DensityMatrix: not Hermitian (error " +
                                    std::to_string(d.hermiticity_error) + ")");
    }
    if (d.trace_error > kStateTolerance) {
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                    std::to_string(d.trace_error));
    }
    if (d.min_eigenvalue < -kPsdTolerance) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(d.min_eigenvalue));
    }
}

double DensityMatrix::purity() const { return (entries_ * entries_).trace().real(); }

StateVector basis_state(int n_qubits, std::size_t index) {
    if (n_qubits < 0 || n_qubits > 30 || index >= dimension(n_qubits)) {
        throw std::out_of_range("basis_state: index " + std::to_string(index) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension(n_qubits)));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(n_qubits, std::move(v));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
    const auto nb = static_cast<Eigen::Index>(b.size());
    Vector out(static_cast<Eigen::Index>(a.size()) * nb);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.size()); ++i) {
        out.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
    }
    return StateVector(a.n_qubits() + b.n_qubits(), std::move(out));
}

DensityMatrix to_density(const StateVector& psi) {
    return DensityMatrix(psi.n_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const int n = rho.n_qubits();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    check_qubit_list(keep, n, "partial_trace");

    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    const auto k = static_cast<int>(kept.size());
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dimension(k)), static_cast<Eigen::Index>(dimension(k)));
    const std::size_t dim = rho.dim();
    for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t r_env = gather_bits(r, traced, n);
        const std::size_t r_sys = gather_bits(r, kept, n);
        for (std::size_t c = 0; c < dim; ++c) {
            if (gather_bits(c, traced, n) != r_env) {
                continue;
            }
            out(static_cast<Eigen::Index>(r_sys), static_cast<Eigen::Index>(gather_bits(c, kept, n))) += rho(r, c);
        }
    }
    return DensityMatrix(k, std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.entries())) {
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

double negativity(const DensityMatrix& rho, const Bipartition& partition) {
    const int n = rho.n_qubits();
    if (partition.first.empty() || partition.second.empty()) {
        throw std::invalid_argument("negativity: both sides of the partition must be nonempty");
    }
    std::vector<int> all(partition.first);
    all.insert(all.end(), partition.second.begin(), partition.second.end());
    check_qubit_list(all, n, "negativity");
    if (static_cast<int>(all.size()) != n) {
        throw std::invalid_argument("negativity: partition does not cover all qubits");
    }

    std::size_t mask = 0;
    for (int q : partition.first) {
        mask |= std::size_t{1} << bit_position(q, n);
    }
    const std::size_t dim = rho.dim();
    Matrix pt(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            // Exchange the first-side bits between row and column.
            const std::size_t r2 = (r & ~mask) | (c & mask);
            const std::size_t c2 = (c & ~mask) | (r & mask);
            pt(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) = rho(r, c);
        }
    }
    double neg = 0.0;
    for (double lambda : hermitian_eigenvalues(pt)) {
        if (lambda < 0.0) {
            neg -= lambda;
        }
    }
    return neg;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("equal_up_to_global_phase: qubit counts differ");
    }
    return std::abs(a.amplitudes().dot(b.amplitudes())) >= 1.0 - tol;
}

namespace {

template <typename T>
double aligned_distance(const T& a, const T& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("phase_aligned_distance: shape mismatch");
    }
    // Phase of the largest-magnitude entry of b relative to a.
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    Complex phase(1.0, 0.0);
    if (std::abs(b(r, c)) > 0.0 && std::abs(a(r, c)) > 0.0) {
        const Complex ratio = a(r, c) / b(r, c);
        phase = ratio / std::abs(ratio);
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace

double phase_aligned_distance(const Vector& a, const Vector& b) { return aligned_distance(a, b); }

double phase_aligned_distance(const Matrix& a, const Matrix& b) { return aligned_distance(a, b); }

Matrix embed_operator(const Matrix& op, std::span<const int> qubits, int n_qubits) {
    check_qubit_list(qubits, n_qubits, "embed_operator");
    const std::size_t sub_dim = dimension(static_cast<int>(qubits.size()));
    if (static_cast<std::size_t>(op.rows()) != sub_dim || static_cast<std::size_t>(op.cols()) != sub_dim) {
        throw std::invalid_argument("embed_operator: operator dimension does not match qubit count");
    }
    std::size_t mask = 0;
    for (int q : qubits) {
        mask |= std::size_t{1} << bit_position(q, n_qubits);
    }
    const std::size_t dim = dimension(n_qubits);
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        const std::size_t r_sub = gather_bits(r, qubits, n_qubits);
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~mask) != (c & ~mask)) {
                continue;
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                op(static_cast<Eigen::Index>(r_sub), static_cast<Eigen::Index>(gather_bits(c, qubits, n_qubits)));
        }
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace qrouter
