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

#ifndef QROUTER_QSTATE_H
#define QROUTER_QSTATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qrouter {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance applied when a state or density matrix is constructed.
inline constexpr double kStateTolerance = 1e-9;
/// Slack allowed on the smallest eigenvalue of a density matrix.
inline constexpr double kPsdTolerance = 1e-7;

/// Bit position of `qubit` inside a basis index of an `n_qubits` register.
/// Qubit 0 is the most significant bit, so |q0 q1 q2> reads left to right.
constexpr int bit_position(int qubit, int n_qubits) { return n_qubits - 1 - qubit; }

constexpr std::size_t dimension(int n_qubits) { return std::size_t{1} << n_qubits; }

/// Pure n-qubit state with unit norm.
class StateVector {
public:
    /// Throws std::invalid_argument on wrong length, non-finite entries or norm != 1.
    StateVector(int n_qubits, Vector amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }

private:
    int n_qubits_;
    Vector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
public:
    /// Throws std::invalid_argument when any invariant fails.
    DensityMatrix(int n_qubits, Matrix entries);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    double purity() const;

private:
    int n_qubits_;
    Matrix entries_;
};

/// Outcome of checking the density-matrix invariants on a raw matrix.
struct DensityDiagnostics {
    double hermiticity_error = 0.0;  // max |m_ij - conj(m_ji)|
    double trace_error = 0.0;        // |tr m - 1|
    double min_eigenvalue = 0.0;
    bool finite = true;

    bool ok() const {
        return finite && hermiticity_error <= kStateTolerance && trace_error <= kStateTolerance &&
               min_eigenvalue >= -kPsdTolerance;
    }
};

DensityDiagnostics diagnose_density(const Matrix& m);

/// Qubit count for a square matrix of side 2^n, or throws.
int qubits_for_dimension(std::size_t dim);

StateVector basis_state(int n_qubits, std::size_t index);

/// |a> (x) |b>, with `a` occupying the leading (most significant) qubits.
StateVector tensor_product(const StateVector& a, const StateVector& b);

DensityMatrix to_density(const StateVector& psi);

/// Reduced operator on `keep`, ordered by ascending qubit index.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Entropy in bits. Eigenvalues below zero are clipped before the logarithm.
double von_neumann_entropy(const DensityMatrix& rho);

/// Two disjoint qubit groups that together cover a register.
struct Bipartition {
    std::vector<int> first;
    std::vector<int> second;
};

/// Sum of |negative eigenvalues| of the partial transpose over `partition.first`.
double negativity(const DensityMatrix& rho, const Bipartition& partition);

/// True iff |<a|b>| >= 1 - tol. Throws on dimension mismatch.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

/// Max-abs elementwise distance between a and c*b, with c the unit phase that
/// best aligns b to a.
double phase_aligned_distance(const Vector& a, const Vector& b);
double phase_aligned_distance(const Matrix& a, const Matrix& b);

/// Embeds an operator acting on `qubits` (first listed = most significant
/// sub-index bit) into the full 2^n space.
Matrix embed_operator(const Matrix& op, std::span<const int> qubits, int n_qubits);

Matrix kron(const Matrix& a, const Matrix& b);

/// Eigenvalues of a Hermitian matrix in ascending order.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

}  // namespace qrouter

#endif  // QROUTER_QSTATE_H
