// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <functional>

#include "tpq/pauli.hpp"

namespace tpq {

inline constexpr int kDefaultMaxDenseQubits = 14;

/// Dense Hermitian matrix on n qubits together with its eigendecomposition.
///
/// The decomposition is computed once at construction (LAPACK divide and
/// conquer; the real symmetric driver is used when the matrix has no
/// imaginary part), so instances are immutable and can be shared read-only
/// between threads.
class DenseHermitian {
 public:
  /// Throws InvalidArgument if the matrix is not square with power-of-two
  /// dimension or deviates from Hermiticity by more than 1e-12.
  explicit DenseHermitian(Eigen::MatrixXcd matrix);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  bool is_real() const { return real_; }

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  /// Ascending.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  /// Orthonormal columns matching eigenvalues().
  const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }

  double min_eigenvalue() const { return eigenvalues_(0); }
  double max_eigenvalue() const { return eigenvalues_(eigenvalues_.size() - 1); }

  /// V diag(f(lambda)) V^dagger.
  Eigen::MatrixXcd function(const std::function<double(double)>& f) const;

  /// V diag(f(lambda)) V^dagger psi without forming the matrix.
  Eigen::VectorXcd apply_function(const std::function<double(double)>& f,
                                  const Eigen::VectorXcd& psi) const;

 private:
  int num_qubits_ = 0;
  bool real_ = false;
  Eigen::MatrixXcd matrix_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// Kronecker-product expansion of a Pauli sum, without diagonalization.
Eigen::MatrixXcd pauli_matrix(const PauliSum& p, int num_qubits,
                              int max_qubits = kDefaultMaxDenseQubits);

/// Throws DimensionOverflow when num_qubits > max_qubits and IndexOutOfRange
/// when a term acts beyond num_qubits.
DenseHermitian to_dense(const PauliSum& p, int num_qubits,
                        int max_qubits = kDefaultMaxDenseQubits);

}  // namespace tpq
