// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <memory>

#include "tpq/dense_hermitian.hpp"
#include "tpq/statevector.hpp"

namespace tpq {

/// Q = exp(-beta H / 2) held as a scaled dense matrix Q' = Q / s with
/// s = max_ij |Q_ij|, so every entry of Q' lies in [-1, 1].
///
/// The scale is tracked in log form: at large beta, s overflows a double long
/// before Q' loses precision.
class ThermalOperator {
 public:
  ThermalOperator(std::shared_ptr<const DenseHermitian> hamiltonian, double beta);

  double beta() const { return beta_; }
  int num_qubits() const { return hamiltonian_->num_qubits(); }
  const DenseHermitian& hamiltonian() const { return *hamiltonian_; }
  std::shared_ptr<const DenseHermitian> hamiltonian_ptr() const { return hamiltonian_; }

  /// Q / s.
  const Eigen::MatrixXcd& scaled_matrix() const { return scaled_; }
  /// Eigenvalues of Q / s, aligned with hamiltonian().eigenvectors().
  const Eigen::VectorXd& scaled_eigenvalues() const { return scaled_eigenvalues_; }
  double log_scale() const { return log_scale_; }
  /// exp(log_scale()); may be +inf for very large beta.
  double scale() const;
  /// s * scaled_matrix().
  Eigen::MatrixXcd matrix() const;

  /// Same operator multiplied by c > 0. The scaled matrix is unchanged.
  ThermalOperator rescaled(double c) const;

 private:
  std::shared_ptr<const DenseHermitian> hamiltonian_;
  double beta_ = 0.0;
  double log_scale_ = 0.0;
  Eigen::MatrixXcd scaled_;
  Eigen::VectorXd scaled_eigenvalues_;
};

ThermalOperator exact_thermal_operator(std::shared_ptr<const DenseHermitian> h,
                                       double beta);

/// Q psi / ||Q psi|| using the dense operator.
StateVector apply_exact(const ThermalOperator& q, const StateVector& psi);

/// Same state computed in the eigenbasis of H without forming Q, for system
/// sizes where the O(4^N) matrix product is not worth paying per beta.
StateVector apply_exact(const DenseHermitian& h, double beta,
                        const StateVector& psi);

}  // namespace tpq
