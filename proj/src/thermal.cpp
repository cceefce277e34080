// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/thermal.hpp"

#include <cmath>
#include <limits>

#include "tpq/error.hpp"

namespace tpq {

namespace {

void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be finite and >= 0");
  }
}

}  // namespace

ThermalOperator::ThermalOperator(std::shared_ptr<const DenseHermitian> hamiltonian,
                                 double beta)
    : hamiltonian_(std::move(hamiltonian)), beta_(beta) {
  if (!hamiltonian_) throw InvalidArgument("null Hamiltonian");
  check_beta(beta);
  // Shift by the ground energy so the largest weight is exactly 1.
  const double e0 = hamiltonian_->min_eigenvalue();
  const Eigen::VectorXd& lambda = hamiltonian_->eigenvalues();
  Eigen::VectorXd w = lambda.unaryExpr(
      [&](double l) { return std::exp(-beta * (l - e0) / 2); });
  scaled_ = hamiltonian_->eigenvectors() * w.cast<Complex>().asDiagonal() *
            hamiltonian_->eigenvectors().adjoint();
  const double s = scaled_.cwiseAbs().maxCoeff();
  scaled_ /= s;
  scaled_eigenvalues_ = w / s;
  log_scale_ = -beta * e0 / 2 + std::log(s);
}

double ThermalOperator::scale() const { return std::exp(log_scale_); }

Eigen::MatrixXcd ThermalOperator::matrix() const { return scale() * scaled_; }

ThermalOperator ThermalOperator::rescaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidArgument("rescale factor must be positive");
  }
  ThermalOperator out = *this;
  out.log_scale_ += std::log(c);
  return out;
}

ThermalOperator exact_thermal_operator(std::shared_ptr<const DenseHermitian> h,
                                       double beta) {
  return ThermalOperator(std::move(h), beta);
}

StateVector apply_exact(const ThermalOperator& q, const StateVector& psi) {
  if (psi.num_qubits() != q.num_qubits()) {
    throw InvalidArgument("state and operator sizes differ");
  }
  StateVector out(psi.num_qubits(), q.scaled_matrix() * psi.amplitudes());
  out.normalize();
  return out;
}

StateVector apply_exact(const DenseHermitian& h, double beta,
                        const StateVector& psi) {
  check_beta(beta);
  if (psi.num_qubits() != h.num_qubits()) {
    throw InvalidArgument("state and Hamiltonian sizes differ");
  }
  const double e0 = h.min_eigenvalue();
  StateVector out(psi.num_qubits(),
                  h.apply_function(
                      [&](double l) { return std::exp(-beta * (l - e0) / 2); },
                      psi.amplitudes()));
  out.normalize();
  return out;
}

}  // namespace tpq
