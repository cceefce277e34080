// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/dilation.hpp"

#include <chrono>
#include <cmath>
#include <vector>

#include "tpq/error.hpp"
#include "tpq/fable.hpp"
#include "tpq/measure.hpp"

namespace tpq {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("dilation epsilon must be positive");
  }
}

}  // namespace

Eigen::MatrixXcd dilated_omega(const ThermalOperator& q, double epsilon) {
  check_epsilon(epsilon);
  const Eigen::MatrixXcd& v = q.hamiltonian().eigenvectors();
  const Eigen::VectorXd& qk = q.scaled_eigenvalues();
  const Eigen::VectorXcd c =
      qk.unaryExpr([&](double x) { return std::cos(epsilon * x); }).cast<Complex>();
  const Eigen::VectorXcd s =
      qk.unaryExpr([&](double x) { return std::sin(epsilon * x); }).cast<Complex>();
  const Eigen::MatrixXcd cos_block = v * c.asDiagonal() * v.adjoint();
  const Eigen::MatrixXcd sin_block = v * s.asDiagonal() * v.adjoint();
  const Eigen::Index d = v.rows();
  Eigen::MatrixXcd omega(2 * d, 2 * d);
  omega.topLeftCorner(d, d) = cos_block;
  omega.topRightCorner(d, d) = sin_block;
  omega.bottomLeftCorner(d, d) = -sin_block;
  omega.bottomRightCorner(d, d) = cos_block;
  return omega;
}

DilatedOperator::DilatedOperator(std::shared_ptr<const ThermalOperator> q,
                                 double epsilon)
    : q_(std::move(q)), epsilon_(epsilon) {
  if (!q_) throw InvalidArgument("null thermal operator");
  omega_ = dilated_omega(*q_, epsilon);
}

DilationResult apply_dilated(const DilatedOperator& op, const StateVector& psi) {
  const int n = op.thermal().num_qubits();
  if (psi.num_qubits() != n) {
    throw InvalidArgument("state size does not match the dilated operator");
  }
  const StateVector in = psi.with_ancillas(1, 1);
  const StateVector out(n + 1, op.omega() * in.amplitudes());
  auto [state, p0] = postselect(out, {op.ancilla_qubit()}, {0});
  const StateVector target = apply_exact(op.thermal(), psi);
  const double f = overlap(state, target);
  return {std::move(state), p0, f};
}

std::size_t shannon_cnot_count(int n) {
  if (n < 2) return 0;
  const std::size_t p4 = std::size_t{1} << (2 * n);
  const std::size_t p2 = std::size_t{1} << n;
  return (23 * p4 + 64 - 72 * p2) / 48;
}

DilationResources dilation_resources(const ThermalOperator& q, double epsilon) {
  check_epsilon(epsilon);
  const auto start = std::chrono::steady_clock::now();
  const int n = q.num_qubits();
  const Eigen::VectorXd& qk = q.scaled_eigenvalues();
  std::vector<double> thetas(static_cast<std::size_t>(qk.size()));
  for (Eigen::Index k = 0; k < qk.size(); ++k) {
    thetas[static_cast<std::size_t>(k)] = -2.0 * epsilon * qk(k);
  }
  std::vector<int> controls(n);
  for (int b = 0; b < n; ++b) controls[b] = b;
  DilationResources r;
  r.rotation_circuit = Circuit(n + 1);
  append_uniformly_controlled_ry(r.rotation_circuit, thetas, controls, n);
  r.rotation_cnots = r.rotation_circuit.cnot_count();
  r.basis_change_cnots = 2 * shannon_cnot_count(n);
  r.generation_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace tpq
