// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <memory>

#include "tpq/statevector.hpp"
#include "tpq/thermal.hpp"

namespace tpq {

/// Single-ancilla dilation of the scaled thermal operator Q' = Q / s:
///
///   Omega = exp(i eps [[0, -i Q'], [i Q', 0]])
///         = [[cos(eps Q'),  sin(eps Q')],
///            [-sin(eps Q'), cos(eps Q')]]
///
/// with the ancilla as the most significant qubit. Starting from |1> (x) psi
/// and post-selecting the ancilla on |0> leaves sin(eps Q') psi, which tends
/// to eps Q' psi as eps -> 0.
class DilatedOperator {
 public:
  DilatedOperator(std::shared_ptr<const ThermalOperator> q, double epsilon);

  double epsilon() const { return epsilon_; }
  const ThermalOperator& thermal() const { return *q_; }
  /// Dense 2^{N+1} unitary.
  const Eigen::MatrixXcd& omega() const { return omega_; }
  int ancilla_qubit() const { return q_->num_qubits(); }

 private:
  std::shared_ptr<const ThermalOperator> q_;
  double epsilon_;
  Eigen::MatrixXcd omega_;
};

/// Omega for the given operator, built from the spectral decomposition.
Eigen::MatrixXcd dilated_omega(const ThermalOperator& q, double epsilon);

struct DilationResult {
  StateVector state;                 // sin(eps Q') psi, normalized
  double success_probability = 0.0;  // P0 = ||sin(eps Q') psi||^2
  double fidelity = 0.0;             // |<state | Q psi / ||Q psi||>|
};

/// Throws ZeroProbability if P0 underflows.
DilationResult apply_dilated(const DilatedOperator& op, const StateVector& psi);

/// CNOT count of the structured decomposition
///   Omega = (I (x) V) UCRY(-2 eps q_k) (I (x) V^dagger)
/// where V diagonalizes Q' and the uniformly controlled RY on the ancilla is
/// synthesized as a Gray-code walk (2^N CNOTs). V and V^dagger are counted
/// with the quantum Shannon decomposition bound for a generic N-qubit
/// unitary, which is a closed-form count rather than a synthesized circuit.
struct DilationResources {
  std::size_t rotation_cnots = 0;
  std::size_t basis_change_cnots = 0;
  std::size_t cnot_count() const { return rotation_cnots + basis_change_cnots; }
  double generation_seconds = 0.0;
  Circuit rotation_circuit;  // N + 1 qubits, acting in the eigenbasis of Q'
};

DilationResources dilation_resources(const ThermalOperator& q, double epsilon);

/// CNOTs used by the quantum Shannon decomposition of a generic n-qubit
/// unitary: (23 * 4^n - 72 * 2^n + 64) / 48 for n >= 2, 0 below.
std::size_t shannon_cnot_count(int n);

}  // namespace tpq
