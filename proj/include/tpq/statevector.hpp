// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "tpq/circuit.hpp"

namespace tpq {

using Complex = std::complex<double>;

/// Dense amplitude vector on n qubits. Qubit 0 is the least significant bit
/// of the basis index.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0> on n qubits.
  explicit StateVector(int num_qubits);
  /// Takes ownership of the amplitudes; their length must be 2^n.
  StateVector(int num_qubits, Eigen::VectorXcd amplitudes);

  static StateVector basis_state(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

  double norm() const { return amplitudes_.norm(); }
  /// Throws ZeroProbability on a (numerically) zero vector.
  void normalize();

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);
  /// Applies a 2x2 unitary (row-major a b / c d) to qubit q.
  void apply_single(int q, const Eigen::Matrix2cd& u);

  /// |ancilla_bits> (x) |this>, with the new qubits above the existing ones.
  StateVector with_ancillas(int count, std::uint64_t ancilla_bits = 0) const;

 private:
  int num_qubits_ = 0;
  Eigen::VectorXcd amplitudes_;
};

StateVector apply_circuit(StateVector psi, const Circuit& circuit);

/// 2x2 matrix of a single-qubit gate.
Eigen::Matrix2cd gate_matrix(const Gate& gate);

/// |<a|b>| for normalized inputs.
double overlap(const StateVector& a, const StateVector& b);
/// |<a|b>|^2 for normalized inputs.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace tpq
