// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "tpq/circuit.hpp"
#include "tpq/statevector.hpp"
#include "tpq/thermal.hpp"

namespace tpq {

/// Gray code of l.
constexpr std::uint64_t gray_code(std::uint64_t l) { return l ^ (l >> 1); }

/// Rotation angles phi for the Gray-code walk that realizes a uniformly
/// controlled rotation with per-control-state angles theta:
///   phi_l = 2^{-m} sum_k (-1)^{popcount(k & gray(l))} theta_k.
/// Computed with a fast Walsh-Hadamard transform, O(m 2^m).
std::vector<double> gray_walk_angles(std::span<const double> thetas);

/// Uniformly controlled RY on `target`: for control state k (bit b of k is the
/// value of controls[b]) the target sees RY(thetas[k]). Emits alternating RY
/// and CNOT gates in Gray-code order. Rotations with |phi| <= threshold are
/// dropped and the CNOTs around them merged (threshold 0 keeps all of them,
/// giving exactly 2^m CNOTs).
void append_uniformly_controlled_ry(Circuit& circuit, std::span<const double> thetas,
                                    std::span<const int> controls, int target,
                                    double threshold = 0.0);

struct FableOptions {
  /// Compression threshold on the Gray-walk angles; 0 disables compression.
  double threshold = 0.0;
};

/// Block encoding of a real 2^N x 2^N matrix A with |a_ij| <= 1.
///
/// Register layout: system qubits 0..N-1, index register N..2N-1, rotation
/// ancilla 2N. With all N+1 ancillas in |0>, the leading block of the circuit
/// unitary is A / 2^N.
struct BlockEncoding {
  int system_qubits = 0;
  int ancillas = 0;
  double subnormalization = 1.0;  // alpha: leading block = A / alpha
  double log_operator_scale = 0.0;  // log s, with A = Q / s
  Circuit circuit;
  double generation_seconds = 0.0;

  std::size_t cnot_count() const { return circuit.cnot_count(); }
  /// Dense unitary reconstructed by simulating every basis column.
  Eigen::MatrixXcd unitary() const;
  std::vector<int> ancilla_qubits() const;
};

/// Throws EntryOutOfRange if some |a_ij| > 1 + 1e-12 and InvalidArgument if
/// A is not real or not square with a power-of-two dimension.
BlockEncoding fable_encode(const Eigen::MatrixXcd& a, FableOptions options = {});
BlockEncoding fable_encode(const ThermalOperator& q, FableOptions options = {});

struct FableResult {
  StateVector state;
  double success_probability = 0.0;
};

/// Runs the circuit on |0>^{N+1} (x) psi and post-selects every ancilla on 0.
FableResult apply_fable(const BlockEncoding& be, const StateVector& psi);

/// Brute-force dense unitary of a circuit, one simulated column per basis
/// state.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

}  // namespace tpq
