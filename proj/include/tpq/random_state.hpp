// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "tpq/circuit.hpp"
#include "tpq/lattice.hpp"
#include "tpq/statevector.hpp"

namespace tpq {

enum class Entangler : std::uint8_t { CZ, CNOT };

/// Layered random circuit: `depth` blocks, each a layer of single-qubit
/// gates drawn from {RX(pi/2), RY(pi/2), T} followed by one entangling layer.
struct RandomCircuitSpec {
  int depth = 20;
  LatticeSpec lattice;
  Entangler entangler = Entangler::CZ;
  std::uint64_t seed = 0;
};

/// The 2k fixed entangling patterns of a k-dimensional lattice, in the order
/// they are cycled through. 1D: even bonds then odd bonds. 2D: horizontal
/// bonds with even/odd left column, then vertical bonds with even/odd top row.
std::vector<std::vector<SitePair>> entangling_patterns(const LatticeSpec& lattice);

/// Block j (0-based) uses pattern j mod 2k. For every qubit the gate of block
/// j >= 1 is drawn uniformly from the two gates other than its block j-1
/// choice; block 0 draws from all three. Deterministic in `spec.seed`.
Circuit build_random_circuit(const RandomCircuitSpec& spec);

/// build_random_circuit applied to |0...0>.
StateVector random_circuit_state(const RandomCircuitSpec& spec);

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
StateVector sample_haar_state(int num_qubits, std::uint64_t seed);

/// Shannon entropy -sum p_k ln p_k of the computational-basis distribution.
double state_entropy(const StateVector& psi);

/// Mean entropy of a Haar-random state on n qubits: ln(2^n) - 1 + gamma.
double haar_entropy_reference(int num_qubits);

}  // namespace tpq
