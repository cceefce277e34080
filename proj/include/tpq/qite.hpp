// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpq/circuit.hpp"
#include "tpq/lattice.hpp"
#include "tpq/pauli.hpp"
#include "tpq/statevector.hpp"

namespace tpq {

struct QiteSpec {
  double beta = 1.0;
  int n_steps = 10;
  /// Qubits spanned by each local fit; 0 selects min(N, 3).
  int domain = 0;
  double regularization = 1e-8;

  /// Imaginary-time step (beta / 2) / n_steps.
  double step() const { return beta / 2.0 / n_steps; }
};

struct QiteResult {
  StateVector state;
  Circuit circuit;
  std::vector<std::string> warnings;
};

/// Qubits used to fit a term with the given support: the `domain_size`
/// lattice sites closest to the support in Manhattan distance, ties broken
/// by lower index. On a chain this is the contiguous window centred on the
/// support and clipped at the ends. The support is always included, even
/// when it is larger than domain_size.
std::vector<int> qite_domain(const LatticeSpec& lattice, const std::vector<int>& support,
                             int domain_size);

/// Inexact quantum imaginary-time evolution of psi under exp(-beta H / 2).
///
/// Each of the n_steps steps visits the Hamiltonian terms in order. For a
/// term h the normalized target is phi = exp(-dtau h) psi / ||.||, and the
/// real vector x over the non-identity Pauli strings sigma_I on the term's
/// domain solves
///   (S + S^T + reg * 1) x = b,
///   S_IJ = <psi|sigma_I sigma_J|psi>,  b_I = -2 Im <psi|sigma_I|phi - psi>,
/// i.e. x minimizes || (phi - psi) + i sum_I x_I sigma_I psi ||. The step
/// unitary is then applied as the ordered product of exp(-i x_I sigma_I),
/// each emitted as a CNOT-ladder Pauli gadget. Replaying the returned circuit
/// on psi reproduces the returned state.
///
/// Throws SingularSystem if the regularized system cannot be solved. When a
/// term's support exceeds the domain size a warning is recorded and the
/// support is used as the domain.
QiteResult qite_evolve(const QiteSpec& spec, const PauliSum& h, const LatticeSpec& lattice,
                       const StateVector& psi);

struct QiteResources {
  std::size_t cnot_count = 0;
  double generation_seconds = 0.0;
};

/// CNOT count of the gadget circuit from qite_evolve on psi, and the wall
/// time spent generating it.
QiteResources qite_resources(const QiteSpec& spec, const PauliSum& h,
                             const LatticeSpec& lattice, const StateVector& psi);

}  // namespace tpq
