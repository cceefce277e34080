// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "tpq/pauli.hpp"
#include "tpq/statevector.hpp"

namespace tpq {

/// <psi|A|psi> evaluated term by term. The imaginary part is dropped once it
/// is confirmed below 1e-10 (relative to the coefficient scale).
double expectation(const StateVector& psi, const PauliSum& a);
double expectation(const StateVector& psi, const PauliTerm& term);

/// Projector onto `outcomes[i]` for each `ancillas[i]`, renormalized. The
/// returned state lives on the remaining qubits, in their original order.
struct Postselection {
  StateVector state;
  double probability = 0.0;
};

/// Throws ZeroProbability when the projected weight is below 1e-14 and
/// InvalidArgument for repeated ancillas.
Postselection postselect(const StateVector& psi, const std::vector<int>& ancillas,
                         const std::vector<int>& outcomes);

/// Probability that qubit q is measured as 0.
double probability_zero(const StateVector& psi, int q);

struct SampledValue {
  double mean = 0.0;
  double standard_error = 0.0;
};

/// Finite-shot estimate of <A>: every Pauli term is rotated into the Z basis
/// (H for X, RX(pi/2) for Y), `shots` bitstrings are drawn from the Born
/// distribution and the eigenvalue parity is averaged. Term errors are
/// combined in quadrature with the coefficients.
SampledValue sample_expectation(const StateVector& psi, const PauliSum& a,
                                int shots, std::uint64_t seed);

}  // namespace tpq
