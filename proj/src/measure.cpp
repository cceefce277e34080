// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "tpq/error.hpp"

namespace tpq {

double expectation(const StateVector& psi, const PauliTerm& term) {
  if (term.width() > psi.num_qubits()) {
    throw IndexOutOfRange("observable acts outside the state register");
  }
  const PauliMasks m = term.masks();
  const auto& a = psi.amplitudes();
  Complex acc = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const auto kk = static_cast<std::uint64_t>(k);
    acc += std::conj(a(static_cast<Eigen::Index>(kk ^ m.x))) * m.phase(kk) *
           a(k);
  }
  if (std::abs(acc.imag()) > 1e-10) {
    throw Error("non-Hermitian residue in Pauli expectation: " +
                std::to_string(acc.imag()));
  }
  return term.coefficient * acc.real();
}

double expectation(const StateVector& psi, const PauliSum& a) {
  double total = 0.0;
  for (const auto& t : a.terms) total += expectation(psi, t);
  return total;
}

Postselection postselect(const StateVector& psi, const std::vector<int>& ancillas,
                         const std::vector<int>& outcomes) {
  if (ancillas.size() != outcomes.size()) {
    throw InvalidArgument("ancilla and outcome lists differ in length");
  }
  const int n = psi.num_qubits();
  std::uint64_t mask = 0;
  std::uint64_t want = 0;
  for (std::size_t i = 0; i < ancillas.size(); ++i) {
    const int q = ancillas[i];
    if (q < 0 || q >= n) throw IndexOutOfRange("ancilla outside register");
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (mask & bit) throw InvalidArgument("repeated ancilla qubit");
    mask |= bit;
    if (outcomes[i] != 0 && outcomes[i] != 1) {
      throw InvalidArgument("outcome bits must be 0 or 1");
    }
    if (outcomes[i]) want |= bit;
  }
  std::vector<int> kept;
  for (int q = 0; q < n; ++q) {
    if (!(mask >> q & 1)) kept.push_back(q);
  }
  const int m = static_cast<int>(kept.size());
  Eigen::VectorXcd out(Eigen::Index{1} << m);
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    std::uint64_t k = want;
    for (int b = 0; b < m; ++b) {
      if (j >> b & 1) k |= std::uint64_t{1} << kept[b];
    }
    out(j) = psi[static_cast<Eigen::Index>(k)];
  }
  const double p = out.squaredNorm();
  if (p < 1e-14) {
    throw ZeroProbability("post-selected outcome has probability " +
                          std::to_string(p));
  }
  out /= std::sqrt(p);
  return {StateVector(m, std::move(out)), std::min(p, 1.0)};
}

double probability_zero(const StateVector& psi, int q) {
  if (q < 0 || q >= psi.num_qubits()) throw IndexOutOfRange("bad qubit");
  double p = 0.0;
  for (Eigen::Index k = 0; k < psi.dim(); ++k) {
    if (!(k >> q & 1)) p += std::norm(psi[k]);
  }
  return p;
}

SampledValue sample_expectation(const StateVector& psi, const PauliSum& a,
                                int shots, std::uint64_t seed) {
  if (shots < 1) throw InvalidArgument("shots must be >= 1");
  std::mt19937_64 rng(seed);
  double mean = 0.0;
  double var = 0.0;
  std::vector<double> weights(static_cast<std::size_t>(psi.dim()));
  for (const auto& term : a.terms) {
    if (term.operators.empty()) {
      mean += term.coefficient;
      continue;
    }
    StateVector rotated = psi;
    std::uint64_t support = 0;
    for (const auto& [q, p] : term.operators) {
      support |= std::uint64_t{1} << q;
      if (p == Pauli::X) rotated.apply(Gate{GateKind::H, q});
      if (p == Pauli::Y) rotated.apply(Gate{GateKind::RX90, q});
    }
    for (std::size_t k = 0; k < weights.size(); ++k) {
      weights[k] = std::norm(rotated[static_cast<Eigen::Index>(k)]);
    }
    std::discrete_distribution<std::uint64_t> born(weights.begin(),
                                                   weights.end());
    long plus = 0;
    for (int s = 0; s < shots; ++s) {
      if (!(std::popcount(born(rng) & support) & 1)) ++plus;
    }
    const double m = (2.0 * plus - shots) / shots;
    const double sample_var =
        shots > 1 ? (1.0 - m * m) * shots / (shots - 1.0) : 0.0;
    mean += term.coefficient * m;
    var += term.coefficient * term.coefficient * sample_var / shots;
  }
  return {mean, std::sqrt(var)};
}

}  // namespace tpq
