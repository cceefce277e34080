// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/random_state.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "tpq/error.hpp"
#include "tpq/rng.hpp"

namespace tpq {

namespace {

constexpr std::array<GateKind, 3> kSingleQubitSet = {GateKind::RX90,
                                                     GateKind::RY90, GateKind::T};

}  // namespace

std::vector<std::vector<SitePair>> entangling_patterns(const LatticeSpec& lattice) {
  lattice.validate_geometry();
  if (lattice.dimension() == 1) {
    std::vector<std::vector<SitePair>> patterns(2);
    for (int i = 0; i + 1 < lattice.extents[0]; ++i) {
      patterns[i % 2].emplace_back(i, i + 1);
    }
    return patterns;
  }
  const int rows = lattice.extents[0];
  const int cols = lattice.extents[1];
  std::vector<std::vector<SitePair>> patterns(4);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      patterns[c % 2].emplace_back(r * cols + c, r * cols + c + 1);
    }
  }
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      patterns[2 + r % 2].emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  }
  return patterns;
}

Circuit build_random_circuit(const RandomCircuitSpec& spec) {
  if (spec.depth < 1) {
    throw InvalidArgument("random circuit depth must be >= 1");
  }
  const auto patterns = entangling_patterns(spec.lattice);
  const int n = spec.lattice.num_sites();
  const GateKind entangler =
      spec.entangler == Entangler::CZ ? GateKind::CZ : GateKind::CNOT;

  Rng rng(spec.seed);
  std::uniform_int_distribution<int> first(0, 2);
  std::uniform_int_distribution<int> other(0, 1);
  std::vector<int> previous(n, -1);

  Circuit circuit(n);
  for (int block = 0; block < spec.depth; ++block) {
    for (int q = 0; q < n; ++q) {
      int pick;
      if (previous[q] < 0) {
        pick = first(rng);
      } else {
        pick = other(rng);
        if (pick >= previous[q]) ++pick;
      }
      previous[q] = pick;
      circuit.add(kSingleQubitSet[pick], q);
    }
    for (const auto& [i, j] : patterns[block % patterns.size()]) {
      circuit.add(entangler, i, j);
    }
  }
  return circuit;
}

StateVector random_circuit_state(const RandomCircuitSpec& spec) {
  return apply_circuit(StateVector(spec.lattice.num_sites()),
                       build_random_circuit(spec));
}

StateVector sample_haar_state(int num_qubits, std::uint64_t seed) {
  if (num_qubits < 1) throw InvalidArgument("need at least one qubit");
  Rng rng(seed);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd amps(Eigen::Index{1} << num_qubits);
  for (Eigen::Index k = 0; k < amps.size(); ++k) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    amps(k) = Complex(re, im);
  }
  StateVector psi(num_qubits, std::move(amps));
  psi.normalize();
  return psi;
}

double state_entropy(const StateVector& psi) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < psi.dim(); ++k) {
    const double p = std::norm(psi[k]);
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

double haar_entropy_reference(int num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("need at least one qubit");
  return num_qubits * std::numbers::ln2 - 1.0 + std::numbers::egamma;
}

}  // namespace tpq
