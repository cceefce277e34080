// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpq/lattice.hpp"

namespace tpq {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { X, Y, Z };

char to_char(Pauli p);

/// Bit-mask form of a Pauli string, acting on basis states as
///   P|k> = i^{y_count} (-1)^{popcount(k & z)} |k ^ x>.
/// Y positions are set in both masks.
struct PauliMasks {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int y_count = 0;

  /// Matrix element <k ^ x | P | k>.
  Complex phase(std::uint64_t k) const;
};

/// Real-coefficient Pauli string. An empty operator map is the identity.
struct PauliTerm {
  double coefficient = 1.0;
  std::map<int, Pauli> operators;

  PauliTerm() = default;
  PauliTerm(double coeff, std::map<int, Pauli> ops);

  /// Parses whitespace-separated factors such as "X0 Y3 Z4".
  static PauliTerm parse(double coeff, std::string_view factors);

  PauliMasks masks() const;
  /// Highest qubit index + 1 (0 for the identity).
  int width() const;
  std::vector<int> support() const;
  std::string to_string() const;
};

/// Hermitian operator written as a real linear combination of Pauli strings.
struct PauliSum {
  std::vector<PauliTerm> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  int width() const;
  std::string to_string() const;
};

/// out = P|in> for the string P (coefficient ignored). Spans must have equal
/// length and must not alias.
void apply_pauli_string(const PauliMasks& masks, std::span<const Complex> in,
                        std::span<Complex> out);

/// Heisenberg XYZ model with transverse field on an open lattice:
///   H = sum_<ij> (Jx X_i X_j + Jy Y_i Y_j + Jz Z_i Z_j) + hx sum_i X_i.
/// Terms are ordered by bond, then x, y, z; field terms follow by site.
/// Terms with a zero coupling are omitted.
PauliSum build_heisenberg(const LatticeSpec& lattice);

/// sum_i X_i or sum_i Z_i over n sites, used as alternative observables.
PauliSum magnetization(int n, Pauli axis);

}  // namespace tpq
