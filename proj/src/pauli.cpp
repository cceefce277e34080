// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

#include "tpq/error.hpp"

namespace tpq {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

Complex PauliMasks::phase(std::uint64_t k) const {
  static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int sign = std::popcount(k & z) & 1;
  const Complex p = kIPowers[y_count & 3];
  return sign ? -p : p;
}

PauliTerm::PauliTerm(double coeff, std::map<int, Pauli> ops)
    : coefficient(coeff), operators(std::move(ops)) {
  for (const auto& [q, p] : operators) {
    if (q < 0 || q >= 64) {
      throw InvalidArgument("Pauli qubit index out of range: " +
                            std::to_string(q));
    }
  }
}

PauliTerm PauliTerm::parse(double coeff, std::string_view factors) {
  std::map<int, Pauli> ops;
  std::istringstream in{std::string(factors)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) {
      throw InvalidArgument("bad Pauli factor '" + tok + "'");
    }
    Pauli p;
    switch (tok[0]) {
      case 'X':
      case 'x':
        p = Pauli::X;
        break;
      case 'Y':
      case 'y':
        p = Pauli::Y;
        break;
      case 'Z':
      case 'z':
        p = Pauli::Z;
        break;
      default:
        throw InvalidArgument("bad Pauli factor '" + tok + "'");
    }
    int q = -1;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("bad Pauli factor '" + tok + "'");
    }
    if (!ops.emplace(q, p).second) {
      throw InvalidArgument("repeated qubit in Pauli string '" +
                            std::string(factors) + "'");
    }
  }
  return PauliTerm(coeff, std::move(ops));
}

PauliMasks PauliTerm::masks() const {
  PauliMasks m;
  for (const auto& [q, p] : operators) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (p != Pauli::Z) m.x |= bit;
    if (p != Pauli::X) m.z |= bit;
    if (p == Pauli::Y) ++m.y_count;
  }
  return m;
}

int PauliTerm::width() const {
  return operators.empty() ? 0 : operators.rbegin()->first + 1;
}

std::vector<int> PauliTerm::support() const {
  std::vector<int> s;
  s.reserve(operators.size());
  for (const auto& [q, p] : operators) s.push_back(q);
  return s;
}

std::string PauliTerm::to_string() const {
  std::ostringstream out;
  out << coefficient;
  if (operators.empty()) {
    out << "*I";
  }
  for (const auto& [q, p] : operators) {
    out << (q == operators.begin()->first ? "*" : " ") << to_char(p) << q;
  }
  return out.str();
}

int PauliSum::width() const {
  int w = 0;
  for (const auto& t : terms) w = std::max(w, t.width());
  return w;
}

std::string PauliSum::to_string() const {
  std::string s;
  for (const auto& t : terms) {
    if (!s.empty()) s += " + ";
    s += t.to_string();
  }
  return s.empty() ? "0" : s;
}

void apply_pauli_string(const PauliMasks& masks, std::span<const Complex> in,
                        std::span<Complex> out) {
  const std::uint64_t dim = in.size();
  for (std::uint64_t k = 0; k < dim; ++k) {
    out[k ^ masks.x] = masks.phase(k) * in[k];
  }
}

PauliSum build_heisenberg(const LatticeSpec& lattice) {
  const auto pairs = nearest_neighbor_pairs(lattice);
  PauliSum h;
  h.terms.reserve(3 * pairs.size() + lattice.num_sites());
  const std::pair<double, Pauli> couplings[] = {
      {lattice.jx, Pauli::X}, {lattice.jy, Pauli::Y}, {lattice.jz, Pauli::Z}};
  for (const auto& [i, j] : pairs) {
    for (const auto& [coupling, axis] : couplings) {
      if (coupling != 0.0) {
        h.terms.emplace_back(coupling, std::map<int, Pauli>{{i, axis}, {j, axis}});
      }
    }
  }
  if (lattice.hx != 0.0) {
    for (int i = 0; i < lattice.num_sites(); ++i) {
      h.terms.emplace_back(lattice.hx, std::map<int, Pauli>{{i, Pauli::X}});
    }
  }
  return h;
}

PauliSum magnetization(int n, Pauli axis) {
  PauliSum m;
  for (int i = 0; i < n; ++i) {
    m.terms.emplace_back(1.0, std::map<int, Pauli>{{i, axis}});
  }
  return m;
}

}  // namespace tpq
