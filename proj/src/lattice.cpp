// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

#include "tpq/error.hpp"

namespace tpq {

LatticeSpec LatticeSpec::chain(int n, double jx, double jy, double jz,
                               double hx) {
  LatticeSpec spec{{n}, jx, jy, jz, hx};
  spec.validate();
  return spec;
}

LatticeSpec LatticeSpec::grid(int rows, int cols, double jx, double jy,
                              double jz, double hx) {
  LatticeSpec spec{{rows, cols}, jx, jy, jz, hx};
  spec.validate();
  return spec;
}

int LatticeSpec::num_sites() const {
  return std::accumulate(extents.begin(), extents.end(), 1,
                         std::multiplies<>());
}

void LatticeSpec::validate() const {
  validate_geometry();
  if (num_sites() < 2) {
    throw InvalidArgument("lattice needs at least two sites");
  }
}

void LatticeSpec::validate_geometry() const {
  if (extents.empty() || extents.size() > 2) {
    throw InvalidArgument("lattice dimension must be 1 or 2, got " +
                          std::to_string(extents.size()));
  }
  for (int e : extents) {
    if (e < 1) {
      throw InvalidArgument("lattice extents must be positive");
    }
  }
  for (double c : {jx, jy, jz, hx}) {
    if (!std::isfinite(c)) {
      throw InvalidArgument("lattice couplings must be finite");
    }
  }
}

std::vector<int> LatticeSpec::coordinates(int site) const {
  std::vector<int> coords(extents.size());
  for (int axis = dimension() - 1; axis >= 0; --axis) {
    coords[axis] = site % extents[axis];
    site /= extents[axis];
  }
  return coords;
}

std::vector<SitePair> nearest_neighbor_pairs(const LatticeSpec& lattice) {
  lattice.validate();
  std::vector<SitePair> pairs;
  if (lattice.dimension() == 1) {
    for (int i = 0; i + 1 < lattice.extents[0]; ++i) {
      pairs.emplace_back(i, i + 1);
    }
    return pairs;
  }
  const int rows = lattice.extents[0];
  const int cols = lattice.extents[1];
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      pairs.emplace_back(r * cols + c, r * cols + c + 1);
    }
  }
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      pairs.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  }
  return pairs;
}

int manhattan_distance(const LatticeSpec& lattice, int a, int b) {
  const auto ca = lattice.coordinates(a);
  const auto cb = lattice.coordinates(b);
  int d = 0;
  for (std::size_t k = 0; k < ca.size(); ++k) {
    d += std::abs(ca[k] - cb[k]);
  }
  return d;
}

}  // namespace tpq
