// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <utility>
#include <vector>

namespace tpq {

/// Open-boundary hypercubic spin lattice with uniform XYZ couplings and a
/// transverse field along x.
///
/// Sites are indexed row-major: in two dimensions `extents = {rows, cols}`
/// and site (r, c) is qubit `r * cols + c`.
struct LatticeSpec {
  std::vector<int> extents{2};
  double jx = 0.5;
  double jy = 1.25;
  double jz = 2.0;
  double hx = 1.0;

  static LatticeSpec chain(int n, double jx = 0.5, double jy = 1.25,
                           double jz = 2.0, double hx = 1.0);
  static LatticeSpec grid(int rows, int cols, double jx = 0.5,
                          double jy = 1.25, double jz = 2.0, double hx = 1.0);

  int dimension() const { return static_cast<int>(extents.size()); }
  int num_sites() const;

  /// Throws InvalidArgument unless 1 <= dimension <= 2, every extent is
  /// positive, N >= 2 and the couplings are finite.
  void validate() const;
  /// validate() without the N >= 2 requirement; a one-site chain is a valid
  /// random-circuit register even though it carries no bonds.
  void validate_geometry() const;

  /// Grid coordinates of a site (one entry per dimension).
  std::vector<int> coordinates(int site) const;
};

using SitePair = std::pair<int, int>;

/// Undirected nearest-neighbour bonds, each listed once with i < j.
/// Bonds along the last axis come first, then bonds along the first axis
/// (horizontal before vertical in 2D).
std::vector<SitePair> nearest_neighbor_pairs(const LatticeSpec& lattice);

/// Manhattan distance between two sites on the lattice grid.
int manhattan_distance(const LatticeSpec& lattice, int a, int b);

}  // namespace tpq
