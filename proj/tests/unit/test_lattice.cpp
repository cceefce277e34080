#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "tpq/dense_hermitian.hpp"
#include "tpq/error.hpp"
#include "tpq/lattice.hpp"
#include "tpq/pauli.hpp"

using namespace tpq;

namespace {

// Every pair of sites at grid distance one, by brute force over all pairs.
std::set<SitePair> brute_force_bonds(int rows, int cols) {
  std::set<SitePair> out;
  for (int a = 0; a < rows * cols; ++a) {
    for (int b = a + 1; b < rows * cols; ++b) {
      const int dr = std::abs(a / cols - b / cols);
      const int dc = std::abs(a % cols - b % cols);
      if (dr + dc == 1) out.emplace(a, b);
    }
  }
  return out;
}

}  // namespace

TEST(Lattice, ChainPairs) {
  const auto pairs = nearest_neighbor_pairs(LatticeSpec::chain(3));
  EXPECT_EQ(pairs, (std::vector<SitePair>{{0, 1}, {1, 2}}));
}

TEST(Lattice, SquarePairsRowMajor) {
  const auto pairs = nearest_neighbor_pairs(LatticeSpec::grid(2, 2));
  EXPECT_EQ(pairs, (std::vector<SitePair>{{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
}

TEST(Lattice, GridPairCountsMatchBruteForce) {
  for (int rows = 1; rows <= 5; ++rows) {
    for (int cols = 1; cols <= 5; ++cols) {
      if (rows * cols < 2) continue;
      const auto pairs = nearest_neighbor_pairs(LatticeSpec::grid(rows, cols));
      const std::set<SitePair> got(pairs.begin(), pairs.end());
      EXPECT_EQ(got.size(), pairs.size());
      EXPECT_EQ(got, brute_force_bonds(rows, cols)) << rows << "x" << cols;
      EXPECT_EQ(pairs.size(),
                static_cast<std::size_t>((rows - 1) * cols + (cols - 1) * rows));
    }
  }
  EXPECT_EQ(nearest_neighbor_pairs(LatticeSpec::grid(4, 3)).size(), 17u);
}

TEST(Lattice, Validation) {
  EXPECT_THROW(LatticeSpec::chain(1), InvalidArgument);
  LatticeSpec bad;
  bad.extents = {2, 2, 2};
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad.extents = {0, 3};
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad.extents = {3};
  bad.jz = std::nan("");
  EXPECT_THROW(bad.validate(), InvalidArgument);
  LatticeSpec one;
  one.extents = {1};
  EXPECT_NO_THROW(one.validate_geometry());
  EXPECT_THROW(one.validate(), InvalidArgument);
}

TEST(Lattice, Coordinates) {
  const auto g = LatticeSpec::grid(4, 3);
  EXPECT_EQ(g.coordinates(7), (std::vector<int>{2, 1}));
  EXPECT_EQ(manhattan_distance(g, 0, 11), 5);
}

TEST(Heisenberg, TwoSites) {
  const PauliSum h = build_heisenberg(LatticeSpec::chain(2));
  EXPECT_EQ(h.to_string(), "0.5*X0 X1 + 1.25*Y0 Y1 + 2*Z0 Z1 + 1*X0 + 1*X1");
  const auto m = oracle::sum_matrix(h, 2);
  EXPECT_NEAR(std::abs(m.trace()), 0.0, 1e-14);
}

TEST(Heisenberg, TermCounts) {
  EXPECT_EQ(build_heisenberg(LatticeSpec::chain(3)).size(), 9u);
  EXPECT_EQ(build_heisenberg(LatticeSpec::grid(4, 3)).size(), 3u * 17 + 12);
  EXPECT_TRUE(build_heisenberg(LatticeSpec::chain(4, 0, 0, 0, 0)).empty());
}

TEST(Heisenberg, DenseMatchesKronecker) {
  for (const auto& lat : {LatticeSpec::chain(2), LatticeSpec::chain(4), LatticeSpec::grid(2, 3)}) {
    const int n = lat.num_sites();
    const PauliSum h = build_heisenberg(lat);
    const Eigen::MatrixXcd ref = oracle::sum_matrix(h, n);
    const DenseHermitian d = to_dense(h, n);
    EXPECT_LT((d.matrix() - ref).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(d.matrix().imag().cwiseAbs().maxCoeff(), 1e-12);  // real symmetric
    EXPECT_NEAR(std::abs(d.matrix().trace()), 0.0, 1e-10);
  }
}

TEST(ToDense, SmallExamples) {
  PauliSum x;
  x.terms.push_back(PauliTerm::parse(1.0, "X0"));
  const DenseHermitian dx = to_dense(x, 1);
  Eigen::Matrix2cd ex;
  ex << 0, 1, 1, 0;
  EXPECT_LT((dx.matrix() - Eigen::MatrixXcd(ex)).norm(), 1e-15);

  PauliSum zz;
  zz.terms.push_back(PauliTerm::parse(2.0, "Z0 Z1"));
  const auto dzz = to_dense(zz, 2).matrix();
  EXPECT_LT((dzz.diagonal() - Eigen::Vector4cd(2, -2, -2, 2)).norm(), 1e-15);
}

TEST(ToDense, Guards) {
  PauliSum h = build_heisenberg(LatticeSpec::chain(3));
  EXPECT_THROW(to_dense(h, 2), IndexOutOfRange);
  EXPECT_THROW(to_dense(build_heisenberg(LatticeSpec::chain(15)), 15), DimensionOverflow);
  EXPECT_THROW(to_dense(h, 5, 4), DimensionOverflow);
}
