#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "tpq/error.hpp"
#include "tpq/pauli.hpp"

using namespace tpq;

TEST(PauliTerm, Parse) {
  const PauliTerm t = PauliTerm::parse(0.25, "X0 y3 Z4");
  EXPECT_EQ(t.width(), 5);
  EXPECT_EQ(t.support(), (std::vector<int>{0, 3, 4}));
  EXPECT_EQ(t.operators.at(3), Pauli::Y);
  EXPECT_THROW(PauliTerm::parse(1.0, "X0 Z0"), InvalidArgument);
  EXPECT_THROW(PauliTerm::parse(1.0, "Q1"), InvalidArgument);
  EXPECT_THROW(PauliTerm::parse(1.0, "X"), InvalidArgument);
  EXPECT_TRUE(PauliTerm::parse(1.0, "").operators.empty());
}

TEST(PauliTerm, MasksActLikeKroneckerProduct) {
  const int n = 4;
  const char* strings[] = {"X0", "Y1", "Z2", "X0 Y1 Z2 Y3", "Y0 Y3", "Z1 Z3", "X2 X3", ""};
  for (const char* s : strings) {
    const PauliTerm t = PauliTerm::parse(1.0, s);
    const oracle::Mat ref = oracle::term_matrix(t, n);
    for (int seed = 0; seed < 3; ++seed) {
      const oracle::Vec psi = oracle::random_state(n, seed);
      std::vector<Complex> out(psi.size());
      apply_pauli_string(t.masks(), std::span<const Complex>(psi.data(), psi.size()), out);
      const oracle::Vec got = Eigen::Map<const oracle::Vec>(out.data(), psi.size());
      EXPECT_LT((got - ref * psi).norm(), 1e-13) << s;
    }
  }
}

TEST(PauliSum, Magnetization) {
  const PauliSum mz = magnetization(3, Pauli::Z);
  ASSERT_EQ(mz.size(), 3u);
  const auto m = oracle::sum_matrix(mz, 3);
  EXPECT_NEAR(m(0, 0).real(), 3.0, 1e-15);
  EXPECT_NEAR(m(7, 7).real(), -3.0, 1e-15);
  EXPECT_EQ(mz.width(), 3);
}
