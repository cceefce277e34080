#include <gtest/gtest.h>

#include <memory>

#include "oracles.hpp"
#include "tpq/error.hpp"
#include "tpq/thermal.hpp"

using namespace tpq;
using oracle::Mat;

namespace {

std::shared_ptr<const DenseHermitian> heisenberg(int n) {
  return std::make_shared<const DenseHermitian>(
      to_dense(build_heisenberg(LatticeSpec::chain(n)), n));
}

}  // namespace

TEST(ThermalOperator, BetaZeroIsIdentity) {
  const ThermalOperator q(heisenberg(3), 0.0);
  EXPECT_LT((q.scaled_matrix() - Mat::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(q.scale(), 1.0, 1e-12);
}

TEST(ThermalOperator, DiagonalExample) {
  PauliSum z;
  z.terms.push_back(PauliTerm::parse(1.0, "Z0"));
  const ThermalOperator q(std::make_shared<const DenseHermitian>(to_dense(z, 1)), 2.0);
  const Mat m = q.matrix();
  EXPECT_NEAR(m(0, 0).real(), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(m(1, 1).real(), std::exp(1.0), 1e-12);
  EXPECT_NEAR(std::abs(m(0, 1)), 0.0, 1e-15);
}

TEST(ThermalOperator, MatchesTaylorOracle) {
  const auto h = heisenberg(2);
  const ThermalOperator q(h, 1.0);
  const Mat ref = oracle::expm(-0.5 * h->matrix());
  EXPECT_LT((q.matrix() - ref).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_NEAR(q.scaled_matrix().cwiseAbs().maxCoeff(), 1.0, 1e-15);
  // Scaled eigenvalues are aligned with the Hamiltonian eigenvectors.
  const Mat& v = h->eigenvectors();
  const Mat rec = v * q.scaled_eigenvalues().cast<Complex>().asDiagonal() * v.adjoint();
  EXPECT_LT((rec - q.scaled_matrix()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(q.scaled_matrix().imag().cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ThermalOperator, LargeBetaStaysFinite) {
  const ThermalOperator q(heisenberg(4), 2000.0);
  EXPECT_TRUE(q.scaled_matrix().allFinite());
  EXPECT_TRUE(std::isfinite(q.log_scale()));
  EXPECT_GT(q.log_scale(), 700.0);  // e^{log s} overflows a double
}

TEST(ApplyExact, LargeBetaProjectsOnGroundState) {
  const auto h = heisenberg(4);
  const StateVector psi(4, oracle::random_state(4, 3));
  const StateVector out = apply_exact(*h, 50.0, psi);
  const Complex g = h->eigenvectors().col(0).dot(out.amplitudes());
  EXPECT_GT(std::norm(g), 0.999);
}

TEST(ApplyExact, DenseAndSpectralRoutesAgree) {
  const auto h = heisenberg(4);
  for (double beta : {0.0, 0.3, 1.0, 5.0}) {
    const StateVector psi(4, oracle::random_state(4, 10));
    const StateVector a = apply_exact(ThermalOperator(h, beta), psi);
    const StateVector b = apply_exact(*h, beta, psi);
    EXPECT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-12) << beta;
    const oracle::Vec ref = oracle::expm(-beta / 2 * h->matrix()) * psi.amplitudes();
    EXPECT_LT((a.amplitudes() - ref.normalized()).norm(), 1e-9);
  }
  const StateVector psi(4, oracle::random_state(4, 1));
  EXPECT_LT((apply_exact(*h, 0.0, psi).amplitudes() - psi.amplitudes()).norm(), 1e-14);
}

TEST(ApplyExact, ScaleInvariance) {
  const auto h = heisenberg(3);
  const ThermalOperator q(h, 0.8);
  const StateVector psi(3, oracle::random_state(3, 2));
  const StateVector a = apply_exact(q, psi);
  for (double c : {1e-6, 3.0, 1e6}) {
    const ThermalOperator qc = q.rescaled(c);
    EXPECT_NEAR(qc.log_scale(), q.log_scale() + std::log(c), 1e-12);
    EXPECT_LT((apply_exact(qc, psi).amplitudes() - a.amplitudes()).norm(), 1e-12);
  }
  EXPECT_THROW(q.rescaled(-1.0), InvalidArgument);
}

TEST(ThermalOperator, Errors) {
  EXPECT_THROW(ThermalOperator(heisenberg(2), -0.1), InvalidArgument);
  EXPECT_THROW(ThermalOperator(nullptr, 1.0), InvalidArgument);
  EXPECT_THROW(apply_exact(ThermalOperator(heisenberg(2), 1.0), StateVector(3)), InvalidArgument);
}
