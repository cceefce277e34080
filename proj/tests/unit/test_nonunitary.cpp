#include <gtest/gtest.h>

#include <memory>
#include <numbers>

#include "oracles.hpp"
#include "tpq/dilation.hpp"
#include "tpq/error.hpp"
#include "tpq/fable.hpp"
#include "tpq/measure.hpp"
#include "tpq/thermal.hpp"

using namespace tpq;
using oracle::Mat;

namespace {

std::shared_ptr<const DenseHermitian> heisenberg(int n) {
  return std::make_shared<const DenseHermitian>(
      to_dense(build_heisenberg(LatticeSpec::chain(std::max(n, 2))), std::max(n, 2)));
}

std::shared_ptr<const DenseHermitian> single_qubit_h() {
  PauliSum h;
  h.terms.push_back(PauliTerm::parse(0.8, "Z0"));
  h.terms.push_back(PauliTerm::parse(0.3, "X0"));
  return std::make_shared<const DenseHermitian>(to_dense(h, 1));
}

std::shared_ptr<const DenseHermitian> model(int n) {
  return n == 1 ? single_qubit_h() : heisenberg(n);
}

Mat ry(double theta) {
  Mat m(2, 2);
  m << std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2);
  return m;
}

}  // namespace

TEST(GrayCode, AdjacentCodesDifferInOneBit) {
  for (std::uint64_t l = 0; l + 1 < 64; ++l) {
    EXPECT_EQ(std::popcount(gray_code(l) ^ gray_code(l + 1)), 1);
  }
  EXPECT_EQ(gray_code(0), 0u);
  EXPECT_EQ(gray_code(5), 7u);
}

TEST(UniformlyControlledRy, MatchesBlockDiagonalOracle) {
  for (int m = 1; m <= 3; ++m) {
    const std::size_t len = std::size_t{1} << m;
    std::vector<double> thetas(len);
    for (std::size_t k = 0; k < len; ++k) thetas[k] = 0.3 + 0.71 * static_cast<double>(k * k % 7);
    std::vector<int> controls(m);
    for (int q = 0; q < m; ++q) controls[q] = q;
    Circuit c(m + 1);
    append_uniformly_controlled_ry(c, thetas, controls, m);
    EXPECT_EQ(c.cnot_count(), len);
    // Target is the top qubit: block k of the unitary in the (target, controls)
    // ordering acts on indices {k, k + 2^m}.
    const Mat u = circuit_unitary(c);
    Mat ref = Mat::Zero(2 * len, 2 * len);
    for (std::size_t k = 0; k < len; ++k) {
      const Mat r = ry(thetas[k]);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          ref(static_cast<Eigen::Index>(k + a * len), static_cast<Eigen::Index>(k + b * len)) =
              r(a, b);
        }
      }
    }
    EXPECT_LT((u - ref).cwiseAbs().maxCoeff(), 1e-12) << m;
  }
}

TEST(Fable, IdentityOneQubit) {
  const BlockEncoding be = fable_encode(Mat::Identity(2, 2));
  EXPECT_EQ(be.ancillas, 2);
  EXPECT_DOUBLE_EQ(be.subnormalization, 2.0);
  const Mat u = be.unitary();
  EXPECT_LT((u.topLeftCorner(2, 2) - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Fable, LeadingBlockAndCountsForThermalOperators) {
  for (int n = 1; n <= 4; ++n) {
    for (double beta : {0.0, 0.5, 1.0}) {
      const ThermalOperator q(model(n), beta);
      const BlockEncoding be = fable_encode(q);
      const Eigen::Index d = Eigen::Index{1} << n;
      EXPECT_EQ(be.ancillas, n + 1);
      EXPECT_EQ(be.cnot_count(), std::size_t{1} << (2 * n));
      const Mat u = be.unitary();
      EXPECT_LT((u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-8);
      const Mat block = u.topLeftCorner(d, d);
      EXPECT_LT((block - q.scaled_matrix() / static_cast<double>(d)).cwiseAbs().maxCoeff(), 1e-8)
          << n << " " << beta;
    }
  }
}

TEST(Fable, PostselectedStateMatchesExact) {
  for (int n = 1; n <= 4; ++n) {
    for (double beta : {0.0, 0.5, 1.0, 2.0}) {
      const ThermalOperator q(model(n), beta);
      const BlockEncoding be = fable_encode(q);
      const StateVector psi(n, oracle::random_state(n, 40 + n));
      const FableResult r = apply_fable(be, psi);
      EXPECT_GT(fidelity(r.state, apply_exact(q, psi)), 1 - 1e-7);
      const double d = static_cast<double>(Eigen::Index{1} << n);
      EXPECT_NEAR(r.success_probability,
                  (q.scaled_matrix() * psi.amplitudes()).squaredNorm() / (d * d), 1e-12);
    }
  }
  const ThermalOperator q0(heisenberg(2), 0.0);
  EXPECT_NEAR(apply_fable(fable_encode(q0), StateVector(2)).success_probability, 1.0 / 16, 1e-12);
}

TEST(Fable, CompressionDropsSmallAngles) {
  const ThermalOperator q(heisenberg(3), 1.0);
  const BlockEncoding exact = fable_encode(q);
  const BlockEncoding pruned = fable_encode(q, FableOptions{1e-3});
  EXPECT_LE(pruned.circuit.count(GateKind::RY), exact.circuit.count(GateKind::RY));
  const Mat block = pruned.unitary().topLeftCorner(8, 8);
  EXPECT_LT((block - q.scaled_matrix() / 8.0).cwiseAbs().maxCoeff(), 64 * 1e-3);
}

TEST(Fable, Errors) {
  Mat big = Mat::Identity(2, 2);
  big(0, 0) = 1.5;
  EXPECT_THROW(fable_encode(big), EntryOutOfRange);
  Mat cplx = Mat::Identity(2, 2);
  cplx(0, 1) = Complex(0, 0.1);
  EXPECT_THROW(fable_encode(cplx), InvalidArgument);
  EXPECT_THROW(fable_encode(Mat::Identity(3, 3)), InvalidArgument);
}

TEST(Dilation, OmegaIsUnitaryAndMatchesExpmOracle) {
  for (double beta : {0.0, 0.5, 2.0}) {
    for (double eps : {1e-3, 0.1, 1.0}) {
      const ThermalOperator q(heisenberg(3), beta);
      const Mat omega = dilated_omega(q, eps);
      EXPECT_LT((omega.adjoint() * omega - Mat::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-10);
      const Complex i(0, 1);
      Mat m = Mat::Zero(16, 16);
      m.topRightCorner(8, 8) = -i * q.scaled_matrix();
      m.bottomLeftCorner(8, 8) = i * q.scaled_matrix().adjoint();
      EXPECT_LT((omega - oracle::expm(i * eps * m)).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Dilation, ScalarCase) {
  const ThermalOperator q(heisenberg(2), 0.0);
  const double eps = 0.37;
  const Mat omega = dilated_omega(q, eps);
  const Mat id = Mat::Identity(4, 4);
  EXPECT_LT((omega.topLeftCorner(4, 4) - std::cos(eps) * id).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((omega.topRightCorner(4, 4) - std::sin(eps) * id).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((omega.bottomLeftCorner(4, 4) + std::sin(eps) * id).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Dilation, PostselectedVectorIsSinOfQ) {
  const auto h = heisenberg(3);
  for (double eps : {1e-3, 0.05, 0.7}) {
    const auto q = std::make_shared<const ThermalOperator>(h, 0.9);
    const StateVector psi(3, oracle::random_state(3, 5));
    // Closed form sin(eps Q') via the dense exponential of eps Q'.
    const Complex i(0, 1);
    const Mat qq = q->scaled_matrix();
    const Mat sin_q = (oracle::expm(i * eps * qq) - oracle::expm(-i * eps * qq)) / (2.0 * i);
    const oracle::Vec raw = sin_q * psi.amplitudes();
    const DilationResult r = apply_dilated(DilatedOperator(q, eps), psi);
    EXPECT_NEAR(r.success_probability, raw.squaredNorm(), 1e-10);
    EXPECT_LT((r.state.amplitudes() - raw.normalized()).norm(), 1e-10);
    EXPECT_NEAR(r.fidelity, overlap(r.state, apply_exact(*q, psi)), 1e-14);
    // sin(x) = x - x^3/6 + ..., so 1 - F is O(eps^2).
    EXPECT_GT(r.fidelity, 1 - eps * eps * qq.norm() * qq.norm());
  }
}

TEST(Dilation, HalfPiAtBetaZero) {
  const auto q = std::make_shared<const ThermalOperator>(heisenberg(3), 0.0);
  const StateVector psi(3, oracle::random_state(3, 8));
  const DilationResult r = apply_dilated(DilatedOperator(q, std::numbers::pi / 2), psi);
  EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_LT((r.state.amplitudes() - psi.amplitudes()).norm(), 1e-12);
}

TEST(Dilation, FidelityAndProbabilityTrendsInEpsilon) {
  const auto q = std::make_shared<const ThermalOperator>(heisenberg(4), 0.5);
  const StateVector psi(4, oracle::random_state(4, 2));
  double prev_f = 2.0;
  double prev_p = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const double eps = std::pow(10.0, -3.0 + 3.0 * k / 12);
    const DilationResult r = apply_dilated(DilatedOperator(q, eps), psi);
    EXPECT_LE(r.fidelity, prev_f + 1e-6);
    EXPECT_GT(r.success_probability, prev_p);
    prev_f = r.fidelity;
    prev_p = r.success_probability;
  }
}

TEST(Dilation, Resources) {
  EXPECT_EQ(shannon_cnot_count(2), 3u);
  EXPECT_EQ(shannon_cnot_count(3), 20u);
  EXPECT_EQ(shannon_cnot_count(1), 0u);
  for (int n = 2; n <= 4; ++n) {
    const ThermalOperator q(heisenberg(n), 1.0);
    const DilationResources r = dilation_resources(q, 0.1);
    EXPECT_EQ(r.rotation_cnots, std::size_t{1} << n);
    EXPECT_EQ(r.basis_change_cnots, 2 * shannon_cnot_count(n));
    EXPECT_EQ(r.rotation_circuit.num_qubits(), n + 1);
  }
}

TEST(Dilation, RotationCircuitActsInEigenbasis) {
  // (I (x) V) UCRY(-2 eps q) (I (x) V^dagger) reproduces Omega.
  const auto h = heisenberg(2);
  const ThermalOperator q(h, 0.7);
  const double eps = 0.4;
  const Mat ucry = circuit_unitary(dilation_resources(q, eps).rotation_circuit);
  const Mat v = oracle::kron(Mat::Identity(2, 2), h->eigenvectors());
  EXPECT_LT((v * ucry * v.adjoint() - dilated_omega(q, eps)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Nonunitary, BackendsAgreeOnExpectation) {
  for (int n = 2; n <= 4; ++n) {
    const auto h = heisenberg(n);
    const PauliSum hs = build_heisenberg(LatticeSpec::chain(n));
    for (double beta : {0.5, 1.0, 2.0}) {
      const auto q = std::make_shared<const ThermalOperator>(h, beta);
      const StateVector psi(n, oracle::random_state(n, 3 * n));
      const double e = expectation(apply_exact(*q, psi), hs);
      const double ef = expectation(apply_fable(fable_encode(*q), psi).state, hs);
      const double ed = expectation(apply_dilated(DilatedOperator(q, 1e-3), psi).state, hs);
      EXPECT_NEAR(ef, e, 1e-4 * std::abs(e));
      EXPECT_NEAR(ed, e, 1e-4 * std::abs(e));
    }
  }
}

TEST(Nonunitary, ScaleInvarianceAcrossBackends) {
  const auto h = heisenberg(3);
  const StateVector psi(3, oracle::random_state(3, 4));
  const auto q = std::make_shared<const ThermalOperator>(h, 0.6);
  const auto qc = std::make_shared<const ThermalOperator>(q->rescaled(250.0));
  EXPECT_LT((apply_exact(*q, psi).amplitudes() - apply_exact(*qc, psi).amplitudes()).norm(), 1e-12);
  EXPECT_LT((apply_fable(fable_encode(*q), psi).state.amplitudes() -
             apply_fable(fable_encode(*qc), psi).state.amplitudes()).norm(), 1e-12);
  EXPECT_LT((apply_dilated(DilatedOperator(q, 0.01), psi).state.amplitudes() -
             apply_dilated(DilatedOperator(qc, 0.01), psi).state.amplitudes()).norm(), 1e-12);
}
