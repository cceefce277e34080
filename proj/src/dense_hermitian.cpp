// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/dense_hermitian.hpp"

#include <bit>
#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "tpq/error.hpp"

namespace tpq {

namespace {

void symmetric_eigensolve(const Eigen::MatrixXd& a, Eigen::VectorXd& w,
                          Eigen::MatrixXcd& v) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Eigen::MatrixXd work = a;
  w.resize(n);
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                                         work.data(), n, w.data());
  if (info != 0) {
    throw Error("dsyevd failed with info = " + std::to_string(info));
  }
  v = work.cast<Complex>();
}

void hermitian_eigensolve(const Eigen::MatrixXcd& a, Eigen::VectorXd& w,
                          Eigen::MatrixXcd& v) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  v = a;
  w.resize(n);
  const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                                         v.data(), n, w.data());
  if (info != 0) {
    throw Error("zheevd failed with info = " + std::to_string(info));
  }
}

}  // namespace

DenseHermitian::DenseHermitian(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)) {
  const auto n = matrix_.rows();
  if (n != matrix_.cols() || n < 1 ||
      !std::has_single_bit(static_cast<unsigned long>(n))) {
    throw InvalidArgument("DenseHermitian needs a square 2^n matrix");
  }
  num_qubits_ = std::countr_zero(static_cast<unsigned long>(n));
  const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asym >= 1e-12) {
    throw InvalidArgument("matrix is not Hermitian (max deviation " +
                          std::to_string(asym) + ")");
  }
  real_ = matrix_.imag().cwiseAbs().maxCoeff() == 0.0;
  if (real_) {
    symmetric_eigensolve(matrix_.real(), eigenvalues_, eigenvectors_);
  } else {
    hermitian_eigensolve(matrix_, eigenvalues_, eigenvectors_);
  }
}

Eigen::MatrixXcd DenseHermitian::function(
    const std::function<double(double)>& f) const {
  Eigen::VectorXd fw = eigenvalues_.unaryExpr(f);
  return eigenvectors_ * fw.cast<Complex>().asDiagonal() *
         eigenvectors_.adjoint();
}

Eigen::VectorXcd DenseHermitian::apply_function(
    const std::function<double(double)>& f, const Eigen::VectorXcd& psi) const {
  Eigen::VectorXcd c = eigenvectors_.adjoint() * psi;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    c(i) *= f(eigenvalues_(i));
  }
  return eigenvectors_ * c;
}

Eigen::MatrixXcd pauli_matrix(const PauliSum& p, int num_qubits,
                              int max_qubits) {
  if (num_qubits < 1) {
    throw InvalidArgument("need at least one qubit");
  }
  if (num_qubits > max_qubits) {
    throw DimensionOverflow("dense matrix on " + std::to_string(num_qubits) +
                            " qubits exceeds the limit of " +
                            std::to_string(max_qubits));
  }
  if (p.width() > num_qubits) {
    throw IndexOutOfRange("Pauli sum acts on qubit " +
                          std::to_string(p.width() - 1) + " but N = " +
                          std::to_string(num_qubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : p.terms) {
    const PauliMasks masks = term.masks();
    for (std::uint64_t k = 0; k < dim; ++k) {
      m(k ^ masks.x, k) += term.coefficient * masks.phase(k);
    }
  }
  return m;
}

DenseHermitian to_dense(const PauliSum& p, int num_qubits, int max_qubits) {
  return DenseHermitian(pauli_matrix(p, num_qubits, max_qubits));
}

}  // namespace tpq
