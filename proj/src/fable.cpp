// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/fable.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>

#include "tpq/error.hpp"
#include "tpq/measure.hpp"

namespace tpq {

std::vector<double> gray_walk_angles(std::span<const double> thetas) {
  const std::size_t len = thetas.size();
  if (!std::has_single_bit(len)) {
    throw InvalidArgument("angle count must be a power of two");
  }
  std::vector<double> w(thetas.begin(), thetas.end());
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = w[j];
        const double b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  std::vector<double> phi(len);
  for (std::size_t l = 0; l < len; ++l) {
    phi[l] = w[gray_code(l)] / static_cast<double>(len);
  }
  return phi;
}

void append_uniformly_controlled_ry(Circuit& circuit, std::span<const double> thetas,
                                    std::span<const int> controls, int target,
                                    double threshold) {
  if (thetas.size() != (std::size_t{1} << controls.size())) {
    throw InvalidArgument("need 2^m angles for m controls");
  }
  const std::vector<double> phi = gray_walk_angles(thetas);
  auto flip_parity = [&](std::uint64_t diff) {
    for (std::size_t b = 0; b < controls.size(); ++b) {
      if (diff >> b & 1) circuit.add(GateKind::CNOT, controls[b], target);
    }
  };
  std::uint64_t applied = 0;
  for (std::size_t l = 0; l < phi.size(); ++l) {
    if (threshold > 0.0 && std::abs(phi[l]) <= threshold) continue;
    flip_parity(applied ^ gray_code(l));
    applied = gray_code(l);
    circuit.add(GateKind::RY, target, -1, phi[l]);
  }
  flip_parity(applied);
}

Eigen::MatrixXcd BlockEncoding::unitary() const { return circuit_unitary(circuit); }

std::vector<int> BlockEncoding::ancilla_qubits() const {
  std::vector<int> a;
  for (int q = system_qubits; q < system_qubits + ancillas; ++q) a.push_back(q);
  return a;
}

BlockEncoding fable_encode(const Eigen::MatrixXcd& a, FableOptions options) {
  const auto start = std::chrono::steady_clock::now();
  const auto dim = static_cast<std::uint64_t>(a.rows());
  if (a.rows() != a.cols() || !std::has_single_bit(dim)) {
    throw InvalidArgument("block encoding needs a square 2^N matrix");
  }
  if (a.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidArgument("block encoding supports real matrices only");
  }
  const int n = std::countr_zero(dim);

  // theta_k for control state k = (row i) * 2^N + (column j): the index
  // register holds the row, the system register holds the column.
  std::vector<double> thetas(dim * dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      const double v = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).real();
      if (std::abs(v) > 1.0 + 1e-12) {
        throw EntryOutOfRange("matrix entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") = " + std::to_string(v) +
                              " outside [-1, 1]");
      }
      thetas[i * dim + j] = 2.0 * std::acos(std::clamp(v, -1.0, 1.0));
    }
  }

  BlockEncoding be;
  be.system_qubits = n;
  be.ancillas = n + 1;
  be.subnormalization = static_cast<double>(dim);
  be.circuit = Circuit(2 * n + 1);
  const int rotation_ancilla = 2 * n;
  for (int q = n; q < 2 * n; ++q) be.circuit.add(GateKind::H, q);
  std::vector<int> controls(2 * n);
  for (int q = 0; q < 2 * n; ++q) controls[q] = q;
  append_uniformly_controlled_ry(be.circuit, thetas, controls, rotation_ancilla,
                                 options.threshold);
  for (int q = 0; q < n; ++q) be.circuit.add(GateKind::SWAP, q, n + q);
  for (int q = n; q < 2 * n; ++q) be.circuit.add(GateKind::H, q);
  be.generation_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return be;
}

BlockEncoding fable_encode(const ThermalOperator& q, FableOptions options) {
  BlockEncoding be = fable_encode(q.scaled_matrix(), options);
  be.log_operator_scale = q.log_scale();
  return be;
}

FableResult apply_fable(const BlockEncoding& be, const StateVector& psi) {
  if (psi.num_qubits() != be.system_qubits) {
    throw InvalidArgument("state size does not match the block encoding");
  }
  StateVector full = psi.with_ancillas(be.ancillas, 0);
  full.apply(be.circuit);
  const std::vector<int> anc = be.ancilla_qubits();
  auto [state, p] = postselect(full, anc, std::vector<int>(anc.size(), 0));
  return {std::move(state), p};
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    StateVector col = StateVector::basis_state(n, static_cast<std::uint64_t>(k));
    col.apply(circuit);
    u.col(k) = col.amplitudes();
  }
  return u;
}

}  // namespace tpq
