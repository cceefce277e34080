// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "tpq/error.hpp"

namespace tpq {

namespace {

constexpr int kMaxQubits = 30;

void check_width(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw InvalidArgument("unsupported qubit count " + std::to_string(n));
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  check_width(num_qubits);
  amplitudes_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
  amplitudes_(0) = 1.0;
}

StateVector::StateVector(int num_qubits, Eigen::VectorXcd amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_width(num_qubits);
  if (amplitudes_.size() != (Eigen::Index{1} << num_qubits)) {
    throw InvalidArgument("amplitude count does not match 2^n");
  }
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= static_cast<std::uint64_t>(s.dim())) {
    throw IndexOutOfRange("basis index outside register");
  }
  s.amplitudes_(0) = 0.0;
  s.amplitudes_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

void StateVector::normalize() {
  const double n = norm();
  if (!(n > 1e-300)) {
    throw ZeroProbability("cannot normalize a zero state");
  }
  amplitudes_ /= n;
}

Eigen::Matrix2cd gate_matrix(const Gate& gate) {
  const double c = std::cos(gate.angle / 2);
  const double s = std::sin(gate.angle / 2);
  const Complex i(0, 1);
  constexpr double r = std::numbers::sqrt2 / 2;
  Eigen::Matrix2cd m;
  switch (gate.kind) {
    case GateKind::RX90:
      m << r, -i * r, -i * r, r;
      break;
    case GateKind::RY90:
      m << r, -r, r, r;
      break;
    case GateKind::T:
      m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
      break;
    case GateKind::H:
      m << r, r, r, -r;
      break;
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::RX:
      m << c, -i * s, -i * s, c;
      break;
    case GateKind::RY:
      m << c, -s, s, c;
      break;
    case GateKind::RZ:
      m << std::polar(1.0, -gate.angle / 2), 0, 0,
          std::polar(1.0, gate.angle / 2);
      break;
    default:
      throw InvalidArgument(to_string(gate.kind) + " is not a one-qubit gate");
  }
  return m;
}

void StateVector::apply_single(int q, const Eigen::Matrix2cd& u) {
  if (q < 0 || q >= num_qubits_) {
    throw IndexOutOfRange("qubit " + std::to_string(q) + " out of range");
  }
  const Eigen::Index stride = Eigen::Index{1} << q;
  const Eigen::Index dim = amplitudes_.size();
  Complex* a = amplitudes_.data();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index k = base; k < base + stride; ++k) {
      const Complex a0 = a[k];
      const Complex a1 = a[k + stride];
      a[k] = u00 * a0 + u01 * a1;
      a[k + stride] = u10 * a0 + u11 * a1;
    }
  }
}

void StateVector::apply(const Gate& gate) {
  if (gate.q0 < 0 || gate.q0 >= num_qubits_ ||
      (gate.two_qubit() && (gate.q1 < 0 || gate.q1 >= num_qubits_))) {
    throw IndexOutOfRange("gate acts outside the state register");
  }
  if (!gate.two_qubit()) {
    apply_single(gate.q0, gate_matrix(gate));
    return;
  }
  const Eigen::Index b0 = Eigen::Index{1} << gate.q0;
  const Eigen::Index b1 = Eigen::Index{1} << gate.q1;
  const Eigen::Index dim = amplitudes_.size();
  Complex* a = amplitudes_.data();
  switch (gate.kind) {
    case GateKind::CZ:
      for (Eigen::Index k = 0; k < dim; ++k) {
        if ((k & b0) && (k & b1)) a[k] = -a[k];
      }
      break;
    case GateKind::CNOT:
      for (Eigen::Index k = 0; k < dim; ++k) {
        if ((k & b0) && !(k & b1)) std::swap(a[k], a[k | b1]);
      }
      break;
    case GateKind::SWAP:
      for (Eigen::Index k = 0; k < dim; ++k) {
        if ((k & b0) && !(k & b1)) std::swap(a[k], a[(k ^ b0) | b1]);
      }
      break;
    default:
      throw InvalidArgument("unknown two-qubit gate");
  }
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.num_qubits() > num_qubits_) {
    throw IndexOutOfRange("circuit is wider than the state");
  }
  for (const auto& g : circuit.gates()) apply(g);
}

StateVector StateVector::with_ancillas(int count,
                                       std::uint64_t ancilla_bits) const {
  if (count < 0) throw InvalidArgument("negative ancilla count");
  if (ancilla_bits >> count) {
    throw InvalidArgument("ancilla bits exceed ancilla count");
  }
  StateVector out(num_qubits_ + count);
  out.amplitudes_.setZero();
  out.amplitudes_.segment(static_cast<Eigen::Index>(ancilla_bits) * dim(),
                          dim()) = amplitudes_;
  return out;
}

StateVector apply_circuit(StateVector psi, const Circuit& circuit) {
  psi.apply(circuit);
  return psi;
}

double overlap(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("state size mismatch");
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

double fidelity(const StateVector& a, const StateVector& b) {
  const double o = overlap(a, b);
  return o * o;
}

}  // namespace tpq
