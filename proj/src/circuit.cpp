// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/circuit.hpp"

#include <algorithm>

#include "tpq/error.hpp"

namespace tpq {

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CZ || kind == GateKind::CNOT ||
         kind == GateKind::SWAP;
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX90: return "RX90";
    case GateKind::RY90: return "RY90";
    case GateKind::T: return "T";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) {
    throw InvalidArgument("negative circuit width");
  }
}

void Circuit::add(const Gate& gate) {
  auto check = [this](int q) {
    if (q < 0 || q >= num_qubits_) {
      throw IndexOutOfRange("gate qubit " + std::to_string(q) +
                            " outside register of width " +
                            std::to_string(num_qubits_));
    }
  };
  check(gate.q0);
  if (gate.two_qubit()) {
    check(gate.q1);
    if (gate.q0 == gate.q1) {
      throw InvalidArgument(to_string(gate.kind) + " on repeated qubit");
    }
  }
  gates_.push_back(gate);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ > num_qubits_) {
    throw IndexOutOfRange("appended circuit is wider than the register");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::depth() const {
  std::vector<std::size_t> front(num_qubits_, 0);
  std::size_t depth = 0;
  for (const auto& g : gates_) {
    std::size_t layer = front[g.q0];
    if (g.two_qubit()) layer = std::max(layer, front[g.q1]);
    ++layer;
    front[g.q0] = layer;
    if (g.two_qubit()) front[g.q1] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

}  // namespace tpq
