// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tpq {

enum class GateKind : std::uint8_t {
  RX90,  // RX(pi/2)
  RY90,  // RY(pi/2)
  T,     // diag(1, e^{i pi/4})
  H,
  X,
  RX,    // exp(-i theta X / 2)
  RY,
  RZ,
  CZ,
  CNOT,  // q0 = control, q1 = target
  SWAP,
};

bool is_two_qubit(GateKind kind);
std::string to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;

  bool two_qubit() const { return is_two_qubit(kind); }
  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list on a fixed register width.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws IndexOutOfRange for qubits outside the register and
  /// InvalidArgument when a two-qubit gate repeats a qubit.
  void add(const Gate& gate);
  void add(GateKind kind, int q0, int q1 = -1, double angle = 0.0) {
    add(Gate{kind, q0, q1, angle});
  }
  /// Appends another circuit of equal or smaller width.
  void append(const Circuit& other);

  std::size_t count(GateKind kind) const;
  std::size_t cnot_count() const { return count(GateKind::CNOT); }
  /// ASAP layer count.
  std::size_t depth() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace tpq
