// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/qite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "tpq/error.hpp"

namespace tpq {

namespace {

// Rotations below this magnitude are skipped in both the state update and the
// emitted circuit.
constexpr double kMinRotation = 1e-14;

// All non-identity Pauli strings on `qubits`, ordered as base-4 numbers with
// digit (I, X, Y, Z) and qubits[0] the least significant digit.
std::vector<PauliMasks> domain_basis(const std::vector<int>& qubits,
                                     std::vector<std::vector<std::pair<int, Pauli>>>& factors) {
  const std::size_t count = std::size_t{1} << (2 * qubits.size());
  std::vector<PauliMasks> basis;
  basis.reserve(count - 1);
  factors.clear();
  factors.reserve(count - 1);
  for (std::size_t code = 1; code < count; ++code) {
    std::map<int, Pauli> ops;
    for (std::size_t d = 0; d < qubits.size(); ++d) {
      switch (code >> (2 * d) & 3) {
        case 1: ops.emplace(qubits[d], Pauli::X); break;
        case 2: ops.emplace(qubits[d], Pauli::Y); break;
        case 3: ops.emplace(qubits[d], Pauli::Z); break;
        default: break;
      }
    }
    factors.emplace_back(ops.begin(), ops.end());
    basis.push_back(PauliTerm(1.0, std::move(ops)).masks());
  }
  return basis;
}

Eigen::VectorXcd apply_masks(const PauliMasks& m, const Eigen::VectorXcd& v) {
  Eigen::VectorXcd out(v.size());
  apply_pauli_string(m, {v.data(), static_cast<std::size_t>(v.size())},
                     {out.data(), static_cast<std::size_t>(out.size())});
  return out;
}

// exp(-i angle P) as basis change, CNOT ladder, RZ(2 angle), and the inverse.
void append_pauli_rotation(Circuit& c, const std::vector<std::pair<int, Pauli>>& ops,
                           double angle) {
  for (const auto& [q, p] : ops) {
    if (p == Pauli::X) c.add(GateKind::H, q);
    if (p == Pauli::Y) c.add(GateKind::RX90, q);
  }
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    c.add(GateKind::CNOT, ops[i].first, ops[i + 1].first);
  }
  c.add(GateKind::RZ, ops.back().first, -1, 2.0 * angle);
  for (std::size_t i = ops.size() - 1; i > 0; --i) {
    c.add(GateKind::CNOT, ops[i - 1].first, ops[i].first);
  }
  for (const auto& [q, p] : ops) {
    if (p == Pauli::X) c.add(GateKind::H, q);
    if (p == Pauli::Y) c.add(GateKind::RX, q, -1, -std::numbers::pi / 2);
  }
}

Eigen::VectorXd solve_normal_equations(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(a);
  Eigen::VectorXd x;
  if (ldlt.info() == Eigen::Success) {
    x = ldlt.solve(b);
  }
  if (ldlt.info() != Eigen::Success || !x.allFinite()) {
    x = a.completeOrthogonalDecomposition().pseudoInverse() * b;
  }
  if (!x.allFinite()) {
    throw SingularSystem("QITE normal equations could not be solved");
  }
  return x;
}

}  // namespace

std::vector<int> qite_domain(const LatticeSpec& lattice, const std::vector<int>& support,
                             int domain_size) {
  const int n = lattice.num_sites();
  std::vector<std::pair<int, int>> ranked;  // (distance, site)
  ranked.reserve(n);
  for (int site = 0; site < n; ++site) {
    int d = n * 4;
    for (int s : support) d = std::min(d, manhattan_distance(lattice, site, s));
    ranked.emplace_back(d, site);
  }
  std::sort(ranked.begin(), ranked.end());
  const int take = std::clamp(std::max<int>(domain_size, static_cast<int>(support.size())), 0, n);
  std::vector<int> domain;
  for (int i = 0; i < take; ++i) domain.push_back(ranked[i].second);
  std::sort(domain.begin(), domain.end());
  return domain;
}

QiteResult qite_evolve(const QiteSpec& spec, const PauliSum& h, const LatticeSpec& lattice,
                       const StateVector& psi) {
  const int n = lattice.num_sites();
  if (psi.num_qubits() != n) throw InvalidArgument("state does not match the lattice");
  if (spec.n_steps < 1) throw InvalidArgument("QITE needs n_steps >= 1");
  if (!(spec.beta >= 0.0) || !std::isfinite(spec.beta)) {
    throw InvalidArgument("beta must be finite and >= 0");
  }
  if (!(spec.regularization >= 0.0)) throw InvalidArgument("negative regularization");
  const int domain_size = spec.domain == 0 ? std::min(n, 3) : spec.domain;
  if (domain_size < 1 || domain_size > n) {
    throw InvalidArgument("QITE domain size must lie in [1, N]");
  }

  QiteResult result{psi, Circuit(n), {}};
  if (spec.beta == 0.0) return result;

  // Domains and Pauli bases depend only on the term, so build them once.
  struct TermFit {
    std::vector<PauliMasks> basis;
    std::vector<std::vector<std::pair<int, Pauli>>> factors;
  };
  std::vector<TermFit> fits(h.terms.size());
  for (std::size_t t = 0; t < h.terms.size(); ++t) {
    const auto support = h.terms[t].support();
    if (support.empty()) continue;
    if (static_cast<int>(support.size()) > domain_size) {
      result.warnings.push_back("DomainTooSmall: term " + h.terms[t].to_string() +
                                " spans " + std::to_string(support.size()) +
                                " qubits, domain size " + std::to_string(domain_size));
    }
    fits[t].basis = domain_basis(qite_domain(lattice, support, domain_size), fits[t].factors);
  }

  const double dtau = spec.step();
  Eigen::VectorXcd cur = psi.amplitudes();
  for (int step = 0; step < spec.n_steps; ++step) {
    for (std::size_t t = 0; t < h.terms.size(); ++t) {
      const PauliTerm& term = h.terms[t];
      if (term.operators.empty()) continue;  // identity only shifts the norm
      const double c = term.coefficient;
      Eigen::VectorXcd target = std::cosh(dtau * c) * cur -
                                std::sinh(dtau * c) * apply_masks(term.masks(), cur);
      target.normalize();
      const Eigen::VectorXcd delta = target - cur;

      const auto& basis = fits[t].basis;
      const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
      Eigen::MatrixXcd sigma_psi(cur.size(), m);
      for (Eigen::Index i = 0; i < m; ++i) sigma_psi.col(i) = apply_masks(basis[i], cur);

      const Eigen::MatrixXcd s = sigma_psi.adjoint() * sigma_psi;
      const Eigen::MatrixXcd sym = s + s.transpose();
      if (sym.imag().cwiseAbs().maxCoeff() > 1e-8) {
        result.warnings.push_back("imaginary residue in QITE S matrix at step " +
                                  std::to_string(step));
      }
      Eigen::MatrixXd a = sym.real();
      a.diagonal().array() += spec.regularization;
      const Eigen::VectorXd b = -2.0 * (sigma_psi.adjoint() * delta).imag();
      const Eigen::VectorXd x = solve_normal_equations(a, b);

      for (Eigen::Index i = 0; i < m; ++i) {
        if (std::abs(x(i)) < kMinRotation) continue;
        // exp(-i x P) psi = cos(x) psi - i sin(x) P psi
        cur = std::cos(x(i)) * cur -
              Complex(0, std::sin(x(i))) * apply_masks(basis[i], cur);
        append_pauli_rotation(result.circuit, fits[t].factors[i], x(i));
      }
    }
  }
  result.state = StateVector(n, std::move(cur));
  result.state.normalize();
  return result;
}

QiteResources qite_resources(const QiteSpec& spec, const PauliSum& h,
                             const LatticeSpec& lattice, const StateVector& psi) {
  const auto start = std::chrono::steady_clock::now();
  const QiteResult r = qite_evolve(spec, h, lattice, psi);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {r.circuit.cnot_count(), secs};
}

}  // namespace tpq
