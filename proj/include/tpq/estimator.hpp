// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file estimator.hpp
 * @brief Canonical thermal pure quantum (TPQ) state estimation.
 *
 * A TPQ state at inverse temperature beta is exp(-beta H / 2)|psi_R> for a
 * (pseudo) Haar-random |psi_R>; the observable measured in the normalized
 * state approximates the canonical average Tr[e^{-beta H} A] / Tr[e^{-beta H}].
 * run_ensemble repeats this for R independent random inputs and aggregates.
 *
 * The non-unitary step is pluggable:
 * - exact:   dense propagator from the eigendecomposition of H,
 * - dilated: single-ancilla dilation, post-selected (parameter epsilon),
 * - fable:   block encoding with N + 1 ancillas, post-selected,
 * - qite:    inexact imaginary-time evolution (steps, domain size).
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tpq/dense_hermitian.hpp"
#include "tpq/lattice.hpp"
#include "tpq/pauli.hpp"
#include "tpq/random_state.hpp"
#include "tpq/statevector.hpp"

namespace tpq {

struct ExactBackend {
  /// Positive factor applied to Q psi before normalization; the estimate must
  /// not depend on it.
  double operator_scale = 1.0;
};
struct DilatedBackend {
  double epsilon = 1e-3;
};
struct FableBackend {
  double threshold = 0.0;
};
struct QiteBackend {
  int n_steps = 10;
  int domain = 0;  // 0 selects min(N, 3)
  double regularization = 1e-8;
};

using BackendSpec = std::variant<ExactBackend, DilatedBackend, FableBackend, QiteBackend>;

/// "exact", "dilated", "fable" or "qite".
std::string backend_name(const BackendSpec& backend);

/// Lattice, symbolic Hamiltonian and (when small enough) its dense form.
struct Model {
  LatticeSpec lattice;
  PauliSum hamiltonian;
  std::shared_ptr<const DenseHermitian> dense;

  /// The dense form is built when N <= max_dense_qubits.
  static Model build(const LatticeSpec& lattice, int max_dense_qubits = kDefaultMaxDenseQubits);
  int num_qubits() const { return lattice.num_sites(); }
};

/// Normalized TPQ state produced by a backend plus backend diagnostics.
struct TpqSample {
  StateVector state;
  double success_probability = 1.0;  // post-selection probability, 1 if none
  double fidelity = 1.0;             // overlap with the exact TPQ state (dilation only)
};

/// A backend bound to one model and one beta. Immutable; prepare() may be
/// called concurrently.
class ThermalPreparation {
 public:
  virtual ~ThermalPreparation() = default;
  virtual TpqSample prepare(const StateVector& psi_r) const = 0;
};

std::unique_ptr<ThermalPreparation> make_preparation(const BackendSpec& backend,
                                                     const Model& model, double beta);

/// <beta,N|A|beta,N> / <beta,N|beta,N> for the backend's state.
double tpq_expectation(const ThermalPreparation& prep, const StateVector& psi_r,
                       const PauliSum& a);

/// Canonical average from the eigenbasis of H with ground-shifted Boltzmann
/// weights. The diagonal <v_i|A|v_i> is computed once and reused across beta.
class EnsembleOracle {
 public:
  /// A defaults to H itself when omitted.
  EnsembleOracle(std::shared_ptr<const DenseHermitian> h,
                 const std::optional<PauliSum>& a = std::nullopt);
  double operator()(double beta) const;

 private:
  std::shared_ptr<const DenseHermitian> h_;
  Eigen::VectorXd diagonal_;
};

double ensemble_expectation(const DenseHermitian& h, const PauliSum& a, double beta);

enum class InputState : std::uint8_t { RandomCircuit, Haar };

/// beta in {0.1, 0.2, ..., 2.0}.
std::vector<double> default_beta_grid();

struct TpqRunSpec {
  LatticeSpec lattice;
  std::optional<PauliSum> observable;  // defaults to H
  std::vector<double> betas = default_beta_grid();
  int realizations = 10;
  int depth = 20;
  Entangler entangler = Entangler::CZ;
  InputState input = InputState::RandomCircuit;
  BackendSpec backend = ExactBackend{};
  std::uint64_t base_seed = 0;
  int shots = 0;    // 0 = exact expectation
  int threads = 0;  // 0 = TPQ_THREADS or hardware concurrency

  void validate() const;
};

struct BetaEstimate {
  double beta = 0.0;
  std::vector<double> values;  // one per realization, in realization order
  double mean = 0.0;
  double uncertainty = 0.0;  // sample standard deviation / sqrt(R)
  std::optional<double> ensemble_ref;
  std::optional<double> squared_error;  // (mean - ensemble_ref)^2
  double mean_success_probability = 1.0;
  double mean_fidelity = 1.0;
};

struct TpqEstimate {
  std::vector<BetaEstimate> points;
};

/// Random input state of realization r: circuit seed derive_seed(base, r).
StateVector realization_input(const TpqRunSpec& spec, int r);

/// Builds R inputs, applies the backend at every beta and measures the
/// observable. Any backend failure aborts the run with the first error (in
/// realization order). The ensemble reference is attached when the model has
/// a dense form.
TpqEstimate run_ensemble(const TpqRunSpec& spec);
TpqEstimate run_ensemble(const TpqRunSpec& spec, const Model& model);

struct SquaredErrorPoint {
  int num_sites = 0;
  double squared_error = 0.0;  // mean over r of (value_r - ensemble)^2
  double ensemble_ref = 0.0;
};

struct SquaredErrorScan {
  std::vector<SquaredErrorPoint> points;
  double log_slope = 0.0;  // least-squares slope of ln D^2 against N
  bool downward = false;   // log_slope < 0
};

/// Single-TPQ squared error D(H)^2 for each lattice of `family` at one beta.
/// `spec.lattice` and `spec.betas` are replaced per family member.
SquaredErrorScan squared_error_scan(const std::vector<LatticeSpec>& family, double beta,
                                    const TpqRunSpec& spec);

/// Least-squares slope of y against x.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Threads to use when a spec asks for 0: TPQ_THREADS if set, else the
/// hardware concurrency.
int default_thread_count();

}  // namespace tpq
