// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <thread>

#include "tpq/dilation.hpp"
#include "tpq/error.hpp"
#include "tpq/fable.hpp"
#include "tpq/measure.hpp"
#include "tpq/qite.hpp"
#include "tpq/rng.hpp"
#include "tpq/thermal.hpp"

namespace tpq {

namespace {

std::shared_ptr<const DenseHermitian> require_dense(const Model& model, const char* backend) {
  if (!model.dense) {
    throw InvalidArgument(std::string(backend) +
                          " backend needs the dense Hamiltonian, which was not built for N = " +
                          std::to_string(model.num_qubits()));
  }
  return model.dense;
}

class ExactPreparation final : public ThermalPreparation {
 public:
  ExactPreparation(std::shared_ptr<const DenseHermitian> h, double beta, double scale)
      : h_(std::move(h)), beta_(beta), scale_(scale) {
    if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
      throw InvalidArgument("exact backend operator scale must be positive");
    }
  }

  TpqSample prepare(const StateVector& psi) const override {
    const double e0 = h_->min_eigenvalue();
    Eigen::VectorXcd v = h_->apply_function(
        [&](double l) { return std::exp(-beta_ * (l - e0) / 2); }, psi.amplitudes());
    v *= scale_;
    StateVector out(psi.num_qubits(), std::move(v));
    out.normalize();
    return {std::move(out), 1.0, 1.0};
  }

 private:
  std::shared_ptr<const DenseHermitian> h_;
  double beta_;
  double scale_;
};

class DilatedPreparation final : public ThermalPreparation {
 public:
  DilatedPreparation(std::shared_ptr<const DenseHermitian> h, double beta, double epsilon)
      : op_(std::make_shared<const ThermalOperator>(std::move(h), beta), epsilon) {}

  TpqSample prepare(const StateVector& psi) const override {
    auto r = apply_dilated(op_, psi);
    return {std::move(r.state), r.success_probability, r.fidelity};
  }

 private:
  DilatedOperator op_;
};

class FablePreparation final : public ThermalPreparation {
 public:
  FablePreparation(std::shared_ptr<const DenseHermitian> h, double beta, double threshold)
      : encoding_(fable_encode(ThermalOperator(std::move(h), beta), FableOptions{threshold})) {}

  TpqSample prepare(const StateVector& psi) const override {
    auto r = apply_fable(encoding_, psi);
    return {std::move(r.state), r.success_probability, 1.0};
  }

 private:
  BlockEncoding encoding_;
};

class QitePreparation final : public ThermalPreparation {
 public:
  QitePreparation(const Model& model, double beta, const QiteBackend& b)
      : lattice_(model.lattice),
        hamiltonian_(model.hamiltonian),
        spec_{beta, b.n_steps, b.domain, b.regularization} {}

  TpqSample prepare(const StateVector& psi) const override {
    return {qite_evolve(spec_, hamiltonian_, lattice_, psi).state, 1.0, 1.0};
  }

 private:
  LatticeSpec lattice_;
  PauliSum hamiltonian_;
  QiteSpec spec_;
};

template <typename F>
void parallel_for(int count, int threads, F&& body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  }
}

}  // namespace

std::string backend_name(const BackendSpec& backend) {
  static constexpr const char* kNames[] = {"exact", "dilated", "fable", "qite"};
  return kNames[backend.index()];
}

Model Model::build(const LatticeSpec& lattice, int max_dense_qubits) {
  lattice.validate();
  Model m{lattice, build_heisenberg(lattice), nullptr};
  if (lattice.num_sites() <= max_dense_qubits) {
    m.dense = std::make_shared<const DenseHermitian>(
        to_dense(m.hamiltonian, lattice.num_sites(), max_dense_qubits));
  }
  return m;
}

std::unique_ptr<ThermalPreparation> make_preparation(const BackendSpec& backend,
                                                     const Model& model, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be finite and >= 0");
  }
  return std::visit(
      [&](const auto& b) -> std::unique_ptr<ThermalPreparation> {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, ExactBackend>) {
          return std::make_unique<ExactPreparation>(require_dense(model, "exact"), beta,
                                                    b.operator_scale);
        } else if constexpr (std::is_same_v<B, DilatedBackend>) {
          return std::make_unique<DilatedPreparation>(require_dense(model, "dilated"), beta,
                                                      b.epsilon);
        } else if constexpr (std::is_same_v<B, FableBackend>) {
          return std::make_unique<FablePreparation>(require_dense(model, "fable"), beta,
                                                    b.threshold);
        } else {
          return std::make_unique<QitePreparation>(model, beta, b);
        }
      },
      backend);
}

double tpq_expectation(const ThermalPreparation& prep, const StateVector& psi_r,
                       const PauliSum& a) {
  return expectation(prep.prepare(psi_r).state, a);
}

EnsembleOracle::EnsembleOracle(std::shared_ptr<const DenseHermitian> h,
                               const std::optional<PauliSum>& a)
    : h_(std::move(h)) {
  if (!h_) throw InvalidArgument("null Hamiltonian");
  if (!a) {
    diagonal_ = h_->eigenvalues();
    return;
  }
  if (a->width() > h_->num_qubits()) {
    throw IndexOutOfRange("observable acts outside the Hamiltonian register");
  }
  const Eigen::MatrixXcd& v = h_->eigenvectors();
  const auto dim = static_cast<std::uint64_t>(v.rows());
  diagonal_ = Eigen::VectorXd::Zero(v.cols());
  for (const auto& term : a->terms) {
    const PauliMasks m = term.masks();
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
      Complex acc = 0.0;
      for (std::uint64_t k = 0; k < dim; ++k) {
        acc += std::conj(v(static_cast<Eigen::Index>(k ^ m.x), i)) * m.phase(k) *
               v(static_cast<Eigen::Index>(k), i);
      }
      diagonal_(i) += term.coefficient * acc.real();
    }
  }
}

double EnsembleOracle::operator()(double beta) const {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be finite and >= 0");
  }
  const Eigen::VectorXd& lambda = h_->eigenvalues();
  const double e0 = lambda(0);
  double num = 0.0;
  double den = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double w = std::exp(-beta * (lambda(i) - e0));
    num += w * diagonal_(i);
    den += w;
  }
  return num / den;
}

double ensemble_expectation(const DenseHermitian& h, const PauliSum& a, double beta) {
  // Non-owning alias; the oracle does not outlive this call.
  std::shared_ptr<const DenseHermitian> alias(std::shared_ptr<const DenseHermitian>(), &h);
  return EnsembleOracle(alias, a)(beta);
}

std::vector<double> default_beta_grid() {
  std::vector<double> betas;
  for (int k = 1; k <= 20; ++k) betas.push_back(k / 10.0);
  return betas;
}

void TpqRunSpec::validate() const {
  lattice.validate();
  if (realizations < 1) throw InvalidArgument("R must be >= 1");
  if (depth < 1 && input == InputState::RandomCircuit) {
    throw InvalidArgument("random circuit depth must be >= 1");
  }
  if (shots < 0) throw InvalidArgument("shots must be >= 0");
  if (betas.empty()) throw InvalidArgument("beta grid is empty");
  for (double b : betas) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw InvalidArgument("beta must be finite and >= 0");
  }
  if (observable && observable->width() > lattice.num_sites()) {
    throw InvalidArgument("observable acts outside the lattice");
  }
  std::visit(
      [](const auto& b) {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, DilatedBackend>) {
          if (!(b.epsilon > 0.0) || !std::isfinite(b.epsilon)) {
            throw InvalidArgument("epsilon must be positive");
          }
        } else if constexpr (std::is_same_v<B, QiteBackend>) {
          if (b.n_steps < 1) throw InvalidArgument("n_steps must be >= 1");
          if (b.domain < 0) throw InvalidArgument("domain must be >= 0");
        } else if constexpr (std::is_same_v<B, FableBackend>) {
          if (!(b.threshold >= 0.0)) throw InvalidArgument("threshold must be >= 0");
        }
      },
      backend);
  if (const auto* q = std::get_if<QiteBackend>(&backend); q && q->domain > lattice.num_sites()) {
    throw InvalidArgument("QITE domain exceeds the system size");
  }
}

int default_thread_count() {
  if (const char* env = std::getenv("TPQ_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

StateVector realization_input(const TpqRunSpec& spec, int r) {
  const std::uint64_t seed = derive_seed(spec.base_seed, static_cast<std::uint64_t>(r));
  if (spec.input == InputState::Haar) {
    return sample_haar_state(spec.lattice.num_sites(), seed);
  }
  return random_circuit_state({spec.depth, spec.lattice, spec.entangler, seed});
}

TpqEstimate run_ensemble(const TpqRunSpec& spec) {
  spec.validate();
  return run_ensemble(spec, Model::build(spec.lattice));
}

TpqEstimate run_ensemble(const TpqRunSpec& spec, const Model& model) {
  spec.validate();
  if (model.num_qubits() != spec.lattice.num_sites()) {
    throw InvalidArgument("model does not match the run lattice");
  }
  const PauliSum& observable = spec.observable ? *spec.observable : model.hamiltonian;
  const std::size_t nb = spec.betas.size();
  const int nr = spec.realizations;

  std::vector<std::unique_ptr<ThermalPreparation>> preps;
  preps.reserve(nb);
  for (double beta : spec.betas) preps.push_back(make_preparation(spec.backend, model, beta));

  std::vector<std::vector<TpqSample>> diag(nb, std::vector<TpqSample>(nr));
  std::vector<std::vector<double>> values(nb, std::vector<double>(nr));
  std::vector<std::exception_ptr> failures(nr);

  parallel_for(nr, spec.threads > 0 ? spec.threads : default_thread_count(), [&](int r) {
    try {
      const StateVector psi = realization_input(spec, r);
      const std::uint64_t seed = derive_seed(spec.base_seed, static_cast<std::uint64_t>(r));
      for (std::size_t b = 0; b < nb; ++b) {
        TpqSample s = preps[b]->prepare(psi);
        values[b][r] = spec.shots > 0
                           ? sample_expectation(s.state, observable, spec.shots,
                                                derive_seed(seed, 1 + b)).mean
                           : expectation(s.state, observable);
        s.state = StateVector();
        diag[b][r] = std::move(s);
      }
    } catch (...) {
      failures[r] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::optional<EnsembleOracle> oracle;
  if (model.dense) oracle.emplace(model.dense, spec.observable);

  TpqEstimate est;
  for (std::size_t b = 0; b < nb; ++b) {
    BetaEstimate p;
    p.beta = spec.betas[b];
    p.values = values[b];
    p.mean = std::accumulate(p.values.begin(), p.values.end(), 0.0) / nr;
    if (nr > 1) {
      double ss = 0.0;
      for (double v : p.values) ss += (v - p.mean) * (v - p.mean);
      p.uncertainty = std::sqrt(ss / (nr - 1)) / std::sqrt(static_cast<double>(nr));
    }
    double psum = 0.0;
    double fsum = 0.0;
    for (const auto& s : diag[b]) {
      psum += s.success_probability;
      fsum += s.fidelity;
    }
    p.mean_success_probability = psum / nr;
    p.mean_fidelity = fsum / nr;
    if (oracle) {
      p.ensemble_ref = (*oracle)(p.beta);
      p.squared_error = (p.mean - *p.ensemble_ref) * (p.mean - *p.ensemble_ref);
    }
    est.points.push_back(std::move(p));
  }
  return est;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidArgument("slope needs at least two matching points");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw InvalidArgument("slope undefined for constant x");
  return sxy / sxx;
}

SquaredErrorScan squared_error_scan(const std::vector<LatticeSpec>& family, double beta,
                                    const TpqRunSpec& spec) {
  SquaredErrorScan scan;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& lattice : family) {
    TpqRunSpec run = spec;
    run.lattice = lattice;
    run.betas = {beta};
    const Model model = Model::build(lattice);
    const TpqEstimate est = run_ensemble(run, model);
    const BetaEstimate& p = est.points.front();
    if (!p.ensemble_ref) {
      throw InvalidArgument("squared-error scan needs the ensemble reference");
    }
    double d2 = 0.0;
    for (double v : p.values) d2 += (v - *p.ensemble_ref) * (v - *p.ensemble_ref);
    d2 /= static_cast<double>(p.values.size());
    scan.points.push_back({lattice.num_sites(), d2, *p.ensemble_ref});
    xs.push_back(lattice.num_sites());
    ys.push_back(std::log(d2));
  }
  if (xs.size() >= 2) {
    scan.log_slope = least_squares_slope(xs, ys);
    scan.downward = scan.log_slope < 0.0;
  }
  return scan;
}

}  // namespace tpq
