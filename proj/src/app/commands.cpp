// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/app/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tpq/app/csv.hpp"
#include "tpq/dilation.hpp"
#include "tpq/fable.hpp"
#include "tpq/qite.hpp"
#include "tpq/random_state.hpp"
#include "tpq/rng.hpp"
#include "tpq/thermal.hpp"

namespace tpq::app {

namespace {

using Comments = std::vector<std::pair<std::string, std::string>>;

Comments provenance(const RunConfig& cfg, Subcommand cmd) {
  return {{"command", subcommand_name(cmd)}, {"config_sha256", cfg.sha256}};
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{};
}

LatticeSpec chain_like(const LatticeSpec& model, int n) {
  return LatticeSpec::chain(n, model.jx, model.jy, model.jz, model.hx);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

int qite_steps(const BackendSpec& b) {
  const auto* q = std::get_if<QiteBackend>(&b);
  return q ? q->n_steps : QiteBackend{}.n_steps;
}

double qite_regularization(const BackendSpec& b) {
  const auto* q = std::get_if<QiteBackend>(&b);
  return q ? q->regularization : QiteBackend{}.regularization;
}

double dilation_epsilon(const BackendSpec& b) {
  const auto* d = std::get_if<DilatedBackend>(&b);
  return d ? d->epsilon : DilatedBackend{}.epsilon;
}

double fable_threshold(const BackendSpec& b) {
  const auto* f = std::get_if<FableBackend>(&b);
  return f ? f->threshold : FableBackend{}.threshold;
}

}  // namespace

void cmd_sweep_beta(const RunConfig& cfg, std::ostream& csv) {
  const TpqRunSpec spec = cfg.run_spec();
  const TpqEstimate est = run_ensemble(spec, Model::build(cfg.lattice));
  CsvWriter out(csv,
                {"beta", "mean", "uncertainty", "ensemble_ref", "squared_error", "backend", "N",
                 "d", "R", "seed"},
                provenance(cfg, Subcommand::SweepBeta));
  const std::string backend = backend_name(cfg.backend);
  for (const auto& p : est.points) {
    out.row({p.beta, p.mean, p.uncertainty, optional_cell(p.ensemble_ref),
             optional_cell(p.squared_error), backend,
             std::int64_t{cfg.lattice.num_sites()}, std::int64_t{cfg.depth},
             std::int64_t{cfg.realizations}, cfg.seed});
  }
}

void cmd_entropy_scan(const RunConfig& cfg, std::ostream& csv) {
  const int n = cfg.lattice.num_sites();
  const int samples = cfg.scan.seeds;
  CsvWriter out(csv, {"depth", "mean_entropy", "stderr", "haar_reference"},
                provenance(cfg, Subcommand::EntropyScan));
  const double haar = haar_entropy_reference(n);
  for (int d : cfg.scan.depths) {
    std::vector<double> s(samples);
    for (int k = 0; k < samples; ++k) {
      if (d == 0) {
        s[k] = state_entropy(StateVector(n));
        continue;
      }
      const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(k));
      s[k] = state_entropy(random_circuit_state({d, cfg.lattice, cfg.entangler, seed}));
    }
    double mean = 0.0;
    for (double x : s) mean += x;
    mean /= samples;
    double err = 0.0;
    if (samples > 1) {
      double ss = 0.0;
      for (double x : s) ss += (x - mean) * (x - mean);
      err = std::sqrt(ss / (samples - 1) / samples);
    }
    out.row({std::int64_t{d}, mean, err, haar});
  }
}

void cmd_dilation_scan(const RunConfig& cfg, std::ostream& csv) {
  const Model model = Model::build(cfg.lattice);
  CsvWriter out(csv, {"beta", "epsilon", "mean_energy", "P0", "F", "ensemble_ref"},
                provenance(cfg, Subcommand::DilationScan));
  for (double beta : cfg.betas) {
    for (double eps : cfg.scan.epsilons) {
      TpqRunSpec spec = cfg.run_spec();
      spec.betas = {beta};
      spec.backend = DilatedBackend{eps};
      const BetaEstimate p = run_ensemble(spec, model).points.front();
      out.row({beta, eps, p.mean, p.mean_success_probability, p.mean_fidelity,
               optional_cell(p.ensemble_ref)});
    }
  }
}

void cmd_error_scan(const RunConfig& cfg, std::ostream& csv, std::ostream& averaging) {
  std::vector<LatticeSpec> family;
  for (int n : cfg.scan.sizes) family.push_back(chain_like(cfg.lattice, n));

  CsvWriter out(csv,
                {"d", "N", "beta", "R", "seed", "squared_error", "ensemble_ref", "log_slope",
                 "downward"},
                provenance(cfg, Subcommand::ErrorScan));
  for (int d : cfg.scan.depths) {
    TpqRunSpec spec = cfg.run_spec();
    spec.depth = d;
    const SquaredErrorScan scan = squared_error_scan(family, cfg.scan.beta, spec);
    for (const auto& p : scan.points) {
      out.row({std::int64_t{d}, std::int64_t{p.num_sites}, cfg.scan.beta,
               std::int64_t{cfg.realizations}, cfg.seed, p.squared_error, p.ensemble_ref,
               scan.log_slope, std::string(scan.downward ? "true" : "false")});
    }
  }

  if (cfg.scan.r_values.empty()) return;
  const Model model = Model::build(cfg.lattice);
  Comments comments = provenance(cfg, Subcommand::ErrorScan);
  comments.emplace_back("table", "averaging");
  CsvWriter avg(averaging,
                {"base_seed", "R", "beta", "mean", "uncertainty", "ensemble_ref", "abs_error"},
                comments);
  for (int b = 0; b < cfg.scan.base_seeds; ++b) {
    for (int r : cfg.scan.r_values) {
      TpqRunSpec spec = cfg.run_spec();
      spec.base_seed = cfg.seed + static_cast<std::uint64_t>(b);
      spec.realizations = r;
      for (const auto& p : run_ensemble(spec, model).points) {
        avg.row({spec.base_seed, std::int64_t{r}, p.beta, p.mean, p.uncertainty,
                 optional_cell(p.ensemble_ref),
                 p.ensemble_ref ? Cell{std::abs(p.mean - *p.ensemble_ref)} : Cell{}});
      }
    }
  }
}

void cmd_resources(const RunConfig& cfg, std::ostream& csv) {
  Comments comments = provenance(cfg, Subcommand::Resources);
  comments.emplace_back("generation_seconds",
                        "machine-relative wall clock; median of " +
                            std::to_string(cfg.scan.timing_runs) + " runs");
  CsvWriter out(csv, {"method", "N", "cnot_count", "ancillas", "generation_seconds"}, comments);
  const double beta = cfg.scan.beta;
  const int runs = cfg.scan.timing_runs;

  for (int n : cfg.scan.sizes) {
    const LatticeSpec lattice = chain_like(cfg.lattice, n);
    const PauliSum h = build_heisenberg(lattice);
    // Dense constructions are timed from the Pauli sum, diagonalization included.
    auto thermal = [&] {
      return ThermalOperator(std::make_shared<const DenseHermitian>(to_dense(h, n)), beta);
    };
    for (const auto& method : cfg.scan.methods) {
      double cnots = 0.0;
      double seconds = 0.0;
      int ancillas = 0;
      if (method == "qite" || method == "inexact_qite") {
        // The fitted circuit depends on the input state; average over R inputs.
        const QiteSpec qs{beta, qite_steps(cfg.backend), method == "qite" ? n : std::min(n, 3),
                          qite_regularization(cfg.backend)};
        TpqRunSpec spec = cfg.run_spec();
        spec.lattice = lattice;
        std::size_t total = 0;
        for (int r = 0; r < cfg.realizations; ++r) {
          const StateVector psi = realization_input(spec, r);
          std::vector<double> t(runs);
          for (int k = 0; k < runs; ++k) {
            const QiteResources res = qite_resources(qs, h, lattice, psi);
            if (k == 0) total += res.cnot_count;
            t[k] = res.generation_seconds;
          }
          seconds += median(t);
        }
        cnots = static_cast<double>(total) / cfg.realizations;
        seconds /= cfg.realizations;
      } else {
        std::vector<double> t(runs);
        for (int k = 0; k < runs; ++k) {
          const auto start = std::chrono::steady_clock::now();
          const ThermalOperator q = thermal();
          if (method == "dilated") {
            cnots = static_cast<double>(
                dilation_resources(q, dilation_epsilon(cfg.backend)).cnot_count());
            ancillas = 1;
          } else {
            const BlockEncoding be = fable_encode(q, FableOptions{fable_threshold(cfg.backend)});
            cnots = static_cast<double>(be.cnot_count());
            ancillas = be.ancillas;
          }
          t[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        seconds = median(t);
      }
      out.row({method, std::int64_t{n}, cnots, std::int64_t{ancillas}, seconds});
    }
  }
}

std::string averaging_path(const std::string& path) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + ".averaging.csv")).string();
}

int run_subcommand(Subcommand cmd, const RunConfig& cfg, std::ostream& err) {
  try {
    validate_for(cfg, cmd);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  }

  std::ostringstream main;
  std::ostringstream averaging;
  try {
    switch (cmd) {
      case Subcommand::SweepBeta: cmd_sweep_beta(cfg, main); break;
      case Subcommand::EntropyScan: cmd_entropy_scan(cfg, main); break;
      case Subcommand::DilationScan: cmd_dilation_scan(cfg, main); break;
      case Subcommand::ErrorScan: cmd_error_scan(cfg, main, averaging); break;
      case Subcommand::Resources: cmd_resources(cfg, main); break;
    }
  } catch (const std::exception& e) {
    err << "backend failure: " << e.what() << '\n';
    return 2;
  }

  auto write = [&](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
      err << "cannot write '" << path << "'\n";
      return false;
    }
    return true;
  };
  if (cfg.output_path.empty()) {
    std::cout << main.str();
    if (!averaging.str().empty()) std::cout << '\n' << averaging.str();
    return 0;
  }
  if (!write(cfg.output_path, main.str())) return 2;
  if (!averaging.str().empty() && !write(averaging_path(cfg.output_path), averaging.str())) {
    return 2;
  }
  return 0;
}

}  // namespace tpq::app
