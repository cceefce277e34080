// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tpq/error.hpp"
#include "tpq/estimator.hpp"

namespace tpq::app {

/// Malformed or inconsistent configuration (exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Subcommand { SweepBeta, EntropyScan, DilationScan, ErrorScan, Resources };

Subcommand parse_subcommand(const std::string& name);
std::string subcommand_name(Subcommand cmd);

/// Parameters that only some subcommands read.
struct ScanConfig {
  std::vector<int> depths;          // entropy-scan; error-scan (squared-error family)
  int seeds = 50;                   // entropy-scan sample count
  std::vector<double> epsilons;     // dilation-scan
  std::vector<int> sizes;           // error-scan chain lengths; resources N values
  double beta = 0.5;                // error-scan and resources
  std::vector<int> r_values;        // error-scan averaging comparison
  int base_seeds = 5;               // error-scan averaging comparison
  std::vector<std::string> methods{"qite", "inexact_qite", "dilated", "fable"};
  int timing_runs = 3;
};

struct RunConfig {
  LatticeSpec lattice;
  int depth = 20;
  Entangler entangler = Entangler::CZ;
  std::uint64_t seed = 0;
  InputState input = InputState::RandomCircuit;
  BackendSpec backend = ExactBackend{};
  std::vector<double> betas = default_beta_grid();
  int realizations = 10;
  int shots = 0;
  std::optional<PauliSum> observable;
  ScanConfig scan;
  std::string output_path;

  /// Effective document (after overrides) and its SHA-256 in hex.
  nlohmann::json document;
  std::string sha256;

  /// Spec for the ensemble estimator with this config's parameters.
  TpqRunSpec run_spec() const;
};

/// Parses and validates the whole document. Unknown keys, wrong types and
/// non-finite physical parameters raise ConfigError.
RunConfig parse_config(const nlohmann::json& doc);

/// Reads a JSON file; I/O and syntax errors raise ConfigError.
nlohmann::json read_config_file(const std::string& path);

/// Checks that the fields a subcommand needs are present and consistent.
void validate_for(const RunConfig& cfg, Subcommand cmd);

std::string sha256_hex(const std::string& data);

}  // namespace tpq::app
