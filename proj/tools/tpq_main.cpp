// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

// tpq <subcommand> --config run.json [--out file.csv] [--seed S] [--R R] [--shots K]

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tpq/app/commands.hpp"
#include "tpq/app/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Thermal averages from canonical TPQ states on a simulated quantum register"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<int> realizations;
  std::optional<int> shots;

  const std::pair<const char*, const char*> commands[] = {
      {"sweep-beta", "TPQ estimate over the beta grid"},
      {"entropy-scan", "entropy of random-circuit states against depth"},
      {"dilation-scan", "dilated-operator diagnostics over epsilon"},
      {"error-scan", "single-TPQ squared error against N, and R averaging"},
      {"resources", "CNOT counts, ancillas and generation time per method"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", config_path, "JSON run configuration")->required();
    sub->add_option("-o,--out", out, "output CSV (overrides output.path)");
    sub->add_option("--seed", seed, "base seed (overrides random_circuit.seed)");
    sub->add_option("--R", realizations, "realizations (overrides estimate.R)");
    sub->add_option("--shots", shots, "shots per Pauli term (overrides estimate.shots)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    nlohmann::json doc = tpq::app::read_config_file(config_path);
    if (!doc.is_object()) throw tpq::app::ConfigError("config: expected a JSON object");
    if (out) doc["output"]["path"] = *out;
    if (seed) doc["random_circuit"]["seed"] = *seed;
    if (realizations) doc["estimate"]["R"] = *realizations;
    if (shots) doc["estimate"]["shots"] = *shots;
    const auto cmd = tpq::app::parse_subcommand(app.get_subcommands().front()->get_name());
    const tpq::app::RunConfig cfg = tpq::app::parse_config(doc);
    return tpq::app::run_subcommand(cmd, cfg, std::cerr);
  } catch (const tpq::app::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  }
}
