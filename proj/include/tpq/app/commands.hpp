// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>

#include "tpq/app/config.hpp"

namespace tpq::app {

void cmd_sweep_beta(const RunConfig& cfg, std::ostream& csv);
void cmd_entropy_scan(const RunConfig& cfg, std::ostream& csv);
void cmd_dilation_scan(const RunConfig& cfg, std::ostream& csv);
/// `averaging` receives the R-comparison table; it stays empty when
/// scan.r_values is empty.
void cmd_error_scan(const RunConfig& cfg, std::ostream& csv, std::ostream& averaging);
void cmd_resources(const RunConfig& cfg, std::ostream& csv);

/// Validates, runs and writes to cfg.output_path (stdout when empty).
/// Returns the process exit code: 0 ok, 1 config error, 2 backend failure.
int run_subcommand(Subcommand cmd, const RunConfig& cfg, std::ostream& err);

/// Path of the averaging table written next to `path`: <stem>.averaging.csv.
std::string averaging_path(const std::string& path);

}  // namespace tpq::app
