// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace tpq::app {

/// Empty cell, number or text. Doubles use the shortest round-trip form.
using Cell = std::variant<std::monostate, double, std::int64_t, std::uint64_t, std::string>;

std::string format_double(double v);

/// Writes "# key=value" comment lines, then the header, then rows. Text
/// cells are written verbatim and must not contain commas or newlines.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> columns,
            const std::vector<std::pair<std::string, std::string>>& comments = {});

  void row(const std::vector<Cell>& cells);

 private:
  std::ostream& out_;
  std::size_t width_;
};

}  // namespace tpq::app
