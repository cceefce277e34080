// Copyright 2026 The tpq Authors
// SPDX-License-Identifier: Apache-2.0

#include "tpq/app/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "tpq/error.hpp"

namespace tpq::app {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw Error("to_chars failed");
  return std::string(buf.data(), end);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> columns,
                     const std::vector<std::pair<std::string, std::string>>& comments)
    : out_(out), width_(columns.size()) {
  for (const auto& [key, value] : comments) out_ << "# " << key << '=' << value << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ << (i ? "," : "") << columns[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != width_) throw InvalidArgument("CSV row width does not match header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            out_ << format_double(v);
          } else if constexpr (!std::is_same_v<T, std::monostate>) {
            out_ << v;
          }
        },
        cells[i]);
  }
  out_ << '\n';
}

}  // namespace tpq::app
