// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "wsp/grid.hpp"

namespace wsp::io {

/// Two-column complex signal read from "axis,re,im" CSV.
struct SignalTable {
  std::string axis;  // "x", "w" or "p"
  std::vector<double> nodes;
  std::vector<cplx> values;
};

/// Parses a signal CSV. Nodes must be strictly increasing.
SignalTable parse_signal_csv(const std::string& text);
SignalTable read_signal_csv(const std::filesystem::path& path);

/// Grid with trapezoid weights on the table's nodes ("x" is x_domain, "w"
/// and "p" are w_domain).
GridPtr grid_from_table(const SignalTable& t);

std::string format_signal_csv(const std::string& axis, std::span<const double> nodes, std::span<const cplx> values);

/// First row: corner label then the column axis; each following row: row
/// axis value then the body row.
std::string format_table_csv(const std::string& corner, std::span<const double> row_axis,
                             std::span<const double> col_axis, std::span<const double> body);

/// Round-trippable decimal form of a double.
std::string format_double(double v);

std::string read_text(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace wsp::io
