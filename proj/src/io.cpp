// SPDX-License-Identifier: Apache-2.0
#include "wsp/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace wsp::io {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    std::ostringstream os;
    os << "line " << line_no << ": cannot parse number '" << s << "'";
    throw Error(ErrorCode::ParseError, os.str());
  }
  return v;
}

}  // namespace

SignalTable parse_signal_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  SignalTable t;
  bool header = false;
  while (std::getline(is, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line);
    if (!header) {
      if (cells.size() != 3 || cells[1] != "re" || cells[2] != "im" ||
          (cells[0] != "x" && cells[0] != "w" && cells[0] != "p")) {
        throw Error(ErrorCode::ParseError, "expected header 'x,re,im', 'w,re,im' or 'p,re,im'");
      }
      t.axis = cells[0];
      header = true;
      continue;
    }
    if (cells.size() != 3) {
      std::ostringstream os;
      os << "line " << line_no << ": expected 3 columns, got " << cells.size();
      throw Error(ErrorCode::ParseError, os.str());
    }
    const double node = parse_number(cells[0], line_no);
    if (!t.nodes.empty() && !(node > t.nodes.back())) {
      std::ostringstream os;
      os << "line " << line_no << ": nodes must be strictly increasing";
      throw Error(ErrorCode::ParseError, os.str());
    }
    t.nodes.push_back(node);
    t.values.emplace_back(parse_number(cells[1], line_no), parse_number(cells[2], line_no));
  }
  if (!header) throw Error(ErrorCode::ParseError, "empty signal file");
  return t;
}

SignalTable read_signal_csv(const std::filesystem::path& path) { return parse_signal_csv(read_text(path)); }

GridPtr grid_from_table(const SignalTable& t) {
  const Rep rep = t.axis == "x" ? Rep::x_domain : Rep::w_domain;
  if (t.nodes.size() < kMinNodes) throw Error(ErrorCode::TooFewNodes, "signal file has too few rows");
  return std::make_shared<const Grid>(Grid::trapezoid(t.nodes, rep));
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_signal_csv(const std::string& axis, std::span<const double> nodes, std::span<const cplx> values) {
  std::string out = axis + ",re,im\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out += format_double(nodes[i]);
    out += ',';
    out += format_double(values[i].real());
    out += ',';
    out += format_double(values[i].imag());
    out += '\n';
  }
  return out;
}

std::string format_table_csv(const std::string& corner, std::span<const double> row_axis,
                             std::span<const double> col_axis, std::span<const double> body) {
  std::string out = corner;
  for (double c : col_axis) {
    out += ',';
    out += format_double(c);
  }
  out += '\n';
  for (std::size_t r = 0; r < row_axis.size(); ++r) {
    out += format_double(row_axis[r]);
    for (std::size_t c = 0; c < col_axis.size(); ++c) {
      out += ',';
      out += format_double(body[r * col_axis.size() + c]);
    }
    out += '\n';
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot move " + tmp.string() + " into place");
  }
}

}  // namespace wsp::io
