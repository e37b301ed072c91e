#include "arcs/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace arcs {

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_path_csv(std::ostream& out, const Path& path,
                    std::string_view provenance) {
  if (!provenance.empty()) {
    out << "# " << provenance << '\n';
  }
  out << "t,y\n";
  for (std::size_t t = 0; t < path.values.size(); ++t) {
    out << t << ',' << format_double(path.values[t]) << '\n';
  }
}

void write_curve_csv(std::ostream& out,
                     std::span<const std::pair<double, double>> curve,
                     std::string_view provenance) {
  if (!provenance.empty()) {
    out << "# " << provenance << '\n';
  }
  out << "alpha,log_s\n";
  for (const auto& [alpha, log_s] : curve) {
    out << format_double(alpha) << ',' << format_double(log_s) << '\n';
  }
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("csv parse error at line " +
                           std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<double> read_series_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!saw_header) {
      if (line != "t,y") parse_fail(line_no, "expected header 't,y'");
      saw_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) parse_fail(line_no, "expected 't,y' row");
    std::int64_t t = 0;
    const char* tb = line.data();
    auto tr = std::from_chars(tb, tb + comma, t);
    if (tr.ec != std::errc{} || tr.ptr != tb + comma) {
      parse_fail(line_no, "bad t field '" + line.substr(0, comma) + "'");
    }
    if (t != static_cast<std::int64_t>(values.size())) {
      parse_fail(line_no, "t out of order: expected " +
                              std::to_string(values.size()) + ", got " +
                              std::to_string(t));
    }
    double y = 0.0;
    const char* yb = line.data() + comma + 1;
    const char* ye = line.data() + line.size();
    auto yr = std::from_chars(yb, ye, y);
    if (yr.ec != std::errc{} || yr.ptr != ye) {
      parse_fail(line_no, "bad y field '" + line.substr(comma + 1) + "'");
    }
    if (!std::isfinite(y)) parse_fail(line_no, "non-finite y");
    values.push_back(y);
  }
  if (!saw_header) {
    throw std::runtime_error("csv parse error: missing 't,y' header");
  }
  if (values.empty()) {
    throw std::runtime_error("csv parse error: no data rows");
  }
  return values;
}

}  // namespace arcs
