#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcs/ar1.hpp"

namespace arcs {

// Shortest round-trip decimal rendering of a double (std::to_chars), with
// non-finite values as inf/-inf/nan.
std::string format_double(double x);

// Writes `t,y` rows for y_0..y_T. A nonempty `provenance` is emitted first as
// a single `# ...` comment line.
void write_path_csv(std::ostream& out, const Path& path,
                    std::string_view provenance = {});

// Writes `alpha,log_s` rows for a martingale curve.
void write_curve_csv(std::ostream& out,
                     std::span<const std::pair<double, double>> curve,
                     std::string_view provenance = {});

// Reads a `t,y` series back: skips `#` comments, requires the header and
// consecutive t starting at 0. Errors carry the 1-based line number.
std::vector<double> read_series_csv(std::istream& in);

}  // namespace arcs
