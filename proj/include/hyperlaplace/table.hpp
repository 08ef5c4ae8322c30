#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlaplace {

/// Shortest decimal string that round-trips to the same double (never more
/// than 17 significant digits). Locale-independent; non-finite values print
/// as "inf", "-inf" or "nan".
std::string format_real(double value);

/// Inverse of format_real. Throws std::invalid_argument on malformed input.
double parse_real(std::string_view text);

inline constexpr std::string_view kTableHeader = "d,R,theta,method,value,est_error";

struct TableRow {
  int d = 2;
  double radius = 1.0;
  double theta = 0.0;
  std::string method;
  double value = 0.0;
  double est_error = 0.0;
};

void write_table(std::ostream& out, const std::vector<TableRow>& rows);

/// Parses CSV produced by write_table. Throws std::invalid_argument on a
/// wrong header or malformed row.
std::vector<TableRow> read_table(std::istream& in);

}  // namespace hyperlaplace
