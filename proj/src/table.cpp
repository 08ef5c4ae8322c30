#include "hyperlaplace/table.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyperlaplace {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf.data(), end);
}

double parse_real(std::string_view text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  return value;
}

void write_table(std::ostream& out, const std::vector<TableRow>& rows) {
  out << kTableHeader << '\n';
  for (const TableRow& row : rows) {
    out << row.d << ',' << format_real(row.radius) << ',' << format_real(row.theta) << ','
        << row.method << ',' << format_real(row.value) << ',' << format_real(row.est_error) << '\n';
  }
}

std::vector<TableRow> read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTableHeader)
    throw std::invalid_argument("table: missing or unexpected header");
  std::vector<TableRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw std::invalid_argument("table: expected 6 fields in '" + line + "'");
    TableRow row;
    const auto [p, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), row.d);
    if (ec != std::errc{} || p != fields[0].data() + fields[0].size())
      throw std::invalid_argument("table: bad dimension '" + fields[0] + "'");
    row.radius = parse_real(fields[1]);
    row.theta = parse_real(fields[2]);
    row.method = fields[3];
    row.value = parse_real(fields[4]);
    row.est_error = parse_real(fields[5]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hyperlaplace
