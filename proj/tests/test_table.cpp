#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyperlaplace/table.hpp"

using namespace hyperlaplace;

TEST_CASE("real formatting is shortest round-trip") {
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(-2.5e-300) == "-2.5e-300");
  CHECK(format_real(0.07957747154594767) == "0.07957747154594767");
  CHECK(format_real(1.2345678901234567e20) == "1.2345678901234567e+20");
  CHECK(format_real(1e22) == "1e+22");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_real(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_real(std::nan("")) == "nan");

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double v = mantissa(rng) * std::pow(10.0, exponent(rng));
    const std::string s = format_real(v);
    CHECK(parse_real(s) == v);
    std::string mantissa_digits;
    for (char c : s) {
      if (c == 'e') break;
      if (c >= '0' && c <= '9' && !(mantissa_digits.empty() && c == '0')) mantissa_digits += c;
    }
    CHECK(mantissa_digits.size() <= 17);
  }
}

TEST_CASE("parse_real rejects junk") {
  CHECK_THROWS_AS(parse_real("1.0x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_real(""), std::invalid_argument);
  CHECK(std::isnan(parse_real("nan")));
  CHECK(parse_real("-inf") == -std::numeric_limits<double>::infinity());
}

TEST_CASE("table write and read round-trip byte for byte") {
  std::vector<TableRow> rows = {
      {4, 1.0, 1.0, "finite_sum", 0.03464278081964632, 4.923035251585805e-16},
      {4, 1.0, 0.05, "hyp2f1", std::nan(""), std::nan("")},
      {9, 2.5, 3.0, "quadrature", -1.2345678901234567e+20, std::numeric_limits<double>::infinity()},
  };
  std::ostringstream first;
  write_table(first, rows);
  CHECK(first.str().rfind("d,R,theta,method,value,est_error\n", 0) == 0);
  std::istringstream in(first.str());
  const auto parsed = read_table(in);
  REQUIRE(parsed.size() == rows.size());
  CHECK(parsed[0].method == "finite_sum");
  CHECK(std::isnan(parsed[1].value));
  std::ostringstream second;
  write_table(second, parsed);
  CHECK(second.str() == first.str());
}

TEST_CASE("malformed tables") {
  std::istringstream bad_header("d,R,theta\n");
  CHECK_THROWS_AS(read_table(bad_header), std::invalid_argument);
  std::istringstream short_row("d,R,theta,method,value,est_error\n3,1,0.5,finite_sum\n");
  CHECK_THROWS_AS(read_table(short_row), std::invalid_argument);
  std::istringstream bad_number("d,R,theta,method,value,est_error\nx,1,0.5,finite_sum,1,0\n");
  CHECK_THROWS_AS(read_table(bad_number), std::invalid_argument);
}
