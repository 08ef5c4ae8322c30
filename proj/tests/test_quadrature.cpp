#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperlaplace/errors.hpp"
#include "hyperlaplace/quadrature.hpp"

using namespace hyperlaplace::oracle;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("adaptive quadrature on elementary integrals") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  const auto r = integrate([](double x) { return 1.0 / (std::sin(x) * std::sin(x)); }, kPi / 4, kPi / 2);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r.error_estimate <= 1e-11);
}

TEST_CASE("endpoint log singularities are never sampled") {
  // sin t cos t log cot(t/2) has integrable log singularities at 0 and pi.
  const auto r = integrate(
      [](double t) { return std::sin(t) * std::cos(t) * std::log(1.0 / std::tan(0.5 * t)); }, 0.0, kPi);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));
  // -log x on (0, 1]: value 1.
  CHECK(integrate([](double x) { return -std::log(x); }, 0.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quadrature reports failure with its best estimate") {
  QuadratureSpec tight{1e-300, 1e-300, 3};
  try {
    integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, tight);
    FAIL("expected QuadratureError");
  } catch (const hyperlaplace::QuadratureError& e) {
    CHECK(e.value() > 1.5);
    CHECK(e.error_estimate() > 0.0);
  }
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((QuadratureSpec{-1.0, 1e-10, 10}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QuadratureSpec{1e-10, 1e-10, 0}.validate()), std::invalid_argument);
}

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {1, 2, 5, 20, 64}) {
    const auto rule = gauss_legendre(n);
    double weight_sum = 0.0;
    for (double w : rule.weights) weight_sum += w;
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for polynomials of degree 2n - 1.
    double moment = 0.0;
    for (int i = 0; i < n; ++i) moment += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
    CHECK(moment == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  const auto mapped = gauss_legendre(30, 0.0, kPi);
  double s = 0.0;
  for (int i = 0; i < 30; ++i) s += mapped.weights[i] * std::sin(mapped.nodes[i]);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}
