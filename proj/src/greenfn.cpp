#include "hyperlaplace/greenfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyperlaplace/errors.hpp"
#include "hyperlaplace/quadrature.hpp"

namespace hyperlaplace::greenfn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void validate(int d, double theta) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2, got " + std::to_string(d));
  if (!(theta >= kEndpointMargin && theta <= kPi - kEndpointMargin))
    throw std::domain_error("theta must lie in (0, pi) away from the poles, got " +
                            std::to_string(theta));
}

// m!! / (m+1)!! for m >= -1, accumulated pairwise so large d does not overflow.
double double_factorial_ratio(int m) {
  double r = 1.0;
  for (int k = m; k >= 1; k -= 2) r *= static_cast<double>(k) / (k + 1);
  return r;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double log_cot_half(double theta) { return -std::log(std::tan(0.5 * theta)); }

KernelValue finish(double value, Representation method, double error) {
  const bool saturated = std::isinf(value);
  return {value, method, saturated ? std::numeric_limits<double>::infinity() : error, saturated};
}

void require_window(double theta, const char* route) {
  if (!in_series_window(theta)) {
    throw SeriesWindowError(std::string(route) + ": cos^2 theta = " +
                            std::to_string(std::cos(theta) * std::cos(theta)) +
                            " is outside the series window; use finite_sum or recurrence");
  }
}

}  // namespace

std::string_view to_string(Representation rep) {
  switch (rep) {
    case Representation::Quadrature: return "quadrature";
    case Representation::FiniteSum: return "finite_sum";
    case Representation::Recurrence: return "recurrence";
    case Representation::Hyp2F1: return "hyp2f1";
    case Representation::Hyp2F1Euler: return "hyp2f1_euler";
    case Representation::FerrersQ: return "ferrers";
    case Representation::Auto: return "auto";
  }
  return "unknown";
}

std::optional<Representation> parse_representation(std::string_view name) {
  for (Representation rep : kAllRepresentations) {
    if (to_string(rep) == name) return rep;
  }
  if (name == "auto") return Representation::Auto;
  return std::nullopt;
}

bool in_series_window(double theta) {
  const double c = std::cos(theta);
  return c * c <= kSeriesWindow;
}

KernelValue i_d_quadrature(int d, double theta, double tolerance) {
  validate(d, theta);
  if (!(tolerance > 0.0)) throw std::invalid_argument("quadrature tolerance must be > 0");
  if (theta == 0.5 * kPi) return {0.0, Representation::Quadrature, 0.0, false};

  const int power = d - 1;
  auto integrand = [power](double x) { return 1.0 / std::pow(std::sin(x), power); };
  oracle::QuadratureSpec spec;
  spec.relative_tolerance = tolerance;
  spec.absolute_tolerance = tolerance * 1e-3;
  spec.max_subdivisions = 5000;

  const bool below = theta < 0.5 * kPi;
  const auto result = below ? oracle::integrate(integrand, theta, 0.5 * kPi, spec)
                            : oracle::integrate(integrand, 0.5 * kPi, theta, spec);
  return finish(below ? result.value : -result.value, Representation::Quadrature,
                result.error_estimate);
}

std::pair<double, double> i_d_finite_sum_odd_variants(int d, double theta) {
  validate(d, theta);
  if (d % 2 == 0) throw std::invalid_argument("odd finite-sum variants need odd d");
  const int n = (d - 1) / 2;
  const double cot = 1.0 / std::tan(theta);
  const double cot2 = cot * cot;
  const double s = std::sin(theta);

  // ((d-3)/2)! sum_k cot^{2k-1} / ((2k-1) (k-1)! ((d-2k-1)/2)!)
  double binomial_form = 0.0;
  double cot_power = cot;
  for (int k = 1; k <= n; ++k) {
    binomial_form += cot_power / ((2 * k - 1) * factorial(k - 1) * factorial((d - 2 * k - 1) / 2));
    cot_power *= cot2;
  }
  binomial_form *= factorial((d - 3) / 2);

  // (d-3)!!/(d-2)!! cos theta sum_k (2k-3)!!/(2k-2)!! / sin^{2k-1} theta
  double sine_form = 0.0;
  double inv_sin_power = 1.0 / s;
  for (int k = 1; k <= n; ++k) {
    sine_form += double_factorial_ratio(2 * k - 3) * inv_sin_power;
    inv_sin_power /= s * s;
  }
  sine_form *= double_factorial_ratio(d - 3) * std::cos(theta);
  return {binomial_form, sine_form};
}

KernelValue i_d_finite_sum(int d, double theta) {
  validate(d, theta);
  if (d % 2 == 0) {
    const double s2 = std::pow(std::sin(theta), 2);
    double inner = 0.0;
    double inv_sin_power = 1.0;
    for (int k = 1; k <= d / 2 - 1; ++k) {
      inv_sin_power /= s2;
      inner += double_factorial_ratio(2 * k - 2) * inv_sin_power;
    }
    const double value =
        double_factorial_ratio(d - 3) * (log_cot_half(theta) + std::cos(theta) * inner);
    return finish(value, Representation::FiniteSum, 16.0 * d * kEps * std::abs(value));
  }
  const auto [first, second] = i_d_finite_sum_odd_variants(d, theta);
  return finish(first, Representation::FiniteSum, std::abs(first - second));
}

KernelValue i_d_recurrence(int d, double theta) {
  validate(d, theta);
  const int target = d - 1;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  double j = (target % 2 == 0) ? 0.5 * kPi - theta : log_cot_half(theta);
  double sin_power = (target % 2 == 0) ? s : s * s;  // sin^{m-1}
  for (int m = (target % 2 == 0) ? 2 : 3; m <= target; m += 2) {
    j = c / ((m - 1) * sin_power) + static_cast<double>(m - 2) / (m - 1) * j;
    sin_power *= s * s;
  }
  return finish(j, Representation::Recurrence, 16.0 * d * kEps * std::abs(j));
}

KernelValue i_d_hyp2f1(int d, double theta, bool euler, const specfun::SeriesControl& ctl) {
  validate(d, theta);
  require_window(theta, euler ? "hyp2f1_euler" : "hyp2f1");
  const double c = std::cos(theta);
  const double z = c * c;
  double value = 0.0;
  if (euler) {
    value = c / std::pow(std::sin(theta), d - 2) * specfun::gauss_2f1(1.0, 0.5 * (3 - d), 1.5, z, ctl);
  } else {
    value = c * specfun::gauss_2f1(0.5, 0.5 * d, 1.5, z, ctl);
  }
  const double nominal = std::max(ctl.relative_tolerance, 64.0 * kEps);
  return finish(value, euler ? Representation::Hyp2F1Euler : Representation::Hyp2F1,
                nominal * std::abs(value));
}

KernelValue i_d_ferrers(int d, double theta, const specfun::SeriesControl& ctl) {
  validate(d, theta);
  require_window(theta, "ferrers");
  const double nu = 0.5 * d - 1.0;
  const double prefactor = specfun::gamma_real(d - 1.0) /
                           (specfun::gamma_real(0.5 * d) * std::exp2(nu));
  const double q = specfun::ferrers_q({nu, -nu, std::cos(theta)}, ctl);
  const double value = prefactor * std::pow(std::sin(theta), -nu) * q;
  const double nominal = std::max(ctl.relative_tolerance, 64.0 * kEps);
  return finish(value, Representation::FerrersQ, nominal * std::abs(value));
}

KernelValue radial_kernel(int d, double theta, Representation rep, double tolerance) {
  switch (rep) {
    case Representation::Quadrature: return i_d_quadrature(d, theta, tolerance);
    case Representation::Auto:
    case Representation::FiniteSum: return i_d_finite_sum(d, theta);
    case Representation::Recurrence: return i_d_recurrence(d, theta);
    case Representation::Hyp2F1: return i_d_hyp2f1(d, theta, false);
    case Representation::Hyp2F1Euler: return i_d_hyp2f1(d, theta, true);
    case Representation::FerrersQ: return i_d_ferrers(d, theta);
  }
  throw std::invalid_argument("unknown representation");
}

double normalization(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  return specfun::gamma_real(0.5 * d) / (2.0 * std::pow(kPi, 0.5 * d));
}

KernelValue fundamental_solution_value(int d, double radius, double theta, Representation rep,
                                       double tolerance) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("radius must be > 0");
  KernelValue k = radial_kernel(d, theta, rep, tolerance);
  const double scale = normalization(d) / std::pow(radius, d - 2);
  k.value *= scale;
  k.error_estimate *= scale;
  return k;
}

double fundamental_solution(int d, double radius, double theta, Representation rep) {
  return fundamental_solution_value(d, radius, theta, rep).value;
}

double euclidean_fundamental(int d, double r) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(r > 0.0)) throw std::domain_error("euclidean_fundamental: r must be > 0");
  if (d == 2) return std::log(1.0 / r) / (2.0 * kPi);
  return specfun::gamma_real(0.5 * d) / (2.0 * std::pow(kPi, 0.5 * d) * (d - 2)) *
         std::pow(r, 2.0 - d);
}

}  // namespace hyperlaplace::greenfn
