#include "hyperlaplace/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyperlaplace/errors.hpp"

namespace hyperlaplace::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

bool is_integer(double z) { return std::isfinite(z) && std::floor(z) == z; }

bool is_nonpositive_integer(double z) { return is_integer(z) && z <= 0.0; }

bool is_half_integer(double z) { return is_integer(2.0 * z) && !is_integer(z); }

// Gamma on integers and half-integers by recurrence from Gamma(1), Gamma(1/2).
double gamma_exact(double z) {
  double base = is_integer(z) ? 1.0 : 0.5;
  double value = is_integer(z) ? 1.0 : kSqrtPi;
  if (z >= base) {
    for (double t = base; t < z; t += 1.0) value *= t;
  } else {
    // Gamma(t) = Gamma(t + 1) / t, walking down from the base.
    for (double t = base - 1.0; t >= z; t -= 1.0) value /= t;
  }
  return value;
}

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
double gamma_lanczos(double z) {
  static constexpr std::array<double, 9> kCoef = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z < 0.5) {
    return kPi / (std::sin(kPi * z) * gamma_lanczos(1.0 - z));
  }
  z -= 1.0;
  double x = kCoef[0];
  for (std::size_t i = 1; i < kCoef.size(); ++i) x += kCoef[i] / (z + static_cast<double>(i));
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// sin(pi s / 2) and cos(pi s / 2), exact when s is an integer.
double sin_half_pi(double s) {
  if (is_integer(s) && std::abs(s) < 1e15) {
    static constexpr std::array<double, 4> kTable = {0.0, 1.0, 0.0, -1.0};
    const auto k = static_cast<long long>(s);
    return kTable[static_cast<std::size_t>(((k % 4) + 4) % 4)];
  }
  return std::sin(0.5 * kPi * s);
}

double cos_half_pi(double s) { return sin_half_pi(s + 1.0); }

void validate_ferrers(const FerrersOrderDegree& pd) {
  if (!std::isfinite(pd.degree) || !std::isfinite(pd.order))
    throw std::domain_error("ferrers: degree and order must be finite");
  if (!(pd.x > -1.0 && pd.x < 1.0))
    throw std::domain_error("ferrers: argument must lie strictly inside (-1, 1)");
}

}  // namespace

void SeriesControl::validate() const {
  if (!(relative_tolerance > 0.0)) throw std::invalid_argument("SeriesControl: tolerance must be > 0");
  if (max_terms < 1) throw std::invalid_argument("SeriesControl: max_terms must be >= 1");
}

double gamma_real(double z) {
  if (std::isnan(z)) return z;
  if (is_nonpositive_integer(z))
    throw std::domain_error("gamma_real: pole at nonpositive integer " + std::to_string(z));
  if ((is_integer(z) || is_half_integer(z)) && std::abs(z) <= 200.0) return gamma_exact(z);
  return gamma_lanczos(z);
}

double reciprocal_gamma(double z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return 1.0 / gamma_real(z);
}

std::uint64_t double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
  std::uint64_t result = 1;
  for (int k = n; k > 1; k -= 2) {
    const auto factor = static_cast<std::uint64_t>(k);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor)
      throw std::overflow_error("double_factorial: result exceeds 64 bits");
    result *= factor;
  }
  return result;
}

double pochhammer(double z, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
  double result = 1.0;
  for (int i = 0; i < n; ++i) result *= z + i;
  return result;
}

double gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(c)) throw std::domain_error("gauss_2f1: c is a nonpositive integer");
  if (!(std::abs(z) < 1.0)) throw std::domain_error("gauss_2f1: series requires |z| < 1");

  double sum = 1.0;
  double term = 1.0;
  int quiet = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    const double k = n;
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= ctl.relative_tolerance * std::abs(sum)) {
      if (++quiet == 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: no convergence after " + std::to_string(ctl.max_terms) +
                         " terms (z = " + std::to_string(z) + ")");
}

bool ferrers_q_undefined(double degree, double order) {
  const double s = degree + order;
  return is_integer(s) && s <= -1.0;
}

double ferrers_p(const FerrersOrderDegree& pd, const SeriesControl& ctl) {
  validate_ferrers(pd);
  const double nu = pd.degree;
  const double mu = pd.order;
  const double s = nu + mu;
  const double x = pd.x;
  const double x2 = x * x;
  const double envelope = std::pow(1.0 - x2, -0.5 * mu);

  // sin(pi s/2) Gamma(s/2 + 1)     = -pi / Gamma(-s/2)
  // cos(pi s/2) Gamma((s + 1)/2)   =  pi / Gamma((1 - s)/2)
  const double odd_coef = std::exp2(mu + 1.0) / kSqrtPi * (-kPi * reciprocal_gamma(-0.5 * s)) *
                          reciprocal_gamma(0.5 * (nu - mu + 1.0));
  const double even_coef = std::exp2(mu) / kSqrtPi * (kPi * reciprocal_gamma(0.5 * (1.0 - s))) *
                           reciprocal_gamma(0.5 * (nu - mu + 2.0));

  double value = 0.0;
  if (odd_coef != 0.0 && x != 0.0) {
    value += odd_coef * x * envelope *
             gauss_2f1(0.5 * (1.0 - s), 0.5 * (nu - mu + 2.0), 1.5, x2, ctl);
  }
  if (even_coef != 0.0) {
    value += even_coef * envelope * gauss_2f1(-0.5 * s, 0.5 * (nu - mu + 1.0), 0.5, x2, ctl);
  }
  return value;
}

double ferrers_q(const FerrersOrderDegree& pd, const SeriesControl& ctl) {
  validate_ferrers(pd);
  if (ferrers_q_undefined(pd.degree, pd.order))
    throw std::domain_error("ferrers_q: undefined when degree + order is a negative integer");
  const double nu = pd.degree;
  const double mu = pd.order;
  const double s = nu + mu;
  const double x = pd.x;
  const double x2 = x * x;
  const double envelope = std::pow(1.0 - x2, -0.5 * mu);

  const double c = cos_half_pi(s);
  const double sn = sin_half_pi(s);
  const double odd_coef = c == 0.0 ? 0.0
                                   : kSqrtPi * std::exp2(mu) * c * gamma_real(0.5 * (s + 2.0)) *
                                         reciprocal_gamma(0.5 * (nu - mu + 1.0));
  const double even_coef = sn == 0.0 ? 0.0
                                     : -kSqrtPi * std::exp2(mu - 1.0) * sn *
                                           gamma_real(0.5 * (s + 1.0)) *
                                           reciprocal_gamma(0.5 * (nu - mu + 2.0));

  double value = 0.0;
  if (odd_coef != 0.0 && x != 0.0) {
    value += odd_coef * x * envelope *
             gauss_2f1(0.5 * (1.0 - s), 0.5 * (nu - mu + 2.0), 1.5, x2, ctl);
  }
  if (even_coef != 0.0) {
    value += even_coef * envelope * gauss_2f1(-0.5 * s, 0.5 * (nu - mu + 1.0), 0.5, x2, ctl);
  }
  return value;
}

}  // namespace hyperlaplace::specfun
