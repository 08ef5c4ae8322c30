#include "hyperlaplace/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyperlaplace/errors.hpp"
#include "hyperlaplace/greenfn.hpp"

namespace hyperlaplace::harmonics {

namespace {

constexpr double kDegenerateMagnitude = 1e-8;

bool uses_second_kind(RadialSolutionKind kind) {
  return kind == RadialSolutionKind::U2Plus || kind == RadialSolutionKind::U2Minus;
}

// C(n, k) in exact integer arithmetic; n small.
std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::string_view to_string(RadialSolutionKind kind) {
  switch (kind) {
    case RadialSolutionKind::U1Plus: return "u1+";
    case RadialSolutionKind::U1Minus: return "u1-";
    case RadialSolutionKind::U2Plus: return "u2+";
    case RadialSolutionKind::U2Minus: return "u2-";
  }
  return "?";
}

void QuantumNumbers::validate() const {
  if (d < 2) throw std::invalid_argument("QuantumNumbers: d must be >= 2");
  if (l < 0) throw std::invalid_argument("QuantumNumbers: l must be >= 0");
}

double ferrers_degree(const QuantumNumbers& q) { return 0.5 * q.d - 1.0; }

double ferrers_order(const QuantumNumbers& q, RadialSolutionKind kind) {
  const double magnitude = 0.5 * q.d - 1.0 + q.l;
  const bool plus = kind == RadialSolutionKind::U1Plus || kind == RadialSolutionKind::U2Plus;
  return plus ? -magnitude : magnitude;
}

bool is_defined(const QuantumNumbers& q, RadialSolutionKind kind) {
  q.validate();
  if (!uses_second_kind(kind)) return true;
  return !specfun::ferrers_q_undefined(ferrers_degree(q), ferrers_order(q, kind));
}

double radial_harmonic(const QuantumNumbers& q, RadialSolutionKind kind, double theta,
                       const specfun::SeriesControl& ctl) {
  q.validate();
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw std::domain_error("radial_harmonic: theta must lie in (0, pi)");
  if (!greenfn::in_series_window(theta))
    throw SeriesWindowError("radial_harmonic: cos^2 theta outside the series window");

  const specfun::FerrersOrderDegree pd{ferrers_degree(q), ferrers_order(q, kind), std::cos(theta)};
  const double ferrers = uses_second_kind(kind) ? specfun::ferrers_q(pd, ctl) : specfun::ferrers_p(pd, ctl);
  return std::pow(std::sin(theta), -pd.degree) * ferrers;
}

std::optional<double> ode_residual(const QuantumNumbers& q, RadialSolutionKind kind, double theta,
                                   double h, const specfun::SeriesControl& ctl) {
  if (!(h > 0.0)) throw std::invalid_argument("ode_residual: h must be > 0");
  if (!(theta - h > 0.0 && theta + h < std::numbers::pi))
    throw std::domain_error("ode_residual: stencil leaves (0, pi)");

  const double um = radial_harmonic(q, kind, theta - h, ctl);
  const double u0 = radial_harmonic(q, kind, theta, ctl);
  const double up = radial_harmonic(q, kind, theta + h, ctl);
  if (std::max({std::abs(um), std::abs(u0), std::abs(up)}) < kDegenerateMagnitude) return std::nullopt;

  const double second = (up - 2.0 * u0 + um) / (h * h);
  const double first = (up - um) / (2.0 * h);
  const double s = std::sin(theta);
  return second + (q.d - 1) * std::cos(theta) / s * first + angular_eigenvalue(q) * u0 / (s * s);
}

std::string_view to_string(BranchStatus status) {
  switch (status) {
    case BranchStatus::Regular: return "regular";
    case BranchStatus::Undefined: return "undefined";
    case BranchStatus::Degenerate: return "degenerate";
    case BranchStatus::Constant: return "constant";
  }
  return "?";
}

OdeConvergence ode_convergence(const QuantumNumbers& q, RadialSolutionKind kind, double theta, double h,
                               const specfun::SeriesControl& ctl) {
  OdeConvergence out;
  if (!is_defined(q, kind)) {
    out.status = BranchStatus::Undefined;
    return out;
  }
  const auto coarse = ode_residual(q, kind, theta, h, ctl);
  if (!coarse) {
    out.status = BranchStatus::Degenerate;
    return out;
  }
  const double um = radial_harmonic(q, kind, theta - h, ctl);
  const double u0 = radial_harmonic(q, kind, theta, ctl);
  const double up = radial_harmonic(q, kind, theta + h, ctl);
  const double variation = std::max(std::abs(up - u0), std::abs(um - u0));
  const auto fine = ode_residual(q, kind, theta, 0.5 * h, ctl);
  out.residual_coarse = std::abs(*coarse);
  out.residual_fine = fine ? std::abs(*fine) : 0.0;
  if (variation <= 1e-12 * std::abs(u0)) {
    out.status = BranchStatus::Constant;
    return out;
  }
  out.order = std::log2(out.residual_coarse / out.residual_fine);
  return out;
}

double angular_eigenvalue(const QuantumNumbers& q) {
  q.validate();
  return -static_cast<double>(q.l) * (q.l + q.d - 2);
}

std::uint64_t degeneracy(const QuantumNumbers& q) {
  q.validate();
  if (q.d == 2) return q.l == 0 ? 1 : 2;
  // (d-3+l)! / (l! (d-2)!) = C(d-3+l, l) / (d-2)
  const std::uint64_t numerator = static_cast<std::uint64_t>(2 * q.l + q.d - 2) * binomial(q.d - 3 + q.l, q.l);
  return numerator / static_cast<std::uint64_t>(q.d - 2);
}

}  // namespace hyperlaplace::harmonics
