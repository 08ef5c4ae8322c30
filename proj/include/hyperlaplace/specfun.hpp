#pragma once

#include <cstdint>

namespace hyperlaplace::specfun {

/// Truncation policy for hypergeometric series.
struct SeriesControl {
  double relative_tolerance = 1e-15;
  int max_terms = 100000;

  void validate() const;
};

/// Degree, order and argument of a Ferrers function P_nu^mu(x) / Q_nu^mu(x).
struct FerrersOrderDegree {
  double degree;  // nu
  double order;   // mu
  double x;       // strictly inside (-1, 1)
};

/// Gamma function on the real line.
///
/// Integer and half-integer arguments are evaluated exactly by recurrence
/// from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi); anything else goes through a
/// Lanczos approximation (g = 7, 9 terms) with reflection for z < 1/2.
/// Throws std::domain_error at the poles 0, -1, -2, ...
double gamma_real(double z);

/// 1/Gamma(z), returning exactly 0 at the poles of Gamma.
double reciprocal_gamma(double z);

/// n!! for n >= -1. Throws std::invalid_argument for n < -1 and
/// std::overflow_error if the result does not fit in 64 bits.
std::uint64_t double_factorial(int n);

/// Rising factorial (z)_n = z (z+1) ... (z+n-1); (z)_0 = 1.
double pochhammer(double z, int n);

/// Gauss hypergeometric series 2F1(a, b; c; z) for |z| < 1.
///
/// Terms are accumulated until three consecutive terms fall below
/// ctl.relative_tolerance times the running sum, or the series terminates.
/// Throws ConvergenceError after ctl.max_terms terms and std::domain_error
/// if c is a nonpositive integer or |z| >= 1.
double gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl = {});

/// Ferrers function of the first kind via its two-term 2F1 expansion.
///
/// The sin/cos times Gamma coefficients are folded through the reflection
/// formula into reciprocal gammas, so the expansion stays finite when nu+mu
/// is a negative integer (where the printed form has removable poles).
double ferrers_p(const FerrersOrderDegree& pd, const SeriesControl& ctl = {});

/// Ferrers function of the second kind via its two-term 2F1 expansion.
/// Undefined (std::domain_error) when nu+mu is a negative integer.
double ferrers_q(const FerrersOrderDegree& pd, const SeriesControl& ctl = {});

/// True when nu+mu is a negative integer, where Q_nu^mu does not exist.
bool ferrers_q_undefined(double degree, double order);

}  // namespace hyperlaplace::specfun
