#pragma once

#include <functional>
#include <vector>

namespace hyperlaplace::oracle {

struct QuadratureSpec {
  double absolute_tolerance = 1e-13;
  double relative_tolerance = 1e-11;
  int max_subdivisions = 2000;

  void validate() const;
};

struct QuadratureResult {
  double value;
  double error_estimate;
  int subintervals;
};

/// Globally adaptive Gauss-Kronrod (10/21) quadrature of f over [a, b].
///
/// The interval with the largest local error estimate is bisected until the
/// summed estimate is below max(absolute, relative * |value|). The 21 nodes
/// are interior to each subinterval, so integrable endpoint singularities
/// are never sampled. Throws QuadratureError (carrying the best estimate)
/// once max_subdivisions is exhausted, std::invalid_argument if a >= b.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// The rule mapped affinely onto [a, b].
GaussLegendreRule gauss_legendre(int n, double a, double b);

}  // namespace hyperlaplace::oracle
