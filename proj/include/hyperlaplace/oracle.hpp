#pragma once

#include <span>
#include <string>
#include <vector>

#include "hyperlaplace/quadrature.hpp"

namespace hyperlaplace::oracle {

/// Outcome of one verification. `passed` is |measured - expected| <= tolerance
/// unless `relative` is set, in which case the difference is divided by
/// |expected|.
struct CheckReport {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool relative = false;
  std::string detail;
};

CheckReport make_report(std::string name, double measured, double expected, double tolerance,
                        bool relative = false, std::string detail = {});

/// One line: "PASS name measured=... expected=... tol=... [detail]".
std::string format_report(const CheckReport& report);

/// Central-difference radial Laplacian
///   (1/R^2) [f'' + (d-1) cot theta f']
/// of the fundamental solution S_R^d (finite-sum route) at theta.
double radial_laplacian_residual(int d, double radius, double theta, double h);

/// Residual at step h compared against 0 with tolerance `tolerance`.
CheckReport check_laplace_annihilation(int d, double radius, double theta, double h,
                                       double tolerance = 1e-5);

/// log2(r(h) / r(h/2)) for the radial Laplacian residual: the observed order.
double laplace_convergence_order(int d, double radius, double theta, double h);

/// Distributional identity with the zonal test function phi = cos theta'
/// and x at the coordinate origin:
///   int (-Delta phi)(x') S_R^d(x, x') dvol'
/// by a Gauss-Legendre product rule over the standard coordinate box with
/// `nodes` points in theta' and `angular_nodes` points per direction angle.
/// The expected value is phi(x) - phi(antipode) = 2; the detail records
/// whether the measurement sits at that value or at phi(x) = 1.
CheckReport check_delta_identity(int d, double radius, int nodes, int angular_nodes = 24);

/// Per radius, |S_R^d(r/R) - G^d(r)| / |G^d(r)| (absolute difference for
/// d = 2, where G may vanish).
std::vector<double> euclidean_limit_differences(int d, double r, std::span<const double> radii);

/// Least-squares slope of log y against log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

/// Passes when the differences decrease strictly along `radii` and the last
/// one is within `tolerance`. Detail lists every difference and the slope.
CheckReport check_euclidean_limit(int d, double r, std::span<const double> radii, double tolerance);

}  // namespace hyperlaplace::oracle
