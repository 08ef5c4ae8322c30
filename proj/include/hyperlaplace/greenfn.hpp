#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "hyperlaplace/specfun.hpp"

namespace hyperlaplace::greenfn {

/// Evaluation route for the radial kernel
///
///   I_d(theta) = int_theta^{pi/2} dx / sin^{d-1} x.
///
/// Auto resolves to FiniteSum. Quadrature and the series routes exist to
/// cross-check the closed forms.
enum class Representation { Quadrature, FiniteSum, Recurrence, Hyp2F1, Hyp2F1Euler, FerrersQ, Auto };

/// Command-line spelling: quadrature, finite_sum, recurrence, hyp2f1,
/// hyp2f1_euler, ferrers, auto.
std::string_view to_string(Representation rep);
std::optional<Representation> parse_representation(std::string_view name);

/// The concrete routes in canonical order (Auto excluded).
inline constexpr Representation kAllRepresentations[] = {
    Representation::Quadrature, Representation::FiniteSum,   Representation::Recurrence,
    Representation::Hyp2F1,     Representation::Hyp2F1Euler, Representation::FerrersQ};

struct KernelValue {
  double value = 0.0;
  Representation method = Representation::Auto;
  double error_estimate = 0.0;
  /// Set when the value overflowed to +-inf next to a pole.
  bool saturated = false;
};

/// Hypergeometric routes are only trusted for cos^2 theta <= kSeriesWindow.
inline constexpr double kSeriesWindow = 0.98;

/// Angles closer than this to 0 or pi are rejected.
inline constexpr double kEndpointMargin = 1e-12;

bool in_series_window(double theta);

/// Adaptive quadrature of the defining integral; negative for theta > pi/2.
/// Throws QuadratureError if `tolerance` (relative) cannot be met.
KernelValue i_d_quadrature(int d, double theta, double tolerance = 1e-11);

/// Closed finite sums over trigonometric functions. For odd d both printed
/// variants are evaluated; the first is returned and their difference is
/// reported as the error estimate.
KernelValue i_d_finite_sum(int d, double theta);

/// Odd d only: (binomial cot-power sum, cos theta times reciprocal sine sum).
std::pair<double, double> i_d_finite_sum_odd_variants(int d, double theta);

/// Definite-integral form of the antiderivative recurrence
///   J_m = cos theta / ((m-1) sin^{m-1} theta) + (m-2)/(m-1) J_{m-2},
/// seeded with J_0 = pi/2 - theta and J_1 = log cot(theta/2); returns J_{d-1}.
KernelValue i_d_recurrence(int d, double theta);

/// cos theta 2F1(1/2, d/2; 3/2; cos^2 theta), or with `euler` the transformed
/// cos theta / sin^{d-2} theta 2F1(1, (3-d)/2; 3/2; cos^2 theta).
/// Throws SeriesWindowError outside the series window.
KernelValue i_d_hyp2f1(int d, double theta, bool euler, const specfun::SeriesControl& ctl = {});

/// (d-2)! / (Gamma(d/2) 2^{d/2-1}) (sin theta)^{1-d/2} Q_{d/2-1}^{1-d/2}(cos theta).
/// Throws SeriesWindowError outside the series window.
KernelValue i_d_ferrers(int d, double theta, const specfun::SeriesControl& ctl = {});

/// Dispatch on `rep`. `tolerance` is used by the quadrature route only.
KernelValue radial_kernel(int d, double theta, Representation rep, double tolerance = 1e-11);

/// c0(d) = Gamma(d/2) / (2 pi^{d/2}).
double normalization(int d);

/// S_R^d at geodesic angle theta: c0(d) / R^{d-2} * I_d(theta).
double fundamental_solution(int d, double radius, double theta,
                            Representation rep = Representation::Auto);

/// As fundamental_solution, keeping method and (scaled) error estimate.
KernelValue fundamental_solution_value(int d, double radius, double theta, Representation rep,
                                       double tolerance = 1e-11);

/// Euclidean fundamental solution of -Laplace in R^d at distance r:
/// Gamma(d/2) / (2 pi^{d/2} (d-2)) r^{2-d} for d != 2, log(1/r) / (2 pi) for d = 2.
double euclidean_fundamental(int d, double r);

}  // namespace hyperlaplace::greenfn
