#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hyperlaplace/specfun.hpp"

namespace hyperlaplace::harmonics {

/// Which of the four separated radial solutions
///   u(theta) = (sin theta)^{1-d/2} {P or Q}_{d/2-1}^{mu}(cos theta)
/// to evaluate. U1* use Ferrers P, U2* use Ferrers Q. The Plus kinds take
/// mu = -(d/2 - 1 + l), the Minus kinds mu = +(d/2 - 1 + l); with this
/// labelling U2Plus at l = 0 is the branch proportional to I_d.
enum class RadialSolutionKind { U1Plus, U1Minus, U2Plus, U2Minus };

inline constexpr RadialSolutionKind kAllKinds[] = {
    RadialSolutionKind::U1Plus, RadialSolutionKind::U1Minus, RadialSolutionKind::U2Plus,
    RadialSolutionKind::U2Minus};

std::string_view to_string(RadialSolutionKind kind);

struct QuantumNumbers {
  int d = 2;
  int l = 0;

  void validate() const;
};

/// Ferrers degree d/2 - 1.
double ferrers_degree(const QuantumNumbers& q);

/// Ferrers order used by `kind`.
double ferrers_order(const QuantumNumbers& q, RadialSolutionKind kind);

/// False when the kind needs Q_nu^mu with nu + mu a negative integer
/// (U2Plus for l >= 1), where the second-kind function does not exist.
bool is_defined(const QuantumNumbers& q, RadialSolutionKind kind);

/// Value of the selected radial solution at theta in (0, pi).
/// Throws std::domain_error for undefined kinds and SeriesWindowError when
/// cos^2 theta leaves the series window.
double radial_harmonic(const QuantumNumbers& q, RadialSolutionKind kind, double theta,
                       const specfun::SeriesControl& ctl = {});

/// Central-difference estimate of
///   u'' + (d-1) cot theta u' - l (l+d-2) u / sin^2 theta
/// at theta with step h. Returns std::nullopt (skip) when max |u| over the
/// three stencil points is below 1e-8, i.e. the branch is numerically
/// identically zero.
std::optional<double> ode_residual(const QuantumNumbers& q, RadialSolutionKind kind, double theta,
                                   double h, const specfun::SeriesControl& ctl = {});

/// How a radial solution branch behaves under the finite-difference check.
enum class BranchStatus {
  Regular,     // residual measured; order is meaningful
  Undefined,   // Q_nu^mu with nu + mu a negative integer
  Degenerate,  // numerically identically zero (|u| < 1e-8 on the stencil)
  Constant,    // constant in theta: the stencil is exact and the residual is rounding only
};

std::string_view to_string(BranchStatus status);

struct OdeConvergence {
  BranchStatus status = BranchStatus::Regular;
  double residual_coarse = 0.0;  // |residual| at h
  double residual_fine = 0.0;    // |residual| at h/2
  double order = 0.0;            // log2(coarse / fine), Regular only
};

/// Observed convergence order of ode_residual when h is halved, with the
/// branch classified first.
OdeConvergence ode_convergence(const QuantumNumbers& q, RadialSolutionKind kind, double theta, double h,
                               const specfun::SeriesControl& ctl = {});

/// Eigenvalue -l (l + d - 2) of the Laplace-Beltrami operator on S^{d-1}.
double angular_eigenvalue(const QuantumNumbers& q);

/// Number of linearly independent angular harmonics of degree l on S^{d-1}:
/// (2l + d - 2) (d - 3 + l)! / (l! (d - 2)!) for d >= 3; for the circle
/// (d = 2) 1 at l = 0 and 2 otherwise.
std::uint64_t degeneracy(const QuantumNumbers& q);

}  // namespace hyperlaplace::harmonics
