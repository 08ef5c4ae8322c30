#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperlaplace/greenfn.hpp"
#include "hyperlaplace/oracle.hpp"

namespace hyperlaplace::suites {

/// Named verification suites behind `hyperlaplace check <suite>`.
enum class Suite { Ode, Delta, Limit, CrossRepresentation, Geometry };

std::optional<Suite> parse_suite(std::string_view name);

/// Runs the suite and returns one report per check, in a fixed order.
std::vector<oracle::CheckReport> run_suite(Suite suite);

/// Theta grid used by the cross-representation checks: `count` points
/// uniformly spaced over [lo, hi] inclusive.
std::vector<double> theta_grid(double lo, double hi, int count);

/// Max relative deviation from quadrature (tolerance 1e-11) of `rep` over
/// the grid, restricted to the series window for the hypergeometric and
/// Ferrers routes. Also returns how many grid points were compared.
struct Deviation {
  double max_relative = 0.0;
  int compared = 0;
};
Deviation cross_representation_deviation(int d, greenfn::Representation rep,
                                         const std::vector<double>& grid);

std::vector<oracle::CheckReport> cross_representation_checks();
std::vector<oracle::CheckReport> ode_checks();
std::vector<oracle::CheckReport> delta_checks();
std::vector<oracle::CheckReport> limit_checks();
std::vector<oracle::CheckReport> geometry_checks();

}  // namespace hyperlaplace::suites
