#include "hyperlaplace/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/harmonics.hpp"
#include "hyperlaplace/table.hpp"

namespace hyperlaplace::suites {

namespace {

constexpr double kPi = std::numbers::pi;

bool windowed(greenfn::Representation rep) {
  return rep == greenfn::Representation::Hyp2F1 || rep == greenfn::Representation::Hyp2F1Euler ||
         rep == greenfn::Representation::FerrersQ;
}

geometry::HyperPoint random_point(int d, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> half_turn(0.0, kPi);
  std::uniform_real_distribution<double> full_turn(0.0, 2.0 * kPi);
  geometry::HyperPoint p{d, radius, half_turn(rng), std::vector<double>(d - 1)};
  p.direction[0] = full_turn(rng);
  for (int k = 1; k < d - 1; ++k) p.direction[k] = half_turn(rng);
  return p;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "ode") return Suite::Ode;
  if (name == "delta") return Suite::Delta;
  if (name == "limit") return Suite::Limit;
  if (name == "xrep") return Suite::CrossRepresentation;
  if (name == "geometry") return Suite::Geometry;
  return std::nullopt;
}

std::vector<double> theta_grid(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("theta_grid: need at least 2 points");
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = lo + (hi - lo) * i / (count - 1);
  return grid;
}

Deviation cross_representation_deviation(int d, greenfn::Representation rep,
                                         const std::vector<double>& grid) {
  Deviation dev;
  for (double theta : grid) {
    if (windowed(rep) && !greenfn::in_series_window(theta)) continue;
    const double reference = greenfn::i_d_quadrature(d, theta, 1e-11).value;
    const double value = greenfn::radial_kernel(d, theta, rep).value;
    dev.max_relative = std::max(dev.max_relative, std::abs(value - reference) / std::abs(reference));
    ++dev.compared;
  }
  return dev;
}

std::vector<oracle::CheckReport> cross_representation_checks() {
  const auto grid = theta_grid(0.05, kPi - 0.05, 50);
  std::vector<oracle::CheckReport> out;
  for (int d = 2; d <= 10; ++d) {
    for (greenfn::Representation rep : greenfn::kAllRepresentations) {
      if (rep == greenfn::Representation::Quadrature) continue;
      const Deviation dev = cross_representation_deviation(d, rep, grid);
      std::ostringstream name;
      name << "xrep d=" << d << " " << greenfn::to_string(rep) << " vs quadrature";
      out.push_back(oracle::make_report(name.str(), dev.max_relative, 0.0, 1e-9, false,
                                        "max relative deviation over " + std::to_string(dev.compared) +
                                            " theta values"));
    }
  }
  return out;
}

std::vector<oracle::CheckReport> ode_checks() {
  std::vector<oracle::CheckReport> out;
  const double h = 1e-2;
  for (int d = 2; d <= 7; ++d) {
    for (int l = 0; l <= 2; ++l) {
      for (harmonics::RadialSolutionKind kind : harmonics::kAllKinds) {
        for (double theta : {0.5, 1.0, 2.0}) {
          const harmonics::QuantumNumbers q{d, l};
          const auto conv = harmonics::ode_convergence(q, kind, theta, h);
          std::ostringstream name;
          name << "ode d=" << d << " l=" << l << " " << harmonics::to_string(kind)
               << " theta=" << format_real(theta);
          std::ostringstream detail;
          detail << harmonics::to_string(conv.status);
          if (conv.status == harmonics::BranchStatus::Regular ||
              conv.status == harmonics::BranchStatus::Constant) {
            detail << "; |r(h)|=" << format_real(conv.residual_coarse)
                   << " |r(h/2)|=" << format_real(conv.residual_fine) << " h=" << format_real(h);
          }
          if (conv.status == harmonics::BranchStatus::Regular) {
            out.push_back(oracle::make_report(name.str(), conv.order, 2.0, 0.2, false, detail.str()));
          } else {
            // Skipped branches: no order to measure.
            oracle::CheckReport skipped{name.str(), 0.0, 0.0, 0.0, true, false,
                                        "skipped: " + detail.str()};
            out.push_back(std::move(skipped));
          }
        }
      }
    }
  }
  return out;
}

std::vector<oracle::CheckReport> delta_checks() {
  std::vector<oracle::CheckReport> out;
  for (int d : {2, 3}) {
    for (double radius : {1.0, 5.0}) out.push_back(oracle::check_delta_identity(d, radius, 400));
  }
  return out;
}

std::vector<oracle::CheckReport> limit_checks() {
  const std::vector<double> radii = {10.0, 100.0, 1000.0, 10000.0};
  std::vector<oracle::CheckReport> out;
  out.push_back(oracle::check_euclidean_limit(3, 1.0, radii, 1e-6));
  const auto diffs = oracle::euclidean_limit_differences(3, 1.0, radii);
  out.push_back(oracle::make_report("euclidean-limit d=3 loglog slope", oracle::loglog_slope(radii, diffs),
                                    -2.0, 0.2));
  out.push_back(oracle::check_euclidean_limit(2, 1.0, radii, 1.0));
  return out;
}

std::vector<oracle::CheckReport> geometry_checks() {
  std::vector<oracle::CheckReport> out;
  std::mt19937_64 rng(20111129);
  for (int d = 2; d <= 6; ++d) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_point(d, 1.5, rng);
      const auto b = random_point(d, 1.5, rng);
      worst = std::max(worst, std::abs(geometry::geodesic_distance_polar(a, b) -
                                       geometry::geodesic_distance(a, b)));
    }
    out.push_back(oracle::make_report("distance polar vs ambient d=" + std::to_string(d), worst, 0.0,
                                      1e-10, false, "max over 1000 random pairs, R=1.5"));
  }
  for (int d = 2; d <= 4; ++d) {
    const double radius = 2.0;
    const int n = 24;
    const auto theta_rule = oracle::gauss_legendre(n, 0.0, kPi);
    const auto phi_rule = oracle::gauss_legendre(n, 0.0, 2.0 * kPi);
    const auto alpha_rule = theta_rule;
    // Tensor-product sweep over (theta, phi, alpha_2, ..., alpha_{d-1}).
    std::vector<int> index(d, 0);
    double total = 0.0;
    geometry::HyperPoint p{d, radius, 0.0, std::vector<double>(d - 1)};
    while (true) {
      double w = theta_rule.weights[index[0]] * phi_rule.weights[index[1]];
      p.polar = theta_rule.nodes[index[0]];
      p.direction[0] = phi_rule.nodes[index[1]];
      for (int k = 2; k < d; ++k) {
        p.direction[k - 1] = alpha_rule.nodes[index[k]];
        w *= alpha_rule.weights[index[k]];
      }
      total += w * geometry::volume_weight(p);
      int axis = 0;
      while (axis < d && ++index[axis] == n) index[axis++] = 0;
      if (axis == d) break;
    }
    const double expected = geometry::hypersphere_volume(d, radius);
    out.push_back(oracle::make_report("volume d=" + std::to_string(d), total, expected, 1e-6, true,
                                      "Gauss-Legendre product rule, 24 nodes per axis, R=2"));
  }
  return out;
}

std::vector<oracle::CheckReport> run_suite(Suite suite) {
  switch (suite) {
    case Suite::Ode: return ode_checks();
    case Suite::Delta: return delta_checks();
    case Suite::Limit: return limit_checks();
    case Suite::CrossRepresentation: return cross_representation_checks();
    case Suite::Geometry: return geometry_checks();
  }
  throw std::invalid_argument("unknown suite");
}

}  // namespace hyperlaplace::suites
