#include "hyperlaplace/oracle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/greenfn.hpp"
#include "hyperlaplace/harmonics.hpp"
#include "hyperlaplace/table.hpp"

namespace hyperlaplace::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

CheckReport make_report(std::string name, double measured, double expected, double tolerance,
                        bool relative, std::string detail) {
  double diff = std::abs(measured - expected);
  if (relative) diff /= std::abs(expected);
  return {std::move(name), measured, expected, tolerance, diff <= tolerance, relative, std::move(detail)};
}

std::string format_report(const CheckReport& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.name << " measured=" << format_real(r.measured)
      << " expected=" << format_real(r.expected) << " tol=" << format_real(r.tolerance)
      << (r.relative ? " (relative)" : "");
  if (!r.detail.empty()) out << " [" << r.detail << "]";
  return out.str();
}

double radial_laplacian_residual(int d, double radius, double theta, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("h must be > 0");
  if (!(theta - h > 0.0 && theta + h < kPi)) throw std::domain_error("stencil leaves (0, pi)");
  auto f = [&](double t) { return greenfn::fundamental_solution(d, radius, t); };
  const double fm = f(theta - h);
  const double f0 = f(theta);
  const double fp = f(theta + h);
  const double second = (fp - 2.0 * f0 + fm) / (h * h);
  const double first = (fp - fm) / (2.0 * h);
  return (second + (d - 1) * std::cos(theta) / std::sin(theta) * first) / (radius * radius);
}

CheckReport check_laplace_annihilation(int d, double radius, double theta, double h, double tolerance) {
  std::ostringstream name;
  name << "laplace d=" << d << " R=" << format_real(radius) << " theta=" << format_real(theta);
  return make_report(name.str(), radial_laplacian_residual(d, radius, theta, h), 0.0, tolerance, false,
                     "h=" + format_real(h));
}

double laplace_convergence_order(int d, double radius, double theta, double h) {
  const double coarse = std::abs(radial_laplacian_residual(d, radius, theta, h));
  const double fine = std::abs(radial_laplacian_residual(d, radius, theta, 0.5 * h));
  return std::log2(coarse / fine);
}

CheckReport check_delta_identity(int d, double radius, int nodes, int angular_nodes) {
  if (d != 2 && d != 3) throw std::invalid_argument("check_delta_identity supports d = 2 or 3");
  if (nodes < 50) throw std::invalid_argument("check_delta_identity needs at least 50 nodes");
  if (angular_nodes < 1) throw std::invalid_argument("angular_nodes must be >= 1");

  // -Delta cos(theta') = d cos(theta') / R^2: cos theta is a degree-1 harmonic on S^d.
  const double eigen = -harmonics::angular_eigenvalue({d + 1, 1});
  const auto polar = gauss_legendre(nodes, 0.0, kPi);
  const auto phi = gauss_legendre(angular_nodes, 0.0, 2.0 * kPi);
  const auto alpha = gauss_legendre(angular_nodes, 0.0, kPi);

  geometry::HyperPoint origin{d, radius, 0.0, std::vector<double>(d - 1, 0.0)};
  geometry::HyperPoint x{d, radius, 0.0, std::vector<double>(d - 1, 0.0)};

  double total = 0.0;
  const int alpha_count = d == 3 ? angular_nodes : 1;
  for (int i = 0; i < nodes; ++i) {
    x.polar = polar.nodes[i];
    for (int j = 0; j < angular_nodes; ++j) {
      x.direction[0] = phi.nodes[j];
      for (int k = 0; k < alpha_count; ++k) {
        double w = polar.weights[i] * phi.weights[j];
        if (d == 3) {
          x.direction[1] = alpha.nodes[k];
          w *= alpha.weights[k];
        }
        const double theta = geometry::geodesic_distance(origin, x) / radius;
        const double minus_laplacian = eigen * std::cos(x.polar) / (radius * radius);
        total += w * minus_laplacian * greenfn::fundamental_solution(d, radius, theta) *
                 geometry::volume_weight(x);
      }
    }
  }

  const double at_point = 1.0;      // phi(x)
  const double with_antipode = 2.0;  // phi(x) - phi(antipode)
  const bool near_antipodal = std::abs(total - with_antipode) < std::abs(total - at_point);
  std::ostringstream detail;
  detail << "nodes=" << nodes << " angular_nodes=" << angular_nodes << "; matches "
         << (near_antipodal ? "phi(x)-phi(antipode)=2" : "phi(x)=1")
         << "; |m-1|=" << format_real(std::abs(total - at_point))
         << " |m-2|=" << format_real(std::abs(total - with_antipode));
  std::ostringstream name;
  name << "delta d=" << d << " R=" << format_real(radius);
  return make_report(name.str(), total, with_antipode, d == 2 ? 1e-6 : 1e-5, false, detail.str());
}

std::vector<double> euclidean_limit_differences(int d, double r, std::span<const double> radii) {
  if (!(r > 0.0)) throw std::invalid_argument("r must be > 0");
  const double euclid = greenfn::euclidean_fundamental(d, r);
  std::vector<double> out;
  out.reserve(radii.size());
  for (double radius : radii) {
    if (!(radius > r)) throw std::invalid_argument("each radius must exceed r");
    const double sphere = greenfn::fundamental_solution(d, radius, r / radius);
    const double diff = std::abs(sphere - euclid);
    out.push_back(d == 2 ? diff : diff / std::abs(euclid));
  }
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 pairs");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckReport check_euclidean_limit(int d, double r, std::span<const double> radii, double tolerance) {
  const auto diffs = euclidean_limit_differences(d, r, radii);
  bool monotone = true;
  for (std::size_t i = 1; i < diffs.size(); ++i) monotone = monotone && diffs[i] < diffs[i - 1];

  std::ostringstream detail;
  detail << (d == 2 ? "absolute" : "relative") << " differences:";
  for (std::size_t i = 0; i < diffs.size(); ++i)
    detail << " R=" << format_real(radii[i]) << ":" << format_real(diffs[i]);
  if (diffs.size() >= 2) detail << "; loglog slope=" << format_real(loglog_slope(radii, diffs));
  detail << "; " << (monotone ? "monotone decrease" : "NOT monotone");

  std::ostringstream name;
  name << "euclidean-limit d=" << d << " r=" << format_real(r);
  CheckReport report = make_report(name.str(), diffs.empty() ? 0.0 : diffs.back(), 0.0, tolerance,
                                   false, detail.str());
  report.passed = report.passed && monotone;
  return report;
}

}  // namespace hyperlaplace::oracle
