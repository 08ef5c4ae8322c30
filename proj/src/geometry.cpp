#include "hyperlaplace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hyperlaplace/specfun.hpp"

namespace hyperlaplace::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

void validate_direction(std::span<const double> direction, int dimension) {
  if (dimension < 2) throw std::invalid_argument("dimension must be >= 2");
  if (direction.size() != static_cast<std::size_t>(dimension - 1))
    throw std::invalid_argument("direction needs " + std::to_string(dimension - 1) +
                                " angles for d = " + std::to_string(dimension));
  const double phi = direction[0];
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) throw std::invalid_argument("phi must lie in [0, 2 pi)");
  for (std::size_t k = 1; k < direction.size(); ++k) {
    if (!(direction[k] >= 0.0 && direction[k] <= kPi))
      throw std::invalid_argument("direction angle alpha_" + std::to_string(k + 1) +
                                  " must lie in [0, pi]");
  }
}

}  // namespace

void HyperPoint::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("radius must be > 0");
  if (!(polar >= 0.0 && polar <= kPi)) throw std::invalid_argument("polar angle must lie in [0, pi]");
  validate_direction(direction, dimension);
}

std::vector<double> embed_direction(std::span<const double> direction) {
  const std::size_t n = direction.size();  // d - 1
  std::vector<double> out(n + 1);
  double s = 1.0;
  // alpha_{d-1}, ..., alpha_2 live at direction[n-1], ..., direction[1].
  std::size_t slot = 0;
  for (std::size_t k = n; k-- > 1;) {
    out[slot++] = s * std::cos(direction[k]);
    s *= std::sin(direction[k]);
  }
  out[slot++] = s * std::cos(direction[0]);
  out[slot] = s * std::sin(direction[0]);
  return out;
}

std::vector<double> embed(const HyperPoint& p) {
  p.validate();
  const std::vector<double> unit = embed_direction(p.direction);
  std::vector<double> x(unit.size() + 1);
  x[0] = p.radius * std::cos(p.polar);
  const double rs = p.radius * std::sin(p.polar);
  for (std::size_t i = 0; i < unit.size(); ++i) x[i + 1] = rs * unit[i];
  return x;
}

SeparationAngle separation_angle(std::span<const double> u, std::span<const double> v,
                                 int dimension) {
  validate_direction(u, dimension);
  validate_direction(v, dimension);
  const int m = dimension - 2;  // number of polar-type angles on S^{d-1}
  // i-th polar angle of the product formula (1-based) is alpha_{d-i},
  // stored at direction[d - i - 1].
  auto angle = [dimension](std::span<const double> dir, int i) { return dir[dimension - i - 1]; };

  double sum = 0.0;
  double sin_product = 1.0;
  for (int i = 1; i <= m; ++i) {
    sum += std::cos(angle(u, i)) * std::cos(angle(v, i)) * sin_product;
    sin_product *= std::sin(angle(u, i)) * std::sin(angle(v, i));
  }
  const double cos_gamma = std::cos(u[0] - v[0]) * sin_product + sum;
  return {std::acos(clamp_unit(cos_gamma))};
}

double geodesic_distance(const HyperPoint& a, const HyperPoint& b) {
  if (a.dimension != b.dimension || a.radius != b.radius)
    throw std::invalid_argument("geodesic_distance: points live on different hyperspheres");
  const auto xa = embed(a);
  const auto xb = embed(b);
  double dot = 0.0;
  for (std::size_t i = 0; i < xa.size(); ++i) dot += xa[i] * xb[i];
  return a.radius * std::acos(clamp_unit(dot / (a.radius * a.radius)));
}

double geodesic_distance_polar(const HyperPoint& a, const HyperPoint& b) {
  if (a.dimension != b.dimension || a.radius != b.radius)
    throw std::invalid_argument("geodesic_distance_polar: points live on different hyperspheres");
  a.validate();
  b.validate();
  const double gamma = separation_angle(a.direction, b.direction, a.dimension).gamma;
  const double c = std::cos(a.polar) * std::cos(b.polar) +
                   std::sin(a.polar) * std::sin(b.polar) * std::cos(gamma);
  return a.radius * std::acos(clamp_unit(c));
}

double volume_weight(const HyperPoint& p) {
  p.validate();
  const int d = p.dimension;
  double w = std::pow(p.radius, d) * std::pow(std::sin(p.polar), d - 1);
  for (int k = 2; k <= d - 1; ++k) w *= std::pow(std::sin(p.direction[k - 1]), k - 1);
  return w;
}

double hypersphere_volume(int dimension, double radius) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  const double half = 0.5 * (dimension + 1);
  return 2.0 * std::pow(kPi, half) * std::pow(radius, dimension) / specfun::gamma_real(half);
}

}  // namespace hyperlaplace::geometry
