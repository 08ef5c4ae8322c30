#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/quadrature.hpp"

using namespace hyperlaplace::geometry;

namespace {

constexpr double kPi = std::numbers::pi;

HyperPoint random_point(int d, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> half(0.0, kPi);
  std::uniform_real_distribution<double> full(0.0, 2.0 * kPi);
  HyperPoint p{d, radius, half(rng), std::vector<double>(d - 1)};
  p.direction[0] = full(rng);
  for (int k = 1; k < d - 1; ++k) p.direction[k] = half(rng);
  return p;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("validation of hyperspherical points") {
  CHECK_NOTHROW((HyperPoint{3, 1.0, 0.5, {1.0, 2.0}}.validate()));
  CHECK_THROWS_AS((HyperPoint{1, 1.0, 0.5, {}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HyperPoint{2, -1.0, 0.5, {0.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HyperPoint{2, 1.0, 4.0, {0.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HyperPoint{3, 1.0, 0.5, {0.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HyperPoint{3, 1.0, 0.5, {7.0, 0.0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((HyperPoint{3, 1.0, 0.5, {0.0, -0.1}}.validate()), std::invalid_argument);
}

TEST_CASE("embedding of simple points") {
  const auto origin = embed({4, 2.5, 0.0, {1.0, 0.3, 2.0}});
  REQUIRE(origin.size() == 5);
  CHECK(origin[0] == 2.5);
  for (std::size_t i = 1; i < origin.size(); ++i) CHECK(std::abs(origin[i]) <= 1e-15);

  const auto equator = embed({2, 1.0, kPi / 2, {0.0}});
  CHECK(std::abs(equator[0]) <= 1e-15);
  CHECK(equator[1] == doctest::Approx(1.0));
  CHECK(std::abs(equator[2]) <= 1e-15);
}

TEST_CASE("embedded points have norm R") {
  std::mt19937_64 rng(11);
  for (int d = 2; d <= 6; ++d) {
    for (int i = 0; i < 1000; ++i) {
      const auto p = random_point(d, 3.7, rng);
      CHECK(std::abs(norm(embed(p)) - 3.7) / 3.7 <= 1e-12);
    }
  }
}

TEST_CASE("separation angle") {
  const std::vector<double> u = {1.0, 0.4, 2.0};
  CHECK(separation_angle(u, u, 4).gamma == doctest::Approx(0.0));

  const std::vector<double> a = {0.3}, b = {2.1};
  CHECK(std::cos(separation_angle(a, b, 2).gamma) == doctest::Approx(std::cos(0.3 - 2.1)).epsilon(1e-14));

  std::mt19937_64 rng(5);
  for (int d = 2; d <= 6; ++d) {
    for (int i = 0; i < 200; ++i) {
      const auto p = random_point(d, 1.0, rng);
      const auto q = random_point(d, 1.0, rng);
      const double gamma = separation_angle(p.direction, q.direction, d).gamma;
      const double cosine = std::clamp(dot(embed_direction(p.direction), embed_direction(q.direction)), -1.0, 1.0);
      CHECK(std::abs(gamma - std::acos(cosine)) <= 1e-7);
      CHECK(std::abs(std::cos(gamma) - cosine) <= 1e-12);
    }
  }
}

TEST_CASE("geodesic distance special configurations") {
  const double R = 2.0;
  const HyperPoint x{3, R, 0.8, {0.5, 1.2}};
  CHECK(geodesic_distance(x, x) == doctest::Approx(0.0));
  CHECK(geodesic_distance_polar(x, x) == doctest::Approx(0.0));

  // Antipode: theta' = pi - theta, direction reflected through the centre of S^{d-1}.
  const HyperPoint antipode{3, R, kPi - 0.8, {0.5 + kPi, kPi - 1.2}};
  CHECK(geodesic_distance(x, antipode) == doctest::Approx(kPi * R));
  CHECK(geodesic_distance_polar(x, antipode) == doctest::Approx(kPi * R));

  const HyperPoint e1{2, R, kPi / 2, {0.0}}, e2{2, R, kPi / 2, {kPi / 2}};
  CHECK(geodesic_distance(e1, e2) == doctest::Approx(kPi * R / 2));
  CHECK(geodesic_distance_polar(e1, e2) == doctest::Approx(kPi * R / 2));

  const HyperPoint s{2, 1.0, 0.5, {0.0}}, t{2, 1.0, kPi - 0.5, {kPi}};
  CHECK(geodesic_distance(s, t) == doctest::Approx(kPi));
}

TEST_CASE("geodesic distance: symmetry, range and polar form agree") {
  std::mt19937_64 rng(3);
  for (int d = 2; d <= 6; ++d) {
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_point(d, 1.3, rng);
      const auto b = random_point(d, 1.3, rng);
      const double ambient = geodesic_distance(a, b);
      CHECK(ambient == geodesic_distance(b, a));
      CHECK(ambient >= 0.0);
      CHECK(ambient <= kPi * 1.3);
      CHECK(std::abs(geodesic_distance_polar(a, b) - ambient) <= 1e-10);
    }
  }
}

TEST_CASE("volume weight") {
  CHECK(volume_weight({2, 1.0, 0.7, {1.0}}) == doctest::Approx(std::sin(0.7)));
  CHECK(volume_weight({3, 2.0, 0.7, {1.0, 0.4}}) ==
        doctest::Approx(8.0 * std::sin(0.7) * std::sin(0.7) * std::sin(0.4)));
  CHECK(volume_weight({4, 1.0, 0.0, {1.0, 0.4, 0.9}}) == 0.0);
  CHECK(hypersphere_volume(2, 1.0) == doctest::Approx(4.0 * kPi));
  CHECK(hypersphere_volume(3, 2.0) == doctest::Approx(2.0 * kPi * kPi * 8.0));
}

TEST_CASE("volume weight integrates to the hypersphere volume") {
  using hyperlaplace::oracle::gauss_legendre;
  const int n = 20;
  const auto half = gauss_legendre(n, 0.0, kPi);
  const auto full = gauss_legendre(n, 0.0, 2.0 * kPi);
  for (double R : {1.0, 2.0}) {
    double d2 = 0.0, d3 = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        d2 += half.weights[i] * full.weights[j] * volume_weight({2, R, half.nodes[i], {full.nodes[j]}});
        for (int k = 0; k < n; ++k) {
          d3 += half.weights[i] * full.weights[j] * half.weights[k] *
                volume_weight({3, R, half.nodes[i], {full.nodes[j], half.nodes[k]}});
        }
      }
    }
    CHECK(std::abs(d2 / hypersphere_volume(2, R) - 1.0) <= 1e-6);
    CHECK(std::abs(d3 / hypersphere_volume(3, R) - 1.0) <= 1e-6);
  }
}
