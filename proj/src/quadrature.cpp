#include "hyperlaplace/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperlaplace/errors.hpp"

namespace hyperlaplace::oracle {

namespace {

// Kronrod 21-point abscissae; odd entries are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod_21(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[10] * fc;
  double magnitude = kWgk[10] * std::abs(fc);
  double gauss = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double fl = f(center - dx);
    const double fr = f(center + dx);
    kronrod += kWgk[j] * (fl + fr);
    magnitude += kWgk[j] * (std::abs(fl) + std::abs(fr));
    if (j % 2 == 1) gauss += kWg[j / 2] * (fl + fr);
  }
  // Never claim more than rounding allows (QUADPACK's 50 eps floor).
  const double rounding = 50.0 * std::numeric_limits<double>::epsilon() * magnitude * std::abs(half);
  return {a, b, kronrod * half, std::max(std::abs((kronrod - gauss) * half), rounding)};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(absolute_tolerance > 0.0) || !(relative_tolerance > 0.0))
    throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
  if (max_subdivisions < 1) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");

  std::priority_queue<Segment> heap;
  heap.push(gauss_kronrod_21(f, a, b));
  double total = heap.top().value;
  double error = heap.top().error;

  auto converged = [&] {
    return error <= std::max(spec.absolute_tolerance, spec.relative_tolerance * std::abs(total));
  };

  int subdivisions = 0;
  while (!converged()) {
    if (subdivisions >= spec.max_subdivisions) {
      throw QuadratureError("integrate: tolerance not met after " + std::to_string(subdivisions) +
                                " subdivisions (estimate " + std::to_string(error) + ")",
                            total, error);
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("integrate: interval exhausted floating-point resolution", total, error);
    }
    const Segment left = gauss_kronrod_21(f, worst.a, mid);
    const Segment right = gauss_kronrod_21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum from the segments to shed the drift of incremental updates.
  double value = 0.0;
  double err = 0.0;
  const int count = static_cast<int>(heap.size());
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {value, err, count};
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  // P_n(x) and P_n'(x) by the three-term recurrence.
  auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };

  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

GaussLegendreRule gauss_legendre(int n, double a, double b) {
  GaussLegendreRule rule = gauss_legendre(n);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = c + h * rule.nodes[i];
    rule.weights[i] *= h;
  }
  return rule;
}

}  // namespace hyperlaplace::oracle
