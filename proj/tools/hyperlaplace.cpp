// Command-line front end: eval, table, check, distance.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlaplace/errors.hpp"
#include "hyperlaplace/geometry.hpp"
#include "hyperlaplace/greenfn.hpp"
#include "hyperlaplace/oracle.hpp"
#include "hyperlaplace/suites.hpp"
#include "hyperlaplace/table.hpp"

namespace {

namespace hl = hyperlaplace;
using hl::greenfn::Representation;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kBadArguments = 2, kNoConvergence = 3, kIoError = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int d = 0;
  double radius = 1.0;
  double theta = 0.0;
  double theta_min = 0.0;
  double theta_max = 0.0;
  int n = 0;
  std::string methods = "auto";
  std::string out;
  double tol = 1e-11;
  std::string suite;
  std::string point_a;
  std::string point_b;
};

void require_dimension(int d) {
  if (d < 2) throw std::invalid_argument("--d must be an integer >= 2");
}

void require_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("--radius must be > 0");
}

void require_theta(double theta, const char* flag) {
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw std::invalid_argument(std::string(flag) + " must lie strictly inside (0, pi)");
}

std::vector<Representation> parse_methods(const std::string& text) {
  if (text == "all") return {std::begin(hl::greenfn::kAllRepresentations), std::end(hl::greenfn::kAllRepresentations)};
  std::vector<Representation> reps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto rep = hl::greenfn::parse_representation(item);
    if (!rep) throw std::invalid_argument("unknown method '" + item + "'");
    reps.push_back(*rep);
  }
  if (reps.empty()) throw std::invalid_argument("no method given");
  return reps;
}

std::vector<double> parse_angles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(hl::parse_real(item));
  return out;
}

hl::geometry::HyperPoint make_point(int d, double radius, const std::string& text, const char* flag) {
  const auto angles = parse_angles(text);
  if (static_cast<int>(angles.size()) != d)
    throw std::invalid_argument(std::string(flag) + " needs " + std::to_string(d) +
                                " comma-separated angles: theta,phi,alpha_2..alpha_{d-1}");
  hl::geometry::HyperPoint p{d, radius, angles[0], std::vector<double>(angles.begin() + 1, angles.end())};
  p.validate();
  return p;
}

// Evaluates one route, or nothing when a series route is asked for outside
// its window.
std::optional<hl::greenfn::KernelValue> try_evaluate(const Options& o, double theta, Representation rep) {
  try {
    return hl::greenfn::fundamental_solution_value(o.d, o.radius, theta, rep, o.tol);
  } catch (const hl::SeriesWindowError&) {
    return std::nullopt;
  }
}

int run_eval(const Options& o) {
  require_dimension(o.d);
  require_radius(o.radius);
  require_theta(o.theta, "--theta");
  const auto reps = parse_methods(o.methods);
  if (reps.size() == 1) {
    const auto v = hl::greenfn::fundamental_solution_value(o.d, o.radius, o.theta, reps.front(), o.tol);
    std::cout << hl::format_real(v.value) << '\n';
    return kOk;
  }
  std::vector<double> values;
  for (Representation rep : reps) {
    const auto v = try_evaluate(o, o.theta, rep);
    std::cout << hl::greenfn::to_string(rep) << ' ';
    if (!v) {
      std::cout << "skipped (outside series window)\n";
      continue;
    }
    std::cout << hl::format_real(v->value) << '\n';
    values.push_back(v->value);
  }
  double deviation = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const double scale = std::max(std::abs(values[i]), std::abs(values[j]));
      if (scale > 0.0) deviation = std::max(deviation, std::abs(values[i] - values[j]) / scale);
    }
  }
  std::cout << "max_pairwise_relative_deviation " << hl::format_real(deviation) << '\n';
  return kOk;
}

int run_table(const Options& o) {
  require_dimension(o.d);
  require_radius(o.radius);
  require_theta(o.theta_min, "--theta-min");
  require_theta(o.theta_max, "--theta-max");
  if (!(o.theta_min < o.theta_max)) throw std::invalid_argument("--theta-min must be below --theta-max");
  if (o.n < 2) throw std::invalid_argument("--n must be >= 2");
  const auto reps = parse_methods(o.methods);

  const auto grid = hl::suites::theta_grid(o.theta_min, o.theta_max, o.n);
  std::vector<hl::TableRow> rows;
  double worst = 0.0;
  for (double theta : grid) {
    std::optional<double> reference;
    std::vector<double> values;
    for (Representation rep : reps) {
      hl::TableRow row{o.d, o.radius, theta, std::string(hl::greenfn::to_string(rep)), std::nan(""), std::nan("")};
      if (const auto v = try_evaluate(o, theta, rep)) {
        row.value = v->value;
        row.est_error = v->error_estimate;
        if (rep == Representation::Quadrature) reference = v->value;
        values.push_back(v->value);
      }
      rows.push_back(std::move(row));
    }
    if (reference && *reference != 0.0) {
      for (double v : values) worst = std::max(worst, std::abs(v - *reference) / std::abs(*reference));
    }
  }

  if (o.out.empty()) {
    hl::write_table(std::cout, rows);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw IoError("cannot open '" + o.out + "' for writing");
    hl::write_table(file, rows);
    file.close();
    if (!file) throw IoError("failed writing '" + o.out + "'");
  }
  if (std::find(reps.begin(), reps.end(), Representation::Quadrature) != reps.end() && reps.size() > 1)
    std::cerr << "max relative deviation from quadrature: " << hl::format_real(worst) << '\n';
  return kOk;
}

int run_check(const Options& o) {
  const auto suite = hl::suites::parse_suite(o.suite);
  if (!suite) throw std::invalid_argument("unknown suite '" + o.suite + "'");
  bool all_passed = true;
  for (const auto& report : hl::suites::run_suite(*suite)) {
    std::cout << hl::oracle::format_report(report) << '\n';
    all_passed = all_passed && report.passed;
  }
  return all_passed ? kOk : kCheckFailed;
}

int run_distance(const Options& o) {
  require_dimension(o.d);
  require_radius(o.radius);
  const auto a = make_point(o.d, o.radius, o.point_a, "--a");
  const auto b = make_point(o.d, o.radius, o.point_b, "--b");
  const auto gamma = hl::geometry::separation_angle(a.direction, b.direction, o.d);
  std::cout << "distance " << hl::format_real(hl::geometry::geodesic_distance_polar(a, b)) << '\n'
            << "gamma " << hl::format_real(gamma.gamma) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental solution of Laplace's equation on the R-radius hypersphere"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate the fundamental solution at one angle");
  eval->add_option("--d", o.d, "Dimension of the hypersphere")->required();
  eval->add_option("--radius", o.radius, "Sphere radius")->capture_default_str();
  eval->add_option("--theta", o.theta, "Geodesic angle in radians, inside (0, pi)")->required();
  eval->add_option("--method", o.methods, "Representation name, comma list, or all")->capture_default_str();
  eval->add_option("--tol", o.tol, "Quadrature relative tolerance")->capture_default_str();

  auto* table = app.add_subcommand("table", "Tabulate the fundamental solution as CSV");
  table->add_option("--d", o.d, "Dimension of the hypersphere")->required();
  table->add_option("--radius", o.radius, "Sphere radius")->capture_default_str();
  table->add_option("--theta-min", o.theta_min, "First angle")->required();
  table->add_option("--theta-max", o.theta_max, "Last angle")->required();
  table->add_option("--n", o.n, "Number of angles")->required();
  table->add_option("--methods", o.methods, "Representation names (comma list) or all")->capture_default_str();
  table->add_option("--out", o.out, "Output path (default stdout)");
  table->add_option("--tol", o.tol, "Quadrature relative tolerance")->capture_default_str();

  auto* check = app.add_subcommand("check", "Run a verification suite");
  check->add_option("suite", o.suite, "ode | delta | limit | xrep | geometry")->required();

  auto* distance = app.add_subcommand("distance", "Geodesic distance between two points");
  distance->add_option("--d", o.d, "Dimension of the hypersphere")->required();
  distance->add_option("--radius", o.radius, "Sphere radius")->capture_default_str();
  distance->add_option("--a", o.point_a, "theta,phi,alpha_2,...,alpha_{d-1}")->required();
  distance->add_option("--b", o.point_b, "theta,phi,alpha_2,...,alpha_{d-1}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArguments;
  }

  try {
    if (eval->parsed()) return run_eval(o);
    if (table->parsed()) return run_table(o);
    if (check->parsed()) return run_check(o);
    if (distance->parsed()) return run_distance(o);
  } catch (const hl::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::logic_error& e) {  // invalid_argument, domain_error
    std::cerr << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  return kBadArguments;
}
