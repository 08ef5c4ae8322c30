#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hyperlaplace/table.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(HYPERLAPLACE_CLI) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("eval prints every route and their spread") {
  const auto r = run("eval --d 3 --radius 1 --theta 0.7853981633974483 --method all");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string name, value;
  int routes = 0;
  while (lines >> name >> value) {
    if (name == "max_pairwise_relative_deviation") {
      CHECK(hyperlaplace::parse_real(value) <= 1e-9);
      continue;
    }
    ++routes;
    CHECK(hyperlaplace::parse_real(value) == doctest::Approx(0.07957747154594767).epsilon(1e-12));
  }
  CHECK(routes == 6);
}

TEST_CASE("eval single method") {
  const auto r = run("eval --d 2 --radius 1 --theta 1.5707963267948966");
  CHECK(r.status == 0);
  CHECK(std::abs(hyperlaplace::parse_real(r.out.substr(0, r.out.size() - 1))) <= 1e-15);
  CHECK(run("eval --d 3 --theta 0.5 --method recurrence").status == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("eval --d 3 --theta 4.0").status == 2);
  CHECK(run("eval --d 3 --theta 3.141592653589793").status == 2);
  CHECK(run("eval --d 1 --theta 1.0").status == 2);
  CHECK(run("eval --d three --theta 1.0").status == 2);
  CHECK(run("eval --d 3 --theta 1.0 --method nope").status == 2);
  CHECK(run("eval --d 3 --theta 1.0 --radius -1").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
  CHECK(run("eval --d 3 --theta 0.05 --method hyp2f1").status == 3);
  CHECK(run("eval --d 3 --theta 1.0 --method quadrature --tol 1e-300").status == 3);
  CHECK(run("table --d 3 --theta-min 2 --theta-max 1 --n 3").status == 2);
  CHECK(run("table --d 3 --theta-min 0.5 --theta-max 1 --n 1").status == 2);
  CHECK(run("table --d 3 --theta-min 0.5 --theta-max 1 --n 3 --out /nonexistent/dir/t.csv").status == 4);
  CHECK(run("check nonsense").status == 2);
  CHECK(run("distance --d 3 --a 0.1,0.2 --b 0.1,0.2,0.3").status == 2);
  CHECK(run("distance --d 2 --a 0.1,x --b 0.1,0.2").status == 2);
  CHECK(run("distance --d 2 --a 0.1,7 --b 0.1,0.2").status == 2);
}

TEST_CASE("table output") {
  const auto r = run("table --d 4 --n 3 --theta-min 1 --theta-max 2 --methods finite_sum");
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 4);
  CHECK(r.out.rfind("d,R,theta,method,value,est_error\n", 0) == 0);

  const auto all = run("table --d 5 --n 4 --theta-min 0.05 --theta-max 3.0915926535897933 --methods all");
  CHECK(all.status == 0);
  std::istringstream in(all.out);
  const auto rows = hyperlaplace::read_table(in);
  REQUIRE(rows.size() == 24);
  // theta-major, method-minor
  CHECK(rows[0].method == "quadrature");
  CHECK(rows[5].method == "ferrers");
  CHECK(rows[6].theta > rows[0].theta);
  for (std::size_t base = 0; base < rows.size(); base += 6) {
    const double reference = rows[base].value;
    for (std::size_t k = 1; k < 6; ++k) {
      const auto& row = rows[base + k];
      if (std::isnan(row.value)) continue;
      CHECK(std::abs(row.value - reference) <= 1e-9 * std::abs(reference));
    }
  }
  CHECK(std::isnan(rows[3].value));  // hyp2f1 at theta = 0.05 lies outside the series window
}

TEST_CASE("table files round-trip byte for byte and are deterministic") {
  const auto dir = std::filesystem::temp_directory_path() / "hyperlaplace_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv";
  const std::string args = "table --d 6 --radius 2.5 --n 25 --theta-min 0.1 --theta-max 3 --methods all --out ";
  REQUIRE(run(args + a.string()).status == 0);
  REQUIRE(run(args + b.string()).status == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));

  std::istringstream in(text);
  std::ostringstream again;
  hyperlaplace::write_table(again, hyperlaplace::read_table(in));
  CHECK(again.str() == text);
  std::filesystem::remove_all(dir);
}

TEST_CASE("check suites") {
  const auto delta = run("check delta");
  CHECK(delta.status == 0);
  CHECK(count_lines(delta.out) == 4);
  CHECK(delta.out.find("delta d=2") != std::string::npos);
  CHECK(delta.out.find("delta d=3") != std::string::npos);
  CHECK(run("check xrep").status == 0);
  CHECK(run("check geometry").status == 0);
  CHECK(run("check ode").status == 0);
  const auto limit = run("check limit");
  CHECK(limit.out.find("PASS euclidean-limit d=3") != std::string::npos);
}

TEST_CASE("distance") {
  auto r = run("distance --d 3 --radius 2 --a 0.7,1.0,0.4 --b 0.7,1.0,0.4");
  CHECK(r.status == 0);
  CHECK(r.out == "distance 0\ngamma 0\n");
  r = run("distance --d 2 --a 0.5,0 --b 2.6415926535897931,3.141592653589793");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("distance 3.14159265358979", 0) == 0);
}
