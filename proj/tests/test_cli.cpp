#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bgal/cli.hpp"
#include "bgal/presets.hpp"
#include "bgal/problem_file.hpp"

namespace {

const std::string kProblems = BGAL_PROBLEMS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bgal::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bgal_test_" + name);
}

}  // namespace

TEST_CASE("table output for the third example") {
  const Run r = run({"solve", "--preset", "example3", "--degree", "5"});
  REQUIRE(r.code == 0);
  bool found = false;
  for (const auto& line : lines(r.out)) {
    if (line.rfind(" 0.100", 0) != 0) continue;
    found = true;
    std::istringstream in(line);
    double x, pe, pa, perr;
    in >> x >> pe >> pa >> perr;
    CHECK(pe == doctest::Approx(0.9946538262680829).epsilon(1e-8));
    CHECK(perr < 1e-4);
  }
  CHECK(found);
}

TEST_CASE("CSV output has nine rows that parse back") {
  const Run r = run({"solve", kProblems + "/example2.prob", "--degree", "4", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "x,p_exact,p_approx,p_abs_err,q_exact,q_approx,q_abs_err");
  for (int k = 1; k <= 9; ++k) {
    const auto cells = split(rows[k]);
    REQUIRE(cells.size() == 7);
    const double x = std::stod(cells[0]);
    CHECK(x == doctest::Approx(0.1 * k).epsilon(1e-15));
    CHECK(std::stod(cells[1]) == x * x * x * x);
    const double pa = std::stod(cells[2]);
    CHECK(std::stod(cells[3]) == std::abs(pa - std::stod(cells[1])));
  }
}

TEST_CASE("CSV leaves error columns empty without exact solutions") {
  auto file = bgal::preset("example1");
  file.exact = {};
  const auto path = temp_path("noexact.prob");
  std::ofstream(path) << bgal::write_problem(file);
  const Run r = run({"solve", path.string(), "--degree", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto cells = split(lines(r.out)[1]);
  REQUIRE(cells.size() == 7);
  CHECK(cells[1].empty());
  CHECK_FALSE(cells[2].empty());
  CHECK(cells[3].empty());
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"solve", "--preset", "example1", "--degree", "4", "--sweep", "3..6"}).code == 2);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"solve", kProblems + "/example1.prob", "--preset", "example1"}).code == 2);
  CHECK(run({"solve", kProblems + "/missing.prob"}).code == 2);
  CHECK(run({"solve", "--preset", "example9"}).code == 2);
  CHECK(run({"solve", "--preset", "example1", "--format", "xml"}).code == 2);
  CHECK(run({"solve", "--preset", "example1", "--sweep", "3-6"}).code == 2);
  CHECK(run({"solve", "--preset", "example1", "--degree", "31"}).code == 2);
  CHECK(run({"solve", "--preset", "example1", "--tol-picard", "-1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run bad_out = run({"solve", "--preset", "example1", "--out", "/nonexistent/dir/out.txt"});
  CHECK(bad_out.code == 2);
  CHECK(bad_out.err.find("out.txt") != std::string::npos);
}

TEST_CASE("solver failures exit with 1") {
  CHECK(run({"solve", "--preset", "example1", "--degree", "3", "--max-iters", "2"}).code == 1);
  // degree 3 and 4 only: tolerance cannot be met
  CHECK(run({"solve", "--preset", "example3", "--sweep", "3..4"}).code == 1);
}

TEST_CASE("replication mode") {
  const Run r = run({"solve", "--preset", "example1", "--degree", "4", "--fixed-iters", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("4 iterations (fixed)") != std::string::npos);
}

TEST_CASE("degree sweep") {
  const Run r = run({"solve", "--preset", "example2", "--sweep", "3..6", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "degree,iterations,converged,distance,p_max_err,q_max_err");
  CHECK(split(rows[1])[0] == "3");
  CHECK(split(rows[1])[3].empty());
  CHECK(split(rows[4])[0] == "6");

  const Run t = run({"solve", "--preset", "example3", "--sweep", "5..12"});
  CHECK(t.code == 0);
  CHECK(t.out.find("degree tolerance met") != std::string::npos);
}

TEST_CASE("reduce writes a coupled problem file") {
  const auto out = temp_path("reduced.prob");
  const Run r = run({"reduce", kProblems + "/sixth_order_example3.prob", "--out", out.string()});
  REQUIRE(r.code == 0);
  const auto reduced = bgal::load_problem(out);
  CHECK(reduced.spec.eq_p.coeffs[5].evaluate_at(0.0) == -1.0);
  CHECK(reduced.spec.eq_q.coeffs[5].evaluate_at(0.0) == -1.0);
  std::filesystem::remove(out);

  const Run s = run({"reduce", kProblems + "/sixth_order_example4.prob"});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("[equation.q]") != std::string::npos);
  CHECK(run({"reduce", kProblems + "/example1.prob"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"solve", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--sweep") != std::string::npos);
}
