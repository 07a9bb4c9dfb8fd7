#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "scarpi/run_config.hpp"

using namespace scarpi::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config file parsing and flag override") {
  const std::string path = write_temp(
      "scarpi_cfg_basic.txt",
      "a1 = 0.6\na2 = 0.8\nc = 2.0\n# full-line comment\npoints = 5 # tail\n");
  const auto pairs = parse_config_file(path);
  REQUIRE(pairs.size() == 4);
  RunConfig cfg;
  cfg.command = Command::Transition;
  for (const auto& [k, v] : pairs) apply_key(cfg, k, v);
  CHECK(cfg.a1 == 0.6);
  CHECK(cfg.a2 == 0.8);
  CHECK(cfg.c == 2.0);
  CHECK(cfg.points == 5);
  // later values (the flag layer) override earlier ones
  apply_key(cfg, "c", "3.0");
  CHECK(cfg.c == 3.0);
  std::remove(path.c_str());
}

TEST_CASE("unknown keys and type mismatches") {
  RunConfig cfg;
  CHECK_THROWS_WITH_AS(apply_key(cfg, "bogus", "1"),
                       doctest::Contains("valid keys"), UsageError);
  CHECK_THROWS_WITH_AS(apply_key(cfg, "a1", "zero point six"),
                       doctest::Contains("a1"), UsageError);
  CHECK_THROWS_WITH_AS(apply_key(cfg, "points", "2.5"),
                       doctest::Contains("points"), UsageError);
  CHECK_THROWS_AS(parse_config_file("/tmp/scarpi_no_such_file.cfg"),
                  UsageError);
  const std::string bad = write_temp("scarpi_cfg_bad.txt", "just words\n");
  CHECK_THROWS_AS(parse_config_file(bad), UsageError);
  std::remove(bad.c_str());
}

TEST_CASE("validation catches inconsistent grids and missing keys") {
  RunConfig cfg;
  cfg.command = Command::Kernel;
  cfg.transition = "exp";

  RunConfig log0 = cfg;
  log0.command = Command::Transition;
  log0.spacing = "log";
  log0.tmin = 0.0;
  CHECK_THROWS_WITH_AS(validate(log0), doctest::Contains("log"), UsageError);

  RunConfig few = cfg;
  few.points = 1;
  CHECK_THROWS_AS(validate(few), UsageError);

  RunConfig swapped = cfg;
  swapped.tmin = 2.0;
  swapped.tmax = 1.0;
  CHECK_THROWS_AS(validate(swapped), UsageError);

  RunConfig missing = cfg;
  missing.transition.clear();
  CHECK_THROWS_WITH_AS(validate(missing), doctest::Contains("transition"),
                       UsageError);

  RunConfig which = cfg;
  which.which = "both";
  CHECK_THROWS_AS(validate(which), UsageError);

  RunConfig ok = cfg;
  ok.tmin = 0.01;
  CHECK_NOTHROW(validate(ok));
}

TEST_CASE("grid construction") {
  RunConfig cfg;
  cfg.tmin = 1.0;
  cfg.tmax = 3.0;
  cfg.points = 5;
  cfg.spacing = "linear";
  const auto lin = make_grid(cfg);
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == 1.0);
  CHECK(lin.back() == 3.0);
  CHECK(lin[2] == 2.0);

  cfg.spacing = "log";
  cfg.tmin = 0.01;
  cfg.tmax = 100.0;
  cfg.points = 5;
  const auto lg = make_grid(cfg);
  CHECK(std::abs(lg[1] / lg[0] - lg[2] / lg[1]) <= 1e-12 * (lg[2] / lg[1]));
}

TEST_CASE("value formatting round-trips doubles") {
  for (double v : {1.0 / 3.0, 0.1, -2.5e17, 1e-300, 0.0, 123.456}) {
    const std::string s = format_value(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("runs are deterministic and write the declared schema") {
  RunConfig cfg;
  cfg.command = Command::Transition;
  cfg.transition = "exp";
  cfg.tmin = 0.0;
  cfg.tmax = 5.0;
  cfg.points = 7;
  cfg.output = "/tmp/scarpi_run_a.csv";
  run(cfg);
  cfg.output = "/tmp/scarpi_run_b.csv";
  run(cfg);
  const std::string a = slurp("/tmp/scarpi_run_a.csv");
  const std::string b = slurp("/tmp/scarpi_run_b.csv");
  CHECK(a == b);
  CHECK(a.substr(0, 8) == "t,alpha\n");
  int lines = 0;
  for (char ch : a) lines += ch == '\n';
  CHECK(lines == 8);  // header + 7 rows, LF endings, no trailing junk
  std::remove("/tmp/scarpi_run_a.csv");
  std::remove("/tmp/scarpi_run_b.csv");
}

TEST_CASE("kernel run with an auxiliary index") {
  RunConfig cfg;
  cfg.command = Command::Kernel;
  cfg.transition = "const";
  cfg.a1 = 1.4;
  cfg.n = 2;
  cfg.j = 1;
  cfg.which = "phi";
  cfg.tmin = 1.0;
  cfg.tmax = 2.0;
  cfg.points = 2;
  cfg.output = "/tmp/scarpi_run_j.csv";
  run(cfg);
  std::ifstream in(cfg.output);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "t,phi_1");
  // transform s^{-0.6}: value at t = 1 is 1/Gamma(0.6)
  const double v = std::strtod(row.substr(row.find(',') + 1).c_str(), nullptr);
  CHECK(std::abs(v - 0.67150497244207336) <= 1e-6);
  std::remove(cfg.output.c_str());

  cfg.which = "psi";
  CHECK_THROWS_AS(run(cfg), UsageError);
}

TEST_CASE("invert run validates the built-in expression") {
  RunConfig cfg;
  cfg.command = Command::Invert;
  cfg.expr = "nonsense";
  cfg.t_single = 1.0;
  CHECK_THROWS_AS(run(cfg), UsageError);
  cfg.expr = "pow_s";
  cfg.power = 0.3;
  CHECK_THROWS_AS(run(cfg), UsageError);
}
