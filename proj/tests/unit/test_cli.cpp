#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(BEWIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("bell at a point emits the fixed JSON schema") {
  const Run r = run("bell --d 3 --x 0.309 --y 0.01733 --a 0.913");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"d", "kind", "x", "y", "a", "s", "value", "restarts", "converged"}) CHECK(j.contains(key));
  CHECK(j["kind"] == "bell");
  CHECK(j["s"].is_null());
  CHECK(j["value"].get<double>() == doctest::Approx(oracle::kBell_d3_row).epsilon(1e-10));
}

TEST_CASE("state reports derived parameters") {
  const Run r = run("state --d 3 --x 0.3 --y 0.016666666666666666");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["R"].get<double>() == doctest::Approx(oracle::kR_d3).epsilon(1e-14));
  CHECK(j["delta"].get<double>() == doctest::Approx(oracle::kDelta_d3).epsilon(1e-14));
}

TEST_CASE("lhv and witness subcommands") {
  const Run l = run("lhv --d 4");
  REQUIRE(l.status == 0);
  CHECK(nlohmann::json::parse(l.out)["bound"].get<double>() == 0.0);
  const Run w = run("witness --d 3 --t 1.5");
  REQUIRE(w.status == 0);
  const auto j = nlohmann::json::parse(w.out);
  CHECK(j["in_J"] == true);
  CHECK(j["detects_Psi"] == true);
}

TEST_CASE("region scan CSV header") {
  const Run r = run("--format csv regions --d 3 --grid 4");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("x,y,in_D,in_DNx,in_DNy,in_DSx,in_DSy,in_DE\n", 0) == 0);
}

TEST_CASE("usage and domain errors exit with status 2") {
  CHECK(run("bell").status == 2);
  CHECK(run("bell --d 2").status == 2);
  CHECK(run("--workers 0 lhv --d 3").status == 2);
  CHECK(run("state --d 3 --x 0.9 --y 0.9").status == 2);
  CHECK(run("nonsense").status == 2);
}
