#include "doctest.h"

#include <stdexcept>

#include "bewit/selftest.hpp"

using namespace bewit;

TEST_CASE("configuration validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.workers = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.format = "xml";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.eig_tol = -1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("self-test passes and is independent of worker count") {
  RunConfig one;
  RunConfig three;
  three.workers = 3;
  const SelftestReport a = run_selftest(one), b = run_selftest(three);
  CHECK(a.failures() == 0);
  CHECK(a.text() == b.text());
  CHECK(a.checks.size() >= 10);
}
