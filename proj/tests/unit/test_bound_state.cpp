#include "doctest.h"

#include <cmath>

#include "bewit/bound_state.hpp"
#include "bewit/errors.hpp"
#include "oracles.hpp"

using namespace bewit;

TEST_CASE("derived parameters match the frozen oracle") {
  const StateParams p = make_params(3, 0.3, 1.0 / 60.0);
  CHECK(p.z * p.z == doctest::Approx(oracle::kZ2_d3).epsilon(1e-15));
  CHECK(p.delta == doctest::Approx(oracle::kDelta_d3).epsilon(1e-15));
  CHECK(p.bigR == doctest::Approx(oracle::kR_d3).epsilon(1e-15));
}

TEST_CASE("domain violations are reported with the constraint name") {
  CHECK_THROWS_AS(make_params(3, 0.0, 0.1), OutsideDomain);
  CHECK_THROWS_AS(make_params(3, 0.8, 0.7), OutsideDomain);
  try {
    make_params(3, 0.9, 0.5);
    FAIL("expected OutsideDomain");
  } catch (const OutsideDomain& e) {
    CHECK(!e.constraint().empty());
  }
}

TEST_CASE("state spectrum matches oracle and closed form") {
  const StateBundle b = build_state(make_params(3, 0.3, 1.0 / 60.0));
  const auto ev = sym_eigenvalues(b.rho);
  REQUIRE(ev.size() == 9);
  for (std::size_t k = 0; k < 4; ++k) CHECK(ev[5 + k] == doctest::Approx(oracle::kTopEig_d3[k]).epsilon(1e-12));
  const auto want = expected_spectrum(b.params);
  for (std::size_t k = 0; k < 9; ++k) CHECK(std::abs(ev[k] - want[k]) <= 1e-12);
  CHECK(b.rho.trace() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("state is PPT and swap-related as expected") {
  for (std::size_t d = 3; d <= 6; ++d) {
    const StateBundle b = build_state(make_params(d, 0.25, 0.1));
    const PptCheck c = check_ppt(b);
    CHECK(c.pt_residual <= 1e-14);
    CHECK(c.min_eig_pt >= -1e-12);
    CHECK(b.psi_ij.size() == (d - 1) * (d - 2) / 2);
    CHECK(b.psi_k.size() == d - 1);
  }
}
