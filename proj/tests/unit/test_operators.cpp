#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bewit/bound_state.hpp"
#include "bewit/operators.hpp"
#include "bewit/violations.hpp"

using namespace bewit;

TEST_CASE("measurement settings validate normalization") {
  CHECK_THROWS_AS(MeasurementSetting::make(3, 0.6, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(MeasurementSetting::make(2, 1.0, 0.0), std::invalid_argument);
  const MeasurementSetting m = MeasurementSetting::from_a(4, 0.6);
  CHECK(m.b == doctest::Approx(-0.8));
  CHECK_THROWS_AS(SteeringSetting::make(m, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SteeringSetting::make(m, 0.0), std::invalid_argument);
}

TEST_CASE("Alice's vectors are unit with fixed mutual overlap") {
  for (std::size_t d = 3; d <= 7; ++d) {
    const MeasurementSetting m = MeasurementSetting::from_a(d, 0.7, 1.0);
    const auto basis = alice_basis(m);
    REQUIRE(basis.size() == d);
    const double overlap = m.a * m.a - m.b * m.b / static_cast<double>(d - 1);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) CHECK(dot(basis[p], basis[q]) == doctest::Approx(p == q ? 1.0 : overlap));
  }
}

TEST_CASE("Bob's basis is orthonormal") {
  for (std::size_t d = 3; d <= 7; ++d) {
    const auto basis = bob_basis(d);
    REQUIRE(basis.size() == d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) CHECK(dot(basis[p], basis[q]) == doctest::Approx(p == q ? 1.0 : 0.0));
  }
}

TEST_CASE("collected Bell operator equals the summed form") {
  for (std::size_t d = 3; d <= 6; ++d) {
    const MeasurementSetting m = MeasurementSetting::from_a(d, 0.9);
    CHECK(max_abs_diff(bell_operator(m), bell_operator_collected(m)) <= 1e-14);
  }
}

TEST_CASE("steering Z operators satisfy the local constraints") {
  for (double s : {0.1, 0.5, 0.9}) {
    const ZOperators z = z_operators(SteeringSetting::make(MeasurementSetting::from_a(5, 0.8), s));
    CHECK(z_constraint_residual(z) <= 1e-14);
  }
}

TEST_CASE("witness coefficients reproduce Bell and steering operators") {
  const MeasurementSetting m = MeasurementSetting::from_a(4, 0.85);
  const WitnessCoefficients wb = bell_coefficients(m);
  CHECK(max_abs_diff(witness_operator({m, wb.alpha, wb.beta}), bell_operator(m)) <= 1e-13);
  const WitnessCoefficients ws = steering_coefficients(0.4);
  CHECK(max_abs_diff(witness_operator({m, ws.alpha, ws.beta}), steering_operator(SteeringSetting::make(m, 0.4))) <=
        1e-13);
}

TEST_CASE("operators act on a state as the reduced forms predict") {
  const StateBundle b = build_state(make_params(4, 0.3, 0.05));
  const MeasurementSetting m = MeasurementSetting::from_a(4, 0.93);
  CHECK(expectation_direct(bell_operator(m), b.rho) ==
        doctest::Approx(expectation_reduced(reduced_bell(b.params), m)).epsilon(1e-12));
}
