#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bewit/operators.hpp"
#include "bewit/witness_region.hpp"

using namespace bewit;

TEST_CASE("gamma functions at d=3") {
  CHECK(gamma(3, 2.0) == doctest::Approx(9.5 / 5.5).epsilon(1e-15));
  CHECK(gamma_tilde(3, 2.0) == doctest::Approx(1.32).epsilon(1e-15));
  CHECK(std::isinf(gamma_tilde(3, 1.0)));
  for (std::size_t d = 3; d <= 50; ++d) CHECK(gamma(d, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("envelope closed form at known points") {
  const EnvelopePoint end = envelope(3, t_one(3));
  CHECK(end.u == doctest::Approx(3.0));
  CHECK(std::abs(end.alpha) <= 1e-14);
  CHECK(end.beta == doctest::Approx(1.75).epsilon(1e-14));
  const EnvelopePoint mid = envelope(3, 1.5);
  CHECK(mid.alpha == doctest::Approx(20.0 / 108.0).epsilon(1e-14));
  CHECK(mid.beta == doctest::Approx(84.0 / 72.0).epsilon(1e-14));
  CHECK_THROWS_AS(envelope(3, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(envelope(3, t_one(3) + 0.1), std::invalid_argument);
}

TEST_CASE("envelope matches its finite-difference construction") {
  for (std::size_t d = 3; d <= 6; ++d)
    for (int k = 1; k < 50; ++k) {
      const double t = 1.0 + (t_one(d) - 1.0) * k / 50.0;
      const EnvelopePoint e = envelope(d, t);
      const WitnessCoefficients f = envelope_fd(d, t);
      CHECK(std::abs(e.alpha - f.alpha) <= 1e-6);
      CHECK(std::abs(e.beta - f.beta) <= 1e-6);
    }
}

TEST_CASE("membership in J") {
  const EnvelopePoint e = envelope(4, 1.4);
  CHECK(in_J(4, e.alpha, e.beta));
  CHECK(std::abs(j_slack(4, e.alpha, e.beta).slack) <= 1e-9);
  CHECK_FALSE(in_J(4, e.alpha, e.beta - 1e-3));
  CHECK(in_J(4, e.alpha, e.beta + 1e-3));
}

TEST_CASE("envelope witnesses are nonpositive on product states and detect Psi") {
  const std::size_t d = 3;
  const MeasurementSetting m = psi_detection_setting(d);
  const EnvelopePoint e = envelope(d, 1.5);
  const WitnessSetting w{m, e.alpha, e.beta};
  const SeparabilityResult r = separability_check(witness_operator(w), d);
  CHECK(std::abs(r.max_value) <= 1e-9);
  CHECK(r.converged);
  CHECK(psi_expectation(w) > 0.0);
  const SeparabilityResult out = separability_check(witness_operator({m, e.alpha, e.beta - 1e-3}), d);
  CHECK(out.max_value > 0.0);
}

TEST_CASE("boundary branch of the witness region") {
  const DeEnvelopeReport r = de_envelope_check(3, 200);
  CHECK(r.max_abs_min_det <= 1e-12);
  CHECK(r.max_abs_delta <= 1e-12);
  CHECK(r.f_max < 0.0);
  CHECK(r.r0_at_zero == doctest::Approx(1.0));
  CHECK(r.r0_at_end == doctest::Approx(0.5));
}
