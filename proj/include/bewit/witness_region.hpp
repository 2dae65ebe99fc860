#pragma once

#include <cstddef>
#include <cstdint>

#include "bewit/matcore.hpp"
#include "bewit/operators.hpp"

namespace bewit {

/// gamma(t) = (3t^2 - 2t(d-2)/(d-1) - 1/(d-1)) / ((d-1)(t - (d-2)/(d-1))^2 + 1)
double gamma(std::size_t d, double t);

/// gamma~(t) = 1/(t-1)^2 + (d-1)/(t + 1/(d-1))^2; +inf at t = 1.
double gamma_tilde(std::size_t d, double t);

/// t1 = 1 + d/((d-1)(d-2)), the zero of alpha_t.
double t_one(std::size_t d);

struct EnvelopePoint {
  double t = 1.0;
  double u = 0.0;  // (d-1)(t-1)
  double alpha = 1.0;
  double beta = 0.0;
};

/// Closed forms in u:
///   alpha = (d-1)(d+2u)(d-(d-2)u) / ((d+u-1)(d+2u+u^2)^2)
///   beta  = u(d+u)(d^2+3du+3u^2) / ((d-1)(d+2u+u^2)^2)
/// Throws std::invalid_argument for t outside [1, t1] or d < 3.
EnvelopePoint envelope(std::size_t d, double t);

/// The same point from the line family by central differences of gamma:
/// (gamma'(t)/(2t), gamma(t) - gamma'(t) t/2).
WitnessCoefficients envelope_fd(std::size_t d, double t, double h = 1e-6);

struct JSlack {
  double slack = 0.0;  // min over t in [1, t1] of alpha t^2 + beta - gamma(t)
  double t = 1.0;      // where it is attained
};

/// 10^4-point grid on [1, t1] followed by golden-section refinement around the
/// grid minimum.
JSlack j_slack(std::size_t d, double alpha, double beta);

/// 0 <= alpha < 1 and j_slack >= -tol.
bool in_J(std::size_t d, double alpha, double beta, double tol = 1e-12);

struct SeparabilityOptions {
  int restarts = 50;
  std::uint64_t seed = 20240601;
  double tol = 1e-12;
  int max_iterations = 10000;
  int workers = 1;
};

struct SeparabilityResult {
  double max_value = 0.0;
  bool converged = true;  // every restart met the tolerance
  int iterations = 0;     // total over restarts
};

/// max over real product vectors psi (x) phi of <psi,phi|W|psi,phi> by
/// alternating top-eigenvector updates from seeded random starts. W acts on
/// C^d (x) C^d with index (i,j) -> i d + j.
SeparabilityResult separability_check(const SymMatrix& w, std::size_t d,
                                      const SeparabilityOptions& opts = {});

/// Alice direction that makes the A_p (x) B_p terms vanish on |Psi>:
/// a = sqrt((d-1)/d), b = -1/sqrt(d).
MeasurementSetting psi_detection_setting(std::size_t d);

/// Tr(|Psi><Psi|/d W_E) = [(1-alpha) a^2 - (a + b sqrt(d-1))^2] / d.
double psi_expectation(const WitnessSetting& w);

struct EnvelopeDet {
  double t = 1.0;
  double det = 0.0;
};

/// min over t in [1, t1] of det M_E(alpha_t, beta_t) at (x, y): 2001-point
/// grid then golden-section refinement. (x, y) need only satisfy x^2+y^2 <= 1.
EnvelopeDet min_det_over_envelope(std::size_t d, double x, double y);

struct DeEnvelopeReport {
  int samples = 0;
  double max_abs_min_det = 0.0;  // |min_t det M_E| on the branch
  double max_abs_delta = 0.0;    // |Delta| on the branch
  double max_tangent_gap = 0.0;  // |t_min - (1 + u/(d-1))|
  double f_max = 0.0;            // sup of the cubic cofactor f(r) on (0, 1)
  double r0_at_zero = 0.0;       // r0(u = 0), expected 1
  double r0_at_end = 0.0;        // r0(u = d/(d-2)), expected (d-2)/(d-1)
};

/// Samples u_k = (d/(d-2)) k/(n+1), k = 1..n, of the branch
/// sqrt(x/y) = r0 = (d+2u)/(d+2u+u^2) lying on Delta = 0.
DeEnvelopeReport de_envelope_check(std::size_t d, int n);

}  // namespace bewit
