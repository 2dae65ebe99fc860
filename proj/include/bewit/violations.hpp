#pragma once

// Closed-form evaluation of <W> for the Bell, steering and witness operators.
// For every kind, Tr(rho W) = -(d-1)/R * (a, b) M (a, b)^T with a 2x2
// symmetric M sharing the off-diagonal x(2y + ztilde)/sqrt(d-1).

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "bewit/bound_state.hpp"
#include "bewit/matcore.hpp"
#include "bewit/operators.hpp"

namespace bewit {

enum class Kind { Bell, Steering, Witness };

std::string to_string(Kind k);

/// [[p, c], [c, q]]
struct Mat2 {
  double p = 0.0;
  double c = 0.0;
  double q = 0.0;

  double trace() const noexcept { return p + q; }
  double det() const noexcept { return p * q - c * c; }
  /// Smaller eigenvalue, 2 det / (Tr + sqrt(Tr^2 - 4 det)); exact sign for Tr > 0.
  double lambda_min() const noexcept;
  double quadratic(double a, double b) const noexcept { return p * a * a + 2.0 * c * a * b + q * b * b; }
};

/// Extra parameters: none (Bell), s (steering) or (alpha, beta) (witness).
using ReducedExtra = std::variant<std::monostate, double, WitnessCoefficients>;

struct ReducedForm {
  Kind kind = Kind::Bell;
  Mat2 m;
  StateParams params;
  ReducedExtra extra;
};

/// Throws std::invalid_argument when `extra` does not match `kind`, when s is
/// outside (0,1), or when d < 3. `params` is used as given (no membership
/// test), so boundary points can be evaluated.
ReducedForm m_matrix(Kind kind, const StateParams& params, const ReducedExtra& extra = {});

inline ReducedForm reduced_bell(const StateParams& p) { return m_matrix(Kind::Bell, p); }
inline ReducedForm reduced_steering(const StateParams& p, double s) {
  return m_matrix(Kind::Steering, p, s);
}
inline ReducedForm reduced_witness(const StateParams& p, WitnessCoefficients w) {
  return m_matrix(Kind::Witness, p, w);
}

/// -(d-1)/R (a,b) M (a,b)^T
double expectation_reduced(const ReducedForm& rf, double a, double b);
double expectation_reduced(const ReducedForm& rf, const MeasurementSetting& m);

/// Tr(W rho) from dense matrices. Throws std::invalid_argument on size mismatch.
double expectation_direct(const SymMatrix& w, const SymMatrix& rho);

struct Direction {
  double a = 0.0;
  double b = 0.0;
  double lambda_min = 0.0;
  /// (d-1)/R * (-lambda_min): the largest achievable Tr(rho W). Positive
  /// exactly when the inequality is violated.
  double value = 0.0;
};

/// Unit eigenvector of M for its smaller eigenvalue, a >= 0 (b >= 0 on ties).
Direction best_direction(const ReducedForm& rf);

/// best_direction restricted to violating forms. Throws NoViolation when det M >= 0.
Direction optimal_direction(const ReducedForm& rf);

/// Maps (lambda~, theta) with lambda~ > d~+ = d+/sqrt(d-1), theta in (0, pi) to a
/// point of D_N^x:
///   Gamma = sqrt((1 + l^2)(l - d~+)(l + d~-)),
///   y = [(l^2 - 1 - Gamma cos theta)^2/(d-2) + (d-1) l^2 + 1]^{-1/2},
///   x = y l sqrt(d-1).
/// Throws std::invalid_argument when out of range.
StateParams bell_parametrization(std::size_t d, double lambda_tilde, double theta);
/// Gamma(lambda~) above.
double bell_gamma(std::size_t d, double lambda_tilde);

struct OptimizerTrace {
  int restarts = 0;
  int iterations = 0;
  bool converged = false;
};

struct ViolationReport {
  std::size_t d = 0;
  Kind kind = Kind::Bell;
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::optional<double> s;
  double value = 0.0;
  OptimizerTrace trace;
};

struct OptimizeOptions {
  int workers = 1;
  /// Seeds come from a fixed grid; at most this many are used.
  int starts = 25;
  double diameter_tol = 1e-10;
  int max_iterations = 5000;
};

/// Largest Bell violation over D_N^x (multistart Nelder-Mead in log x, log y
/// inside the triangle y > 0, x < x_N, x > d+ y).
ViolationReport maximize_bell(std::size_t d, const OptimizeOptions& opts = {});

/// Largest steering violation over D_S^x and s in (0,1).
ViolationReport maximize_steering(std::size_t d, const OptimizeOptions& opts = {});

/// Steering violation at fixed (x, y) optimized over s; returns the s used.
struct SteeringAtPoint {
  double s = 0.0;
  Direction direction;
};
SteeringAtPoint best_steering_at(const StateParams& p);

/// s* = sqrt((d-1) x y / L), L = (y + ztilde)^2/(d-1) + x y - y^2, clipped
/// into [eps, 1 - eps]. Minimizes det M_S over s.
double steering_s_star(const StateParams& p, double eps = 1e-9);

/// Evaluate a report's violation at a fixed point and setting (no optimization).
ViolationReport evaluate_bell(const StateParams& p, const MeasurementSetting& m);
ViolationReport evaluate_steering(const StateParams& p, const SteeringSetting& st);

struct AsymptoticPoint {
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
  double s = 0.0;  // steering only
  double value = 0.0;
};

struct AsymptoticLaws {
  AsymptoticPoint bell;      // ((2/3) d^-1/2, (4/27) d^-5/2), a = 1 - 2/(9d), (8/729) d^-4
  AsymptoticPoint steering;  // (d^-1/2, d^-1/2 / 4), s = 1/2, a = 1 - 1/(2d), 1/(32 d^2)
};

AsymptoticLaws asymptotic_laws(std::size_t d);

}  // namespace bewit
