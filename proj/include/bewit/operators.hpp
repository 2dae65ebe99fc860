#pragma once

#include <cstddef>
#include <vector>

#include "bewit/matcore.hpp"

namespace bewit {

/// Alice's direction |A_p> = a|0> + b|theta_p>, a^2 + b^2 = 1.
///
/// b carries a sign. Every entry of the reduced 2x2 forms is positive, so a
/// violating direction always has a and b of opposite sign; the usual chart
/// is a >= 0, b <= 0.
struct MeasurementSetting {
  std::size_t d = 0;
  double a = 1.0;
  double b = 0.0;

  /// Throws std::invalid_argument unless d >= 3 and |a^2 + b^2 - 1| <= 1e-12.
  static MeasurementSetting make(std::size_t d, double a, double b);
  /// b = sign * sqrt(1 - a^2), sign in {+1, -1}; |a| <= 1.
  static MeasurementSetting from_a(std::size_t d, double a, double b_sign = -1.0);
};

struct SteeringSetting {
  MeasurementSetting setting;
  double s = 0.5;  // 0 < s < 1

  /// Throws std::invalid_argument for s outside (0, 1).
  static SteeringSetting make(const MeasurementSetting& m, double s);
};

struct WitnessSetting {
  MeasurementSetting setting;
  double alpha = 0.0;
  double beta = 0.0;
};

/// |A_p>, p = 0..d-1. Not orthogonal in general:
/// <A_p|A_q> = a^2 - b^2/(d-1) for p != q.
std::vector<QVector> alice_basis(const MeasurementSetting& m);

/// |B_p> = (|0> + sqrt(d-1)|theta_p>)/sqrt(d); an orthonormal basis.
std::vector<QVector> bob_basis(std::size_t d);

/// |0><0| and I - |0><0| on one qudit.
SymMatrix projector_zero(std::size_t d);
SymMatrix projector_rest(std::size_t d);

/// sum_p |A_p><A_p| = d a^2 P0 + d b^2/(d-1) (I - P0).
SymMatrix alice_projector_sum(const MeasurementSetting& m);

/// W_N = A_0 (x) P0 - sum_{p>=1} (I - A_p) (x) P0 - sum_p A_p (x) B_p
SymMatrix bell_operator(const MeasurementSetting& m);

/// The same operator assembled from the collected form
/// (1 - d b^2) P0(x)P0 - (d - 1 - d b^2/(d-1)) (I-P0)(x)P0 - sum_p A_p (x) B_p.
SymMatrix bell_operator_collected(const MeasurementSetting& m);

struct ZOperators {
  SymMatrix z_dd;               // (1-s) a^2 P0
  SymMatrix z_d0;               // (1/s - 1) b^2 (I - P0)
  SymMatrix z_d1;               // equals z_dd
  std::vector<SymMatrix> z_pd;  // |A_p><A_p|
};

ZOperators z_operators(const SteeringSetting& st);

/// max over p and tau of the largest eigenvalue of Z_dd - Z_dtau - Z_pd
/// (must be <= 0 for the operators to be admissible).
double z_constraint_residual(const ZOperators& z);

/// W_S = Z_dd (x) P0 - Z_d0 (x) P0 - sum_p Z_pd (x) B_p
SymMatrix steering_operator(const SteeringSetting& st);

/// W_E = (1-alpha) a^2 P0(x)P0 - beta b^2 (I-P0)(x)P0 - sum_p A_p (x) B_p
SymMatrix witness_operator(const WitnessSetting& w);

struct WitnessCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
};

/// (alpha, beta) that turn W_E into W_S: (s, 1/s - 1).
WitnessCoefficients steering_coefficients(double s);
/// (alpha, beta) that turn W_E into W_N for the given setting:
/// ((d-1) b^2/a^2, (d-1)/b^2 - d/(d-1)). Requires a != 0 and b != 0.
WitnessCoefficients bell_coefficients(const MeasurementSetting& m);

}  // namespace bewit
