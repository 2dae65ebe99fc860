#include "bewit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bewit/simplex.hpp"

namespace bewit {

MeasurementSetting MeasurementSetting::make(std::size_t d, double a, double b) {
  if (d < 3) throw std::invalid_argument("MeasurementSetting: d must be >= 3");
  if (!std::isfinite(a) || !std::isfinite(b) || std::abs(a * a + b * b - 1.0) > 1e-12)
    throw std::invalid_argument("MeasurementSetting: a^2 + b^2 must equal 1");
  return MeasurementSetting{d, a, b};
}

MeasurementSetting MeasurementSetting::from_a(std::size_t d, double a, double b_sign) {
  if (!(std::abs(a) <= 1.0)) throw std::invalid_argument("MeasurementSetting: |a| must be <= 1");
  const double b = std::copysign(std::sqrt(std::max(0.0, 1.0 - a * a)), b_sign);
  return make(d, a, b);
}

SteeringSetting SteeringSetting::make(const MeasurementSetting& m, double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("SteeringSetting: s must lie in (0, 1)");
  return SteeringSetting{m, s};
}

std::vector<QVector> alice_basis(const MeasurementSetting& m) {
  const ThetaFamily theta = theta_states(m.d);
  const QVector e0 = basis_vector(m.d, 0);
  std::vector<QVector> out;
  out.reserve(m.d);
  for (const QVector& t : theta.vectors) out.push_back(axpy(scaled(e0, m.a), m.b, t));
  return out;
}

std::vector<QVector> bob_basis(std::size_t d) {
  if (d < 3) throw std::invalid_argument("bob_basis: d must be >= 3");
  const ThetaFamily theta = theta_states(d);
  const double dd = static_cast<double>(d);
  const QVector e0 = basis_vector(d, 0);
  std::vector<QVector> out;
  out.reserve(d);
  for (const QVector& t : theta.vectors)
    out.push_back(scaled(axpy(e0, std::sqrt(dd - 1.0), t), 1.0 / std::sqrt(dd)));
  return out;
}

SymMatrix projector_zero(std::size_t d) {
  SymMatrix p(d);
  p.set(0, 0, 1.0);
  return p;
}

SymMatrix projector_rest(std::size_t d) {
  SymMatrix p = SymMatrix::identity(d);
  p.set(0, 0, 0.0);
  return p;
}

SymMatrix alice_projector_sum(const MeasurementSetting& m) {
  SymMatrix s(m.d);
  for (const QVector& v : alice_basis(m)) s.add_outer(1.0, v);
  return s;
}

namespace {

// c * (u u^T) (x) (v v^T) as one rank-1 update on the product vector.
void add_product_projector(SymMatrix& w, double c, const QVector& u, const QVector& v) {
  w.add_outer(c, kron(u, v));
}

// c * P_sub (x) P0 where P_sub is diagonal on the first factor.
void add_diag_times_p0(SymMatrix& w, double c, const SymMatrix& diag_first, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) w.add(i * d, i * d, c * diag_first(i, i));
}

void subtract_ab_terms(SymMatrix& w, const MeasurementSetting& m) {
  const auto alice = alice_basis(m);
  const auto bob = bob_basis(m.d);
  for (std::size_t p = 0; p < m.d; ++p) add_product_projector(w, -1.0, alice[p], bob[p]);
}

}  // namespace

SymMatrix bell_operator(const MeasurementSetting& m) {
  const std::size_t d = m.d;
  const auto alice = alice_basis(m);
  const QVector e0 = basis_vector(d, 0);
  SymMatrix w(d * d);
  // A_0 (x) P0
  add_product_projector(w, 1.0, alice[0], e0);
  // - sum_{p>=1} (I - A_p) (x) P0
  for (std::size_t p = 1; p < d; ++p) {
    for (std::size_t i = 0; i < d; ++i) w.add(i * d, i * d, -1.0);
    add_product_projector(w, 1.0, alice[p], e0);
  }
  subtract_ab_terms(w, m);
  return w;
}

SymMatrix bell_operator_collected(const MeasurementSetting& m) {
  const std::size_t d = m.d;
  const double dd = static_cast<double>(d);
  const double b2 = m.b * m.b;
  SymMatrix w(d * d);
  add_diag_times_p0(w, 1.0 - dd * b2, projector_zero(d), d);
  add_diag_times_p0(w, -(dd - 1.0 - dd * b2 / (dd - 1.0)), projector_rest(d), d);
  subtract_ab_terms(w, m);
  return w;
}

ZOperators z_operators(const SteeringSetting& st) {
  const MeasurementSetting& m = st.setting;
  if (!(st.s > 0.0 && st.s < 1.0)) throw std::invalid_argument("z_operators: s must lie in (0, 1)");
  ZOperators z;
  z.z_dd = SymMatrix(m.d);
  z.z_dd.set(0, 0, (1.0 - st.s) * m.a * m.a);
  z.z_d1 = z.z_dd;
  z.z_d0 = SymMatrix(m.d);
  z.z_d0.add_scaled((1.0 / st.s - 1.0) * m.b * m.b, projector_rest(m.d));
  for (const QVector& v : alice_basis(m)) {
    SymMatrix zp(m.d);
    zp.add_outer(1.0, v);
    z.z_pd.push_back(std::move(zp));
  }
  return z;
}

double z_constraint_residual(const ZOperators& z) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const SymMatrix* ztau : {&z.z_d0, &z.z_d1}) {
    for (const SymMatrix& zp : z.z_pd) {
      SymMatrix m = z.z_dd;
      m.add_scaled(-1.0, *ztau);
      m.add_scaled(-1.0, zp);
      worst = std::max(worst, max_eigenvalue(m));
    }
  }
  return worst;
}

SymMatrix steering_operator(const SteeringSetting& st) {
  const std::size_t d = st.setting.d;
  const ZOperators z = z_operators(st);
  SymMatrix w(d * d);
  add_diag_times_p0(w, 1.0, z.z_dd, d);
  add_diag_times_p0(w, -1.0, z.z_d0, d);
  subtract_ab_terms(w, st.setting);
  return w;
}

SymMatrix witness_operator(const WitnessSetting& ws) {
  const MeasurementSetting& m = ws.setting;
  const std::size_t d = m.d;
  SymMatrix w(d * d);
  add_diag_times_p0(w, (1.0 - ws.alpha) * m.a * m.a, projector_zero(d), d);
  add_diag_times_p0(w, -ws.beta * m.b * m.b, projector_rest(d), d);
  subtract_ab_terms(w, m);
  return w;
}

WitnessCoefficients steering_coefficients(double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("steering_coefficients: s must lie in (0, 1)");
  return {s, 1.0 / s - 1.0};
}

WitnessCoefficients bell_coefficients(const MeasurementSetting& m) {
  if (m.a == 0.0 || m.b == 0.0)
    throw std::invalid_argument("bell_coefficients: requires a != 0 and b != 0");
  const double dd = static_cast<double>(m.d);
  const double a2 = m.a * m.a, b2 = m.b * m.b;
  return {(dd - 1.0) * b2 / a2, (dd - 1.0) / b2 - dd / (dd - 1.0)};
}

}  // namespace bewit
