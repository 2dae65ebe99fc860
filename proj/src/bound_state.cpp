#include "bewit/bound_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bewit/errors.hpp"
#include "bewit/simplex.hpp"

namespace bewit {

namespace {

std::string describe(std::size_t d, double x, double y) {
  std::ostringstream os;
  os.precision(17);
  os << "d=" << d << ", x=" << x << ", y=" << y;
  return os.str();
}

}  // namespace

DomainMargins domain_margins(std::size_t d, double x, double y) noexcept {
  DomainMargins m;
  m.x = x;
  m.y = y;
  m.unit_disk = 1.0 - x * x - y * y;
  m.delta = d > 2 ? m.unit_disk / static_cast<double>(d - 2) - x * y : -1.0;
  return m;
}

StateParams derive_params(std::size_t d, double x, double y) noexcept {
  const double dd = static_cast<double>(d);
  StateParams p;
  p.d = d;
  p.x = x;
  p.y = y;
  const double z2 = std::max(0.0, 1.0 - x * x - y * y);
  p.z = std::sqrt(z2);
  p.ztilde = p.z * std::sqrt(dd - 2.0);
  p.delta = z2 / (dd - 2.0) - x * y;
  p.bigR = dd * x * y + (dd - 1.0) * (dd - 2.0) * p.delta + dd - 1.0;
  return p;
}

StateParams make_params(std::size_t d, double x, double y) {
  if (d < 3) throw OutsideDomain("d >= 3", describe(d, x, y));
  const DomainMargins m = domain_margins(d, x, y);
  if (!(m.x > 0.0)) throw OutsideDomain("x > 0", describe(d, x, y));
  if (!(m.y > 0.0)) throw OutsideDomain("y > 0", describe(d, x, y));
  if (!(m.unit_disk > 0.0)) throw OutsideDomain("x^2 + y^2 < 1", describe(d, x, y));
  if (!(m.delta > 0.0)) throw OutsideDomain("delta > 0", describe(d, x, y));
  return derive_params(d, x, y);
}

StateBundle build_state(const StateParams& params) {
  const StateParams p = make_params(params.d, params.x, params.y);
  const std::size_t d = p.d;
  if (d > kMaxDenseDim)
    throw std::invalid_argument("build_state: dense materialization is capped at d = " +
                                std::to_string(kMaxDenseDim));
  const std::size_t n = d * d;
  const double dd = static_cast<double>(d);
  StateBundle b;
  b.params = p;

  b.psi.assign(n, 0.0);
  for (std::size_t i = 0; i < d; ++i) b.psi[i * d + i] = 1.0;

  for (std::size_t i = 2; i < d; ++i)
    for (std::size_t j = 1; j < i; ++j) {
      QVector v(n, 0.0);
      v[i * d + j] = 1.0;
      v[j * d + i] = -1.0;
      b.psi_ij.push_back(std::move(v));
    }

  const ThetaFamily theta = theta_states(d);
  const double phi_scale = std::pow(dd - 1.0, 1.5) / (dd * std::sqrt(dd - 2.0));
  std::vector<QVector> theta_pairs;
  theta_pairs.reserve(d);
  for (const QVector& t : theta.vectors) theta_pairs.push_back(kron(t, t));

  for (std::size_t k = 1; k < d; ++k) {
    QVector phi(n, 0.0);
    for (std::size_t q = 0; q < d; ++q) {
      const double c = phi_scale * theta.vectors[q][k];
      for (std::size_t m = 0; m < n; ++m) phi[m] += c * theta_pairs[q][m];
    }
    QVector psi_k = scaled(phi, p.z);
    psi_k[0 * d + k] += p.x;
    psi_k[k * d + 0] += p.y;
    b.phi_k.push_back(std::move(phi));
    b.psi_k.push_back(std::move(psi_k));
  }

  b.rho = SymMatrix(n);
  b.rho.add_outer(p.x * p.y / p.bigR, b.psi);
  for (const QVector& v : b.psi_ij) b.rho.add_outer(p.delta / p.bigR, v);
  for (const QVector& v : b.psi_k) b.rho.add_outer(1.0 / p.bigR, v);
  return b;
}

PptCheck check_ppt(const StateBundle& bundle, const JacobiOptions& opts) {
  const SymMatrix pt = partial_transpose_first(bundle.rho, bundle.params.d);
  PptCheck c;
  c.pt_residual = max_abs_diff(pt, bundle.rho);
  c.min_eig_pt = min_eigenvalue(pt, opts);
  return c;
}

SymMatrix swap_qudits(const StateBundle& bundle) {
  return swap_factors(bundle.rho, bundle.params.d);
}

std::vector<double> expected_spectrum(const StateParams& p) {
  const std::size_t d = p.d;
  std::vector<double> s;
  s.reserve(d * d);
  s.push_back(static_cast<double>(d) * p.x * p.y / p.bigR);
  for (std::size_t k = 0; k < (d - 1) * (d - 2) / 2; ++k) s.push_back(2.0 * p.delta / p.bigR);
  for (std::size_t k = 0; k + 1 < d; ++k) s.push_back(1.0 / p.bigR);
  s.resize(d * d, 0.0);
  std::sort(s.begin(), s.end());
  return s;
}

MarginalMoments marginal_moments(const StateBundle& bundle) {
  const std::size_t d = bundle.params.d;
  MarginalMoments m;
  m.p00 = bundle.rho(0, 0);
  for (std::size_t i = 1; i < d; ++i) m.pbar0_p0 += bundle.rho(i * d, i * d);
  return m;
}

}  // namespace bewit
