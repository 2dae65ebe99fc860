#include "bewit/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bewit {

ThetaFamily theta_states(std::size_t d) {
  if (d < 2) throw std::invalid_argument("theta_states: d must be >= 2");

  // Work directly in dimension d; the recursion only ever touches |1>..|n-1>.
  std::vector<QVector> family;
  family.push_back(basis_vector(d, 1));
  family.push_back(scaled(basis_vector(d, 1), -1.0));
  for (std::size_t n = 3; n <= d; ++n) {
    const double nd = static_cast<double>(n);
    const double shrink = std::sqrt(nd * (nd - 2.0)) / (nd - 1.0);
    const double drop = 1.0 / (nd - 1.0);
    for (QVector& v : family) {
      for (double& c : v) c *= shrink;
      v[n - 1] -= drop;
    }
    family.push_back(basis_vector(d, n - 1));
  }
  return ThetaFamily{d, std::move(family)};
}

SymMatrix theta_gram(const ThetaFamily& f) {
  SymMatrix g(f.d);
  for (std::size_t p = 0; p < f.d; ++p)
    for (std::size_t q = p; q < f.d; ++q) g.set(p, q, dot(f.vectors[p], f.vectors[q]));
  return g;
}

SymMatrix theta_resolution(const ThetaFamily& f) {
  SymMatrix r(f.d);
  for (const QVector& v : f.vectors) r.add_outer(1.0, v);
  return r;
}

ThetaDiagnostics theta_identities(const ThetaFamily& f) {
  const std::size_t d = f.d;
  const double dd = static_cast<double>(d);
  ThetaDiagnostics out;

  QVector sum(d, 0.0);
  for (const QVector& v : f.vectors)
    for (std::size_t k = 0; k < d; ++k) sum[k] += v[k];
  for (double c : sum) out.sum_residual = std::max(out.sum_residual, std::abs(c));

  SymMatrix expected(d);
  for (std::size_t k = 1; k < d; ++k) expected.set(k, k, dd / (dd - 1.0));
  out.resolution_residual = max_abs_diff(theta_resolution(f), expected);

  const SymMatrix g = theta_gram(f);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const double target = ((p == q ? dd : 0.0) - 1.0) / (dd - 1.0);
      out.gram_residual = std::max(out.gram_residual, std::abs(g(p, q) - target));
    }
  return out;
}

}  // namespace bewit
