#include "bewit/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bewit/errors.hpp"

namespace bewit {

SymMatrix::SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  SymMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.a_[i * m.n_ + i] = diag[i];
  return m;
}

SymMatrix SymMatrix::from_row_major(std::size_t n, std::vector<double> rows) {
  if (rows.size() != n * n) throw std::invalid_argument("from_row_major: expected n*n entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i * n + j] != rows[j * n + i])
        throw std::invalid_argument("from_row_major: matrix is not symmetric at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
  SymMatrix m;
  m.n_ = n;
  m.a_ = std::move(rows);
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) noexcept {
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = v;
}

void SymMatrix::add(std::size_t i, std::size_t j, double v) noexcept {
  a_[i * n_ + j] += v;
  if (i != j) a_[j * n_ + i] += v;
}

void SymMatrix::add_outer(double c, std::span<const double> v) {
  if (v.size() != n_) throw std::invalid_argument("add_outer: size mismatch");
  for (std::size_t i = 0; i < n_; ++i) {
    const double ci = c * v[i];
    if (ci == 0.0) continue;
    double* row = &a_[i * n_];
    for (std::size_t j = 0; j < n_; ++j) row[j] += ci * v[j];
  }
  // c*v_i*v_j and c*v_j*v_i can differ in the last bit; mirror the upper part.
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) a_[j * n_ + i] = a_[i * n_ + j];
}

void SymMatrix::add_scaled(double c, const SymMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("add_scaled: size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += c * other.a_[k];
}

double SymMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

double SymMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double SymMatrix::frobenius() const noexcept {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

QVector SymMatrix::apply(std::span<const double> v) const {
  if (v.size() != n_) throw std::invalid_argument("apply: size mismatch");
  QVector out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = &a_[i * n_];
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

double SymMatrix::quadratic_form(std::span<const double> v) const { return dot(v, apply(v)); }

double dot(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: size mismatch");
  return std::inner_product(u.begin(), u.end(), v.begin(), 0.0);
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

QVector basis_vector(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("basis_vector: index out of range");
  QVector e(n, 0.0);
  e[i] = 1.0;
  return e;
}

QVector axpy(std::span<const double> u, double c, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("axpy: size mismatch");
  QVector out(u.begin(), u.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
  return out;
}

QVector scaled(std::span<const double> v, double c) {
  QVector out(v.begin(), v.end());
  for (double& x : out) x *= c;
  return out;
}

QVector kron(std::span<const double> a, std::span<const double> b) {
  QVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<double> rows(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          rows[(i * nb + j) * n + (k * nb + l)] = a(i, k) * b(j, l);
  return SymMatrix::from_row_major(n, std::move(rows));
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  auto da = a.data(), db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) m = std::max(m, std::abs(da[k] - db[k]));
  return m;
}

double trace_product(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("trace_product: size mismatch");
  auto da = a.data(), db = b.data();
  return std::inner_product(da.begin(), da.end(), db.begin(), 0.0);
}

namespace {

void require_square_of(const SymMatrix& m, std::size_t d, const char* who) {
  if (d == 0 || m.size() != d * d)
    throw std::invalid_argument(std::string(who) + ": matrix side " + std::to_string(m.size()) +
                                " is not d^2 for d = " + std::to_string(d));
}

}  // namespace

SymMatrix partial_transpose_first(const SymMatrix& m, std::size_t d) {
  require_square_of(m, d, "partial_transpose_first");
  const std::size_t n = d * d;
  std::vector<double> rows(n * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          rows[(i * d + j) * n + (k * d + l)] = m(k * d + j, i * d + l);
  return SymMatrix::from_row_major(n, std::move(rows));
}

SymMatrix swap_factors(const SymMatrix& m, std::size_t d) {
  require_square_of(m, d, "swap_factors");
  const std::size_t n = d * d;
  std::vector<double> rows(n * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          rows[(i * d + j) * n + (k * d + l)] = m(j * d + i, l * d + k);
  return SymMatrix::from_row_major(n, std::move(rows));
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * s);
}

// Works in place on a full symmetric copy. `vt` (row k = k-th eigenvector)
// is accumulated only when non-null.
int jacobi_sweeps(std::vector<double>& a, std::vector<double>* vt, std::size_t n,
                  const JacobiOptions& opts) {
  double fro = 0.0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  const double target = opts.rel_tol * fro;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= target) return sweep;
    if (sweep == opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = np;
          a[k * n + q] = a[q * n + k] = nq;
        }
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        if (vt != nullptr) {
          double* vp = &(*vt)[p * n];
          double* vq = &(*vt)[q * n];
          for (std::size_t k = 0; k < n; ++k) {
            const double x = vp[k], y = vq[k];
            vp[k] = c * x - s * y;
            vq[k] = s * x + c * y;
          }
        }
      }
    }
  }
  throw ConvergenceError("sym_eigen: no convergence after " + std::to_string(opts.max_sweeps) +
                         " Jacobi sweeps");
}

}  // namespace

EigenSystem sym_eigen(const SymMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.size();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> vt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;
  const int sweeps = jacobi_sweeps(a, &vt, n, opts);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  EigenSystem es;
  es.sweeps = sweeps;
  es.values.reserve(n);
  es.vectors.reserve(n);
  for (std::size_t k : order) {
    es.values.push_back(a[k * n + k]);
    QVector v(vt.begin() + static_cast<std::ptrdiff_t>(k * n),
              vt.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    if (n > 0 && v[arg] < 0.0)
      for (double& x : v) x = -x;
    es.vectors.push_back(std::move(v));
  }
  return es;
}

std::vector<double> sym_eigenvalues(const SymMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.size();
  std::vector<double> a(m.data().begin(), m.data().end());
  jacobi_sweeps(a, nullptr, n, opts);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i];
  std::sort(values.begin(), values.end());
  return values;
}

double min_eigenvalue(const SymMatrix& m, const JacobiOptions& opts) {
  if (m.size() == 0) throw std::invalid_argument("min_eigenvalue: empty matrix");
  return sym_eigenvalues(m, opts).front();
}

double max_eigenvalue(const SymMatrix& m, const JacobiOptions& opts) {
  if (m.size() == 0) throw std::invalid_argument("max_eigenvalue: empty matrix");
  return sym_eigenvalues(m, opts).back();
}

}  // namespace bewit
