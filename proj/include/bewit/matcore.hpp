#pragma once

// Dense real linear algebra sized for two-qudit operators (n = d^2 up to a
// few hundred). Two-qudit basis order is fixed everywhere: |i,j> -> i*d + j,
// the first factor being the slow index.

#include <cstddef>
#include <span>
#include <vector>

namespace bewit {

using QVector = std::vector<double>;

/// Dense real symmetric matrix, stored full and row-major. Every mutator
/// writes both (i,j) and (j,i), so entries stay exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n);

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(std::span<const double> diag);
  /// Throws std::invalid_argument unless `rows` is n*n and exactly symmetric.
  static SymMatrix from_row_major(std::size_t n, std::vector<double> rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  std::span<const double> data() const noexcept { return a_; }

  void set(std::size_t i, std::size_t j, double v) noexcept;
  void add(std::size_t i, std::size_t j, double v) noexcept;
  /// this += c * v v^T
  void add_outer(double c, std::span<const double> v);
  /// this += c * other
  void add_scaled(double c, const SymMatrix& other);

  double trace() const noexcept;
  double max_abs() const noexcept;
  double frobenius() const noexcept;
  QVector apply(std::span<const double> v) const;
  double quadratic_form(std::span<const double> v) const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

double dot(std::span<const double> u, std::span<const double> v);
double norm(std::span<const double> v);
QVector basis_vector(std::size_t n, std::size_t i);
/// u + c*v
QVector axpy(std::span<const double> u, double c, std::span<const double> v);
QVector scaled(std::span<const double> v, double c);

/// Kronecker products with (i,j) -> i*dim(B) + j.
QVector kron(std::span<const double> a, std::span<const double> b);
SymMatrix kron(const SymMatrix& a, const SymMatrix& b);

/// max |A_ij - B_ij|; sizes must match.
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

/// Tr(A B) for symmetric A, B (= sum_ij A_ij B_ij).
double trace_product(const SymMatrix& a, const SymMatrix& b);

/// Transpose on the first tensor factor:
/// out((i,j),(k,l)) = in((k,j),(i,l)). Throws unless m.size() == d*d.
SymMatrix partial_transpose_first(const SymMatrix& m, std::size_t d);

/// Exchange of the two tensor factors: S M S with S|i,j> = |j,i>.
SymMatrix swap_factors(const SymMatrix& m, std::size_t d);

struct JacobiOptions {
  /// Stop when the off-diagonal Frobenius norm <= rel_tol * ||M||_F.
  double rel_tol = 1e-13;
  int max_sweeps = 100;
};

struct EigenSystem {
  /// Ascending.
  std::vector<double> values;
  /// vectors[k] pairs with values[k]; orthonormal. The largest-magnitude
  /// component of each vector is positive (lowest index on ties).
  std::vector<QVector> vectors;
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver. Throws ConvergenceError past max_sweeps.
EigenSystem sym_eigen(const SymMatrix& m, const JacobiOptions& opts = {});
/// Eigenvalues only (ascending); skips eigenvector accumulation.
std::vector<double> sym_eigenvalues(const SymMatrix& m, const JacobiOptions& opts = {});
double min_eigenvalue(const SymMatrix& m, const JacobiOptions& opts = {});
double max_eigenvalue(const SymMatrix& m, const JacobiOptions& opts = {});

}  // namespace bewit
