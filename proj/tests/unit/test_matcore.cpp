#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bewit/matcore.hpp"

using namespace bewit;

TEST_CASE("symmetric mutators keep both triangles") {
  SymMatrix m(3);
  m.set(0, 2, 1.5);
  m.add(2, 0, 0.5);
  CHECK(m(0, 2) == 2.0);
  CHECK(m(2, 0) == 2.0);
  m.add_outer(2.0, QVector{1.0, 0.0, 1.0});
  CHECK(m(0, 0) == 2.0);
  CHECK(m(0, 2) == 4.0);
  CHECK(m.trace() == 4.0);
  CHECK_THROWS_AS(SymMatrix::from_row_major(2, {1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("kron follows the slow-first index convention") {
  const QVector v = kron(QVector{1.0, 2.0}, QVector{3.0, 5.0, 7.0});
  REQUIRE(v.size() == 6);
  CHECK(v[0] == 3.0);
  CHECK(v[2] == 7.0);
  CHECK(v[3] == 6.0);
  CHECK(v[5] == 14.0);
}

TEST_CASE("partial transpose and swap on a rank-one operator") {
  const std::size_t d = 3;
  QVector v(d * d, 0.0);
  v[0 * d + 1] = 1.0;
  v[1 * d + 0] = -1.0;
  SymMatrix m(d * d);
  m.add_outer(1.0, v);
  const SymMatrix pt = partial_transpose_first(m, d);
  CHECK(pt(0 * d + 0, 1 * d + 1) == doctest::Approx(-1.0));
  CHECK(pt(1 * d + 1, 0 * d + 0) == doctest::Approx(-1.0));
  CHECK(max_abs_diff(partial_transpose_first(pt, d), m) == 0.0);
  CHECK(max_abs_diff(swap_factors(m, d), m) == 0.0);
  CHECK_THROWS_AS(partial_transpose_first(m, 2), std::invalid_argument);
}

TEST_CASE("Jacobi eigensolver on a known spectrum") {
  const SymMatrix m = SymMatrix::from_row_major(3, {2, 1, 0, 1, 2, 1, 0, 1, 2});
  const EigenSystem es = sym_eigen(m);
  CHECK(es.values[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(es.values[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(es.values[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
  for (std::size_t k = 0; k < 3; ++k) {
    const QVector mv = m.apply(es.vectors[k]);
    for (std::size_t i = 0; i < 3; ++i) CHECK(mv[i] == doctest::Approx(es.values[k] * es.vectors[k][i]));
    CHECK(norm(es.vectors[k]) == doctest::Approx(1.0));
  }
  CHECK(min_eigenvalue(m) == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(max_eigenvalue(SymMatrix::identity(4)) == 1.0);
}

TEST_CASE("trace_product matches explicit sum") {
  const SymMatrix a = SymMatrix::from_row_major(2, {1, 2, 2, 3});
  const SymMatrix b = SymMatrix::from_row_major(2, {4, -1, -1, 5});
  CHECK(trace_product(a, b) == 4.0 - 2.0 - 2.0 + 15.0);
}
