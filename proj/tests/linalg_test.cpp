#include <doctest.h>

#include "ado/catalog.hpp"
#include "ado/linalg.hpp"

using namespace ado;

namespace {

Matrix n3_translation() {
  Matrix q(3, 3);
  q.col(0) = coords(3, {{1, 2}, {3, 1}});
  q.col(1) = coords(3, {{1, 1}, {2, 1}});
  q.col(2) = coords(3, {{1, 2}});
  return q;
}

}  // namespace

TEST_CASE("exact solve") {
  const Matrix q = n3_translation();
  const Vector b = coords(3, {{1, 2}, {2, -1}, {3, 1}});
  const Vector x = solve(q, b);
  CHECK(x(0) == Scalar(1));
  CHECK(x(1) == Scalar(-1));
  CHECK(x(2) == Scalar::rational(1, 2));
  CHECK(x(2).is_exact());
  CHECK(determinant(q) == Scalar(-2));
}

TEST_CASE("rank, nullspace and inverse") {
  Matrix a = units(3, {{1, 2, 1}, {2, 3, 1}});
  CHECK(rank(a) == 2);
  const Matrix k = nullspace(a);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero(Matrix(a * k)));

  const Matrix q = n3_translation();
  const Matrix qi = inverse(q);
  CHECK(is_zero(Matrix(q * qi - Matrix::Identity(3, 3))));
  CHECK_THROWS_AS(inverse(a), SingularError);
}

TEST_CASE("approximate rank uses a relative threshold") {
  Matrix a(2, 2);
  a << Scalar::approx(1e6), Scalar::approx(1.0), Scalar::approx(1e6), Scalar::approx(1.0 + 1e-12);
  CHECK(rank(a) == 1);
  CHECK(rank(a, {1e-20}) == 2);
}

TEST_CASE("stacked columns and commutators") {
  const Matrix a = unit_matrix(2, 0, 1), b = unit_matrix(2, 1, 0);
  const Matrix c = commutator(a, b);
  CHECK(c(0, 0) == Scalar(1));
  CHECK(c(1, 1) == Scalar(-1));
  const Matrix s = stack_columns({a, b});
  CHECK(s.rows() == 4);
  CHECK(s.cols() == 2);
  CHECK(s(2, 0) == Scalar(1));
  CHECK(s(1, 1) == Scalar(1));
  CHECK_THROWS_AS(commutator(Matrix(unit_matrix(2, 0, 0)), Matrix(unit_matrix(3, 0, 0))), DimensionError);
}
