#include <doctest.h>

#include "ado/catalog.hpp"
#include "ado/lsa.hpp"

using namespace ado;

TEST_CASE("tabulated n3 products form a left-symmetric algebra") {
  const LeftSymmetricAlgebra a = minimal_lsa("n3");
  CHECK(check_left_symmetric(a).ok);
  CHECK(same_structure(sub_adjacent(a), instantiate("n3")));
  CHECK(check_homomorphism(left_regular_rep(a)).ok);
  CHECK(kernel_ideal(a).cols() == 0);
  CHECK_FALSE(has_nontrivial_translations(a));
}

TEST_CASE("left multiplication matrices") {
  LeftSymmetricAlgebra a(2);
  a.set_product(0, 0, coords(2, {{1, 2}}));
  a.set_product(0, 1, coords(2, {{2, 1}}));
  const Matrix l = a.left_matrix(0);
  CHECK(l(0, 0) == Scalar(2));
  CHECK(l(1, 1) == Scalar(1));
  CHECK(a.multiply(coords(2, {{1, 1}}), coords(2, {{1, 1}, {2, 1}})) == coords(2, {{1, 2}, {2, 1}}));
}

TEST_CASE("non left-symmetric products are rejected") {
  // e1 e1 = e2, e2 e1 = e1: (e1,e2,e1) associator asymmetry.
  LeftSymmetricAlgebra a(2);
  a.set_product(0, 0, coords(2, {{2, 1}}));
  a.set_product(1, 0, coords(2, {{1, 1}}));
  const auto report = check_left_symmetric(a);
  CHECK_FALSE(report.ok);
  CHECK_THROWS_AS(sub_adjacent(a), PreconditionError);
}

TEST_CASE("a trivial product has full kernel") {
  LeftSymmetricAlgebra zero(3);
  CHECK(kernel_ideal(zero).cols() == 3);
  CHECK(has_nontrivial_translations(zero));
  CHECK(sub_adjacent(zero).nonzero_brackets().empty());
}

TEST_CASE("associator is left-symmetric for a commutative associative algebra") {
  // C[t]/(t^3) with basis 1, t, t^2.
  LeftSymmetricAlgebra a(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) a.set_product(i, j, coords(3, {{i + j + 1, 1}}));
  CHECK(check_left_symmetric(a).ok);
  const Vector x = coords(3, {{2, 1}}), y = coords(3, {{1, 1}, {2, 3}}), z = coords(3, {{3, 5}});
  CHECK(is_zero(Matrix(associator(a, x, y, z))));
  CHECK(kernel_ideal(a).cols() == 0);
}
