#include <doctest.h>

#include "ado/catalog.hpp"
#include "cramer.hpp"

using namespace ado;

TEST_CASE("cofactor determinant") {
  CHECK(oracle::laplace_det({{Scalar(2), Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}}) ==
        Scalar(-2));
}

TEST_CASE("induced products agree with the Cramer oracle on every catalog entry") {
  int compared = 0;
  for (const auto& e : table_entries()) {
    if (!family(e.id).admits_lsa) continue;
    const AffineRep phi = construct_etale(square_representation(e.id, e.params));
    const LeftSymmetricAlgebra a = induced_lsa(phi);
    const auto reference = oracle::induced_products(phi);
    const bool exact = phi.rho.is_exact();
    CAPTURE(entry_label(e));
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k) {
          const Scalar& got = a.constant(i, j, k);
          const Scalar& want = reference[i][j][k];
          CHECK(got.is_exact() == exact);
          CHECK(got.equals(want, exact ? Tolerance{0.0} : Tolerance{1e-9}));
        }
    ++compared;
  }
  CHECK(compared == 50);
}
