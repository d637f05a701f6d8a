#include <doctest.h>

#include "ado/affine.hpp"
#include "ado/catalog.hpp"

using namespace ado;

TEST_CASE("etale construction for n3") {
  const AffineRep phi = construct_etale(minimal_representation("n3"));
  CHECK(phi.etale);
  CHECK(phi.translation.col(0) == coords(3, {{1, 2}, {3, 1}}));
  CHECK(phi.translation.col(1) == coords(3, {{1, 1}, {2, 1}}));
  CHECK(phi.translation.col(2) == coords(3, {{1, 2}}));
  CHECK(determinant(phi.translation) == Scalar(-2));
  CHECK(check_cocycle(phi).ok);

  const LeftSymmetricAlgebra a = induced_lsa(phi);
  CHECK(a.product(0, 0) == coords(3, {{1, 1}, {2, -1}, {3, Scalar::rational(1, 2)}}));
  CHECK(same_products(a, minimal_lsa("n3")));
}

TEST_CASE("perturbed translation breaks the cocycle on (1,2)") {
  AffineRep phi = construct_etale(minimal_representation("n3"));
  phi.translation(1, 0) += Scalar(1);
  const auto report = check_cocycle(phi);
  REQUIRE_FALSE(report.ok);
  CHECK(report.failures[0].i == 0);
  CHECK(report.failures[0].j == 1);
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(construct_etale(minimal_representation("r2_c")), PreconditionError);
  CHECK_THROWS_AS(construct_etale(adjoint_rep(instantiate("n3"))), PreconditionError);
  try {
    construct_etale(adjoint_rep(instantiate("r2")));
    FAIL("expected NotEtaleError");
  } catch (const NotEtaleError& e) {
    CHECK(e.rank() == 1);
  }
}

TEST_CASE("nonzero base point shifts the evaluation map") {
  AffineRep phi = construct_etale(minimal_representation("n3"));
  phi.base = coords(3, {{3, 1}});
  const Matrix ev = evaluation_matrix(phi);
  for (int i = 0; i < 3; ++i) CHECK(ev.col(i) == phi.translation.col(i) + phi.rho.image(i) * phi.base);
}
