#include <doctest.h>

#include "ado/catalog.hpp"

using namespace ado;

TEST_CASE("tabulated n3 representation is faithful") {
  const Representation rho = minimal_representation("n3");
  CHECK(check_homomorphism(rho).ok);
  CHECK(check_faithful(rho).ok);
  CHECK(rho.is_exact());
}

TEST_CASE("wrong image gives the residual on pair (1,2)") {
  const Representation good = minimal_representation("n3");
  auto images = good.images();
  images[2] = units(3, {{1, 3, 1}});
  const Representation rho(good.algebra(), images);
  const auto report = check_homomorphism(rho);
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].i == 0);
  CHECK(report.failures[0].j == 1);
  const Matrix e13 = units(3, {{1, 3, 1}});
  CHECK((report.failures[0].residual == e13 || report.failures[0].residual == Matrix(-e13)));
  CHECK_THROWS_AS(check_faithful(rho), PreconditionError);
}

TEST_CASE("adjoint kernel is the center") {
  const auto report = check_faithful(adjoint_rep(instantiate("n3")));
  CHECK_FALSE(report.ok);
  REQUIRE(report.kernel.cols() == 1);
  CHECK(report.kernel(0, 0) == Scalar(0));
  CHECK(report.kernel(1, 0) == Scalar(0));
  CHECK(report.kernel(2, 0) != Scalar(0));
  CHECK(check_faithful(adjoint_rep(instantiate("sl2"))).ok);
}

TEST_CASE("extension by the identity") {
  const Representation rho = minimal_representation("r2");
  const Representation ext = extend_with_identity(rho);
  CHECK(ext.algebra().dim() == 3);
  CHECK(same_structure(ext.algebra(), instantiate("r2_c")));
  CHECK(check_homomorphism(ext).ok);
  CHECK(check_faithful(ext).ok);
  // gl(1) already contains the identity.
  CHECK_THROWS_AS(extend_with_identity(minimal_representation("c1")), ConstructionError);
}

TEST_CASE("approximate images use the relative tolerance") {
  const Representation rho = to_approx(minimal_representation("n3"));
  CHECK_FALSE(rho.is_exact());
  CHECK(check_homomorphism(rho).ok);
  auto images = rho.images();
  images[2](0, 2) += Scalar::approx(1e-6);
  CHECK_FALSE(check_homomorphism(Representation(rho.algebra(), images)).ok);
  CHECK(check_homomorphism(Representation(rho.algebra(), images), {1e-4}).ok);
}
