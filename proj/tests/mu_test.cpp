#include <doctest.h>

#include "ado/catalog.hpp"
#include "ado/mu.hpp"

using namespace ado;

namespace {

LieAlgebra heisenberg5() {
  const auto e5 = coords(5, {{5, 1}});
  return LieAlgebra("h5", 5, {{0, 1, e5}, {2, 3, e5}});
}

}  // namespace

TEST_CASE("abelian formula") {
  CHECK(bound_abelian(1) == 1);
  CHECK(bound_abelian(2) == 2);
  CHECK(bound_abelian(3) == 3);
  CHECK(bound_abelian(4) == 4);
  CHECK(bound_abelian(5) == 4);
  CHECK(bound_abelian(10) == 6);
  CHECK(bound_abelian(instantiate("c3")) == 3);
  CHECK_THROWS_AS(bound_abelian(instantiate("n3")), RuleNotApplicable);
}

TEST_CASE("structural rules") {
  CHECK(bound_two_step(heisenberg5()) == 4);
  CHECK(bound_two_step(instantiate("n3")) == 3);
  CHECK_THROWS_AS(bound_two_step(instantiate("n4")), RuleNotApplicable);
  CHECK(bound_filiform(instantiate("n4")) == 4);
  CHECK(bound_two_solvable(instantiate("r3")) == 3);
  CHECK(bound_dimension_count(instantiate("c4")) == 2);
  CHECK(bound_dimension_count(heisenberg5()) == 3);
  CHECK_FALSE(bound_two_dim_fingerprint(instantiate("r2")).has_value());
  CHECK_FALSE(bound_two_dim_fingerprint(instantiate("sl2_c")).has_value());
  CHECK(bound_two_dim_fingerprint(instantiate("n3")) == 3);
  CHECK(bound_two_dim_fingerprint(instantiate("g6")) == 3);
}

TEST_CASE("coarse bounds") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  const auto b = coarse_bounds(4, 3);
  REQUIRE(b.nilpotent);
  CHECK(*b.nilpotent == 14);
  CHECK(b.solvable == 1 + 4 + 256);
  CHECK(coarse_bounds(3).solvable == 31);
  CHECK(coarse_bounds(1).solvable == 3);
  CHECK_FALSE(coarse_bounds(4).nilpotent);
}

TEST_CASE("certificates without search") {
  CertifyOptions opts;
  opts.run_search = false;
  const auto n3 = mu_certify(instantiate("n3"), minimal_representation("n3"), opts);
  CHECK(n3.settled());
  CHECK(n3.lower == 3);
  CHECK(n3.grade == Grade::Proven);

  const auto sl2 = mu_certify(instantiate("sl2"), minimal_representation("sl2"), opts);
  CHECK(sl2.lower == 2);
  CHECK(sl2.upper == 2);

  const auto open = mu_certify(instantiate("g8", {{"alpha", Scalar::rational(1, 4)}}),
                               minimal_representation("g8", {{"alpha", Scalar::rational(1, 4)}}), opts);
  CHECK(open.lower == 3);
  CHECK(open.upper == 4);
  CHECK(open.grade == Grade::Open);
  CHECK_FALSE(open.settled());

  // A centerless algebra is bounded by its adjoint even without a witness.
  const auto adj = mu_certify(instantiate("r2_r2"), std::nullopt, opts);
  CHECK(adj.upper <= 4);
  CHECK(adj.upper_rule == BoundRule::Adjoint);
  CHECK_THROWS_AS(mu_certify(instantiate("r2_c"), std::nullopt, opts), PreconditionError);
  CHECK_THROWS_AS(mu_certify(instantiate("n3"), minimal_representation("r3"), opts), PreconditionError);
}

TEST_CASE("search finds a faithful representation when one exists") {
  SearchOptions opts;
  opts.restarts = 10;
  const auto report = search_faithful(instantiate("r2_c2"), 3, opts);
  CHECK(report.found);
  REQUIRE(report.witness);
  CHECK(check_faithful(*report.witness, {1e-6}).ok);
  CHECK(report.best_residual() < 1e-10);
  CHECK_THROWS_AS(search_faithful(instantiate("sl2"), 2, opts), PreconditionError);
  CHECK_THROWS_AS(search_faithful(instantiate("n3"), 0, opts), DomainError);
}

TEST_CASE("rule names") {
  CHECK(to_string(BoundRule::AbelianFormula) == "abelian-formula");
  CHECK(to_string(Grade::Evidence) == "evidence");
}
