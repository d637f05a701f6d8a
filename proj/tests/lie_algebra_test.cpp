#include <doctest.h>

#include "ado/catalog.hpp"

using namespace ado;

TEST_CASE("brackets are antisymmetric and bilinear") {
  const LieAlgebra g = instantiate("n3");
  CHECK(g.basis_bracket(0, 1) == coords(3, {{3, 1}}));
  CHECK(g.basis_bracket(1, 0) == coords(3, {{3, -1}}));
  CHECK(is_zero(Matrix(g.basis_bracket(2, 2))));
  const Vector x = coords(3, {{1, 2}, {2, 1}}), y = coords(3, {{2, 3}});
  CHECK(g.bracket(x, y) == coords(3, {{3, 6}}));
  CHECK(g.constant(0, 1, 2) == Scalar(1));
}

TEST_CASE("jacobi is enforced unless deferred") {
  const Vector e3 = coords(3, {{3, 1}});
  const Vector e1 = coords(3, {{1, 1}});
  // [e1,e2] = e3, [e1,e3] = e1 violates Jacobi on (e1, e2, e3).
  std::vector<LieAlgebra::Bracket> brackets = {{0, 1, e3}, {0, 2, e1}};
  CHECK_THROWS_AS(LieAlgebra("bad", 3, brackets), DomainError);
  const LieAlgebra deferred("bad", 3, brackets, JacobiPolicy::Defer);
  const auto report = jacobi_check(deferred);
  CHECK_FALSE(report.ok);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].i == 0);
  CHECK(report.failures[0].k == 2);
}

TEST_CASE("printed sl2 row fails jacobi with residual 2e3") {
  const auto report = jacobi_check(printed::sl2_as_printed());
  REQUIRE_FALSE(report.ok);
  bool found = false;
  for (const auto& f : report.failures) {
    if (f.i == 0 && f.j == 1 && f.k == 2) {
      found = true;
      const Vector r = f.residual;
      CHECK((r == coords(3, {{3, 2}}) || r == coords(3, {{3, -2}})));
    }
  }
  CHECK(found);
}

TEST_CASE("structure invariants") {
  auto n4 = invariants(instantiate("n4"));
  CHECK(n4.nilpotent);
  CHECK(n4.filiform);
  CHECK(n4.nilpotency_class == 3);
  CHECK(n4.center_dim == 1);

  auto h = invariants(instantiate("n3"));
  CHECK(h.two_step_one_dim_center);
  CHECK(h.derived_dim == 1);

  auto s = invariants(instantiate("sl2"));
  CHECK_FALSE(s.solvable);
  CHECK(s.center_dim == 0);
  CHECK(s.derived_dim == 3);

  auto c = invariants(instantiate("c3"));
  CHECK(c.abelian);
  CHECK(c.center_dim == 3);

  auto r2 = invariants(instantiate("r2"));
  CHECK(r2.solvable);
  CHECK_FALSE(r2.nilpotent);
  CHECK(r2.two_solvable);
}

TEST_CASE("direct sums and adjoint matrices") {
  const LieAlgebra g = direct_sum(instantiate("n3"), instantiate("c1"));
  CHECK(g.dim() == 4);
  CHECK(same_structure(g, instantiate("n3_c")));
  const auto ad = adjoint_matrices(instantiate("n3"));
  REQUIRE(ad.size() == 3);
  CHECK(ad[0](2, 1) == Scalar(1));
  CHECK(ad[1](2, 0) == Scalar(-1));
  CHECK(is_zero(ad[2]));
}

TEST_CASE("derivations") {
  const auto d = derivations(instantiate("n3"));
  CHECK(d.basis.size() == 6);
  CHECK(d.has_invertible);
  CHECK_FALSE(derivations(instantiate("sl2")).has_invertible);
}
