#include <doctest.h>

#include <set>

#include "ado/catalog.hpp"

using namespace ado;

TEST_CASE("family counts per dimension") {
  int by_dim[5] = {0, 0, 0, 0, 0};
  for (const auto& f : families()) ++by_dim[f.dim];
  CHECK(by_dim[1] == 1);
  CHECK(by_dim[2] == 2);
  CHECK(by_dim[3] == 6);
  CHECK(by_dim[4] == 16);
  CHECK_THROWS_AS(family("g9"), LookupError);
}

TEST_CASE("domain predicates") {
  CHECK_THROWS_WITH_AS(instantiate("r3lambda", {{"lambda", Scalar(0)}}), doctest::Contains("λ∈C*"), DomainError);
  CHECK_THROWS_AS(instantiate("r3lambda", {{"lambda", Scalar(2)}}), DomainError);
  CHECK_NOTHROW(instantiate("r3lambda", {{"lambda", Scalar(-1)}}));
  CHECK_NOTHROW(instantiate("r3lambda", {{"lambda", Scalar::rational(1, 2, 1, 2)}}));
  CHECK_THROWS_AS(instantiate("g2", {{"alpha", Scalar(0)}, {"beta", Scalar(1)}}), DomainError);
  CHECK_NOTHROW(instantiate("g2", {{"alpha", Scalar(0)}, {"beta", Scalar(0)}}));
  CHECK_THROWS_AS(instantiate("g8", {}), DomainError);
  CHECK_THROWS_AS(instantiate("n3", {{"alpha", Scalar(1)}}), DomainError);
  CHECK_THROWS_AS(instantiate("g3", {{"alpha", Scalar(0)}}), DomainError);
}

TEST_CASE("published minimal dimensions") {
  CHECK(published_mu("c1") == 1);
  CHECK(published_mu("c4") == 4);
  CHECK(published_mu("sl2") == 2);
  CHECK(published_mu("n4") == 4);
  CHECK(published_mu("g8", {{"alpha", Scalar(1)}}) == 3);
  CHECK(published_mu("g8", {{"alpha", Scalar::rational(1, 4)}}) == 4);
  CHECK(published_mu("g2", {{"alpha", Scalar(0)}, {"beta", Scalar(0)}}) == 4);
}

TEST_CASE("sampling is seeded and in-domain") {
  for (const auto& f : families()) {
    const auto a = sample_parameters(f.id, 5, 2024);
    const auto b = sample_parameters(f.id, 5, 2024);
    CHECK(a.size() == (f.params.empty() ? 1u : 5u));
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK_NOTHROW(check_domain(f, a[k]));
      for (const auto& [key, value] : a[k]) CHECK(b[k].at(key).equals(value, {0.0}));
    }
  }
}

TEST_CASE("auxiliary constants satisfy their equations") {
  for (const auto& p : sample_parameters("g2")) {
    const auto c = g2_constants(p.at("alpha"), p.at("beta"));
    const Scalar& b = c.b;
    CHECK(b * b * b - b * b + p.at("beta") * b - p.at("alpha") == Scalar(0));
    CHECK_FALSE(b.is_zero());
  }
  const auto c = g8_constants(Scalar(2));
  CHECK(c.x1 * c.x1 - c.x1 + Scalar(2) == Scalar(0));
  CHECK(c.x1 + c.x2 == Scalar(1));
  CHECK_THROWS_AS(g8_constants(Scalar::rational(1, 4)), DomainError);
}

TEST_CASE("table entries cover the special points") {
  const auto entries = table_entries();
  std::set<std::string> labels;
  for (const auto& e : entries) labels.insert(entry_label(e));
  CHECK(labels.count("g2(alpha=0,beta=0)") == 1);
  CHECK(labels.count("g8(alpha=1/4)") == 1);
  CHECK(labels.count("n3") == 1);
}

TEST_CASE("square artifacts exist exactly when the construction applies") {
  for (const auto& e : table_entries()) {
    const Family& f = family(e.id);
    const int mu = published_mu(e.id, e.params);
    if (!f.admits_lsa) {
      CHECK_FALSE(has_minimal_lsa(e.id, e.params));
      CHECK_FALSE(has_square_entry(e.id, e.params));
      CHECK_THROWS_AS(square_representation(e.id, e.params), LookupError);
      continue;
    }
    CHECK(has_minimal_lsa(e.id, e.params) == (mu == f.dim));
    CHECK(has_square_entry(e.id, e.params) == (mu < f.dim));
    CHECK(square_representation(e.id, e.params).dimension() == f.dim);
  }
}

TEST_CASE("printed g8 square representation needs the product reading") {
  const Scalar alpha(2);
  const Scalar x = g8_constants(alpha).x2;
  CHECK(check_homomorphism(printed::g8_square(alpha, x)).ok);
  CHECK_FALSE(check_homomorphism(printed::g8_square(alpha, Scalar(1))).ok);
}
