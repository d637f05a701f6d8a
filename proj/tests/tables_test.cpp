#include <doctest.h>

#include "ado/tables.hpp"

using namespace ado;

TEST_CASE("vector descriptions") {
  CHECK(describe(coords(3, {{3, 2}})) == "2e3");
  CHECK(describe(coords(3, {{1, 1}, {2, -1}, {3, Scalar::rational(1, 2)}})) == "e1 + -e2 + 1/2e3");
  CHECK(describe(coords(2, {{2, Scalar(1, 1)}})) == "(1+i)e2");
  CHECK(describe(Vector::Zero(2)) == "0");
}

TEST_CASE("errata list") {
  const auto errata = collect_errata();
  CHECK(errata.size() == 16);
  REQUIRE_FALSE(errata.empty());
  CHECK(errata.front().subject == "sl2");
  CHECK(errata.front().recomputed.find("2e3 on (e1,e2,e3)") != std::string::npos);
  int products = 0;
  for (const auto& e : errata)
    if (e.printed.rfind("e1*e1", 0) == 0) ++products;
  CHECK(products == 5);
}

TEST_CASE("product diffs name both values") {
  LeftSymmetricAlgebra a(2), b(2);
  a.set_product(0, 0, coords(2, {{2, 1}}));
  const auto diff = diff_products("somewhere", "x", a, b);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].recomputed.find("e2") != std::string::npos);
  CHECK(diff_products("somewhere", "x", a, a).empty());
}

TEST_CASE("pipeline without search") {
  TablesOptions opts;
  opts.run_search = false;
  const auto report = check_tables(opts);
  CHECK(report.ok());
  CHECK(report.checks.size() > 600);
  const auto doc = to_json(report, "fixed");
  CHECK(doc["generated_at"] == "fixed");
  CHECK(to_json(check_tables(opts), "fixed").dump() == doc.dump());
}
