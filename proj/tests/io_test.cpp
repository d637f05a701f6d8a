#include <doctest.h>

#include "ado/io.hpp"

using namespace ado;

TEST_CASE("algebra round trip") {
  const Params p{{"alpha", Scalar(0, 1)}};
  const LieAlgebra g = instantiate("g8", p);
  const auto doc = io::to_json(g, p);
  CHECK(doc["kind"] == "algebra");
  CHECK(doc["params"]["alpha"] == "i");
  const LieAlgebra back = io::algebra_from_json(io::parse(doc.dump()));
  CHECK(same_structure(g, back, {0.0}));
  CHECK(io::to_json(back, p) == doc);
}

TEST_CASE("representation, lsa and affine round trips") {
  const Representation rho = minimal_representation("g2", {{"alpha", Scalar(1)}, {"beta", Scalar(0)}});
  const auto doc = io::to_json(rho);
  CHECK(io::to_json(io::representation_from_json(io::parse(doc.dump()))) == doc);

  const LeftSymmetricAlgebra a = minimal_lsa("n3");
  const auto lsa_doc = io::to_json(a);
  CHECK(same_products(io::lsa_from_json(lsa_doc), a, {0.0}));
  CHECK(io::to_json(io::lsa_from_json(lsa_doc)) == lsa_doc);

  const AffineRep phi = construct_etale(minimal_representation("n3"));
  const auto aff = io::to_json(phi);
  const AffineRep back = io::affine_from_json(io::parse(aff.dump()));
  CHECK(back.etale);
  CHECK(back.translation == phi.translation);
  CHECK(io::to_json(back) == aff);
}

TEST_CASE("approximate scalars survive serialization") {
  const Scalar z = Scalar::approx(0.1, -1.0 / 3.0);
  const Scalar back = io::scalar_from_json(io::scalar_to_json(z));
  CHECK_FALSE(back.is_exact());
  CHECK(back.equals(z, {1e-15}));
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(io::parse("{\"kind\": \"algebra\", "), ParseError);
  CHECK_THROWS_AS(io::algebra_from_json(io::parse(R"({"kind":"lsa","dim":2,"products":[]})")), ParseError);
  CHECK_THROWS_AS(io::algebra_from_json(io::parse(R"({"kind":"algebra","dim":2,"brackets":[{"i":1,"j":3,"value":["0","1"]}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::algebra_from_json(io::parse(R"({"kind":"algebra","dim":2,"brackets":[{"i":1,"j":2,"value":[0.5,"1"]}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::lsa_from_json(io::parse(R"({"kind":"lsa","dim":2})")), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("certificate documents") {
  CertifyOptions opts;
  opts.run_search = false;
  const auto cert = mu_certify(instantiate("n4"), minimal_representation("n4"), opts);
  const auto doc = io::to_json(cert);
  CHECK(doc["mu"] == 4);
  CHECK(doc["grade"] == "proven");
  CHECK(doc["lower_rule"] == "filiform");
}
