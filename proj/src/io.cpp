#include "ado/io.hpp"

#include <fstream>
#include <sstream>

namespace ado::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

void expect_kind(const json& j, const char* kind) {
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw ParseError(std::string("expected a document of kind \"") + kind + "\"");
  }
}

int index_field(const json& j, const char* key, int n) {
  const int v = int_field(j, key);
  if (v < 1 || v > n) throw ParseError(std::string("index \"") + key + "\" out of range 1.." + std::to_string(n));
  return v - 1;
}

}  // namespace

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalars must be strings in the scalar grammar");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("expected a list of " + std::to_string(n) + " scalars");
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = scalar_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

Matrix matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) m.row(r) = vector_from_json(j[static_cast<std::size_t>(r)], cols).transpose();
  return m;
}

json params_to_json(const Params& p) {
  json out = json::object();
  for (const auto& [k, v] : p) out[k] = scalar_to_json(v);
  return out;
}

Params params_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("parameters must be an object");
  Params p;
  for (const auto& [k, v] : j.items()) p[k] = scalar_from_json(v);
  return p;
}

json to_json(const LieAlgebra& g, const Params& params) {
  json brackets = json::array();
  for (const auto& b : g.nonzero_brackets()) {
    brackets.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"value", vector_to_json(b.value)}});
  }
  json out = {{"kind", "algebra"}, {"name", g.name()}, {"dim", g.dim()}};
  if (!params.empty()) out["params"] = params_to_json(params);
  out["brackets"] = std::move(brackets);
  return out;
}

LieAlgebra algebra_from_json(const json& j, JacobiPolicy policy) {
  expect_kind(j, "algebra");
  const int n = int_field(j, "dim");
  if (n < 1) throw ParseError("dimension must be positive");
  const json& list = field(j, "brackets");
  if (!list.is_array()) throw ParseError("\"brackets\" must be a list");
  std::vector<LieAlgebra::Bracket> brackets;
  for (const auto& b : list) {
    brackets.push_back({index_field(b, "i", n), index_field(b, "j", n), vector_from_json(field(b, "value"), n)});
  }
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return LieAlgebra(name, n, brackets, policy);
}

json to_json(const Representation& rho) {
  json images = json::array();
  for (const auto& img : rho.images()) images.push_back(matrix_to_json(img));
  return {{"kind", "representation"},
          {"algebra", to_json(rho.algebra())},
          {"dim", rho.dimension()},
          {"images", std::move(images)}};
}

Representation representation_from_json(const json& j) {
  expect_kind(j, "representation");
  LieAlgebra g = algebra_from_json(field(j, "algebra"));
  const int m = int_field(j, "dim");
  if (m < 1) throw ParseError("representation dimension must be positive");
  const json& list = field(j, "images");
  if (!list.is_array() || static_cast<int>(list.size()) != g.dim()) {
    throw ParseError("\"images\" must list one matrix per basis vector");
  }
  std::vector<Matrix> images;
  for (const auto& img : list) images.push_back(matrix_from_json(img, m, m));
  return Representation(std::move(g), std::move(images));
}

json to_json(const LeftSymmetricAlgebra& a) {
  json products = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Vector& v = a.product(i, j);
      if (is_zero(Matrix(v), Tolerance{0.0})) continue;
      products.push_back({{"i", i + 1}, {"j", j + 1}, {"value", vector_to_json(v)}});
    }
  return {{"kind", "lsa"}, {"name", a.name()}, {"dim", a.dim()}, {"products", std::move(products)}};
}

LeftSymmetricAlgebra lsa_from_json(const json& j) {
  expect_kind(j, "lsa");
  const int n = int_field(j, "dim");
  if (n < 1) throw ParseError("dimension must be positive");
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  LeftSymmetricAlgebra a(n, name);
  const json& list = field(j, "products");
  if (!list.is_array()) throw ParseError("\"products\" must be a list");
  for (const auto& p : list) {
    const int i = index_field(p, "i", n), k = index_field(p, "j", n);
    a.set_product(i, k, a.product(i, k) + vector_from_json(field(p, "value"), n));
  }
  return a;
}

json to_json(const AffineRep& phi) {
  json translation = json::array();
  for (Index c = 0; c < phi.translation.cols(); ++c) translation.push_back(vector_to_json(phi.translation.col(c)));
  return {{"kind", "affine"},
          {"representation", to_json(phi.rho)},
          {"translation", std::move(translation)},
          {"base", vector_to_json(phi.base)},
          {"etale", phi.etale}};
}

AffineRep affine_from_json(const json& j) {
  expect_kind(j, "affine");
  AffineRep phi;
  phi.rho = representation_from_json(field(j, "representation"));
  const int n = phi.rho.algebra().dim(), m = phi.rho.dimension();
  const json& list = field(j, "translation");
  if (!list.is_array() || static_cast<int>(list.size()) != n) {
    throw ParseError("\"translation\" must list one vector per basis vector");
  }
  phi.translation = Matrix(m, n);
  for (int c = 0; c < n; ++c) phi.translation.col(c) = vector_from_json(list[static_cast<std::size_t>(c)], m);
  phi.base = j.contains("base") ? vector_from_json(j["base"], m) : Vector(Vector::Zero(m));
  phi.etale = j.contains("etale") && j["etale"].is_boolean() && j["etale"].get<bool>();
  return phi;
}

json to_json(const SearchReport& report) {
  json out = {{"target_dim", report.target_dim},
              {"restarts", report.restarts},
              {"seed", report.seed},
              {"verdict", report.found ? "found" : "infeasible-evidence"},
              {"best_residual", report.best_residual()},
              {"residuals", report.residuals}};
  if (report.witness) out["witness"] = to_json(*report.witness);
  return out;
}

json to_json(const MuCertificate& cert) {
  json out = {{"kind", "certificate"},
              {"algebra", cert.algebra},
              {"lower", cert.lower},
              {"lower_rule", to_string(cert.lower_rule)},
              {"upper", cert.upper},
              {"upper_rule", to_string(cert.upper_rule)},
              {"grade", to_string(cert.grade)},
              {"settled", cert.settled()},
              {"notes", cert.notes}};
  if (cert.settled()) out["mu"] = cert.lower;
  if (cert.witness) out["witness"] = to_json(*cert.witness);
  json searches = json::array();
  for (const auto& s : cert.searches) searches.push_back(to_json(s));
  out["searches"] = std::move(searches);
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

}  // namespace ado::io
