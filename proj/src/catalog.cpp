#include "ado/catalog.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ado {

namespace {

Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }
const Scalar kI = Scalar::imaginary_unit();

struct Prod {
  int i;
  int j;
  std::vector<Coord> v;
};

Vector coords_of(int n, const std::vector<Coord>& terms) {
  Vector v = Vector::Zero(n);
  for (const auto& t : terms) {
    if (t.k < 1 || t.k > n) throw DimensionError("coordinate index out of range");
    v(t.k - 1) += t.c;
  }
  return v;
}

struct Br {
  int i;
  int j;
  std::vector<Coord> v;
};

LieAlgebra algebra(const std::string& name, int n, const std::vector<Br>& brackets,
                   JacobiPolicy policy = JacobiPolicy::Enforce) {
  std::vector<LieAlgebra::Bracket> out;
  for (const auto& b : brackets) out.push_back({b.i - 1, b.j - 1, coords_of(n, b.v)});
  return LieAlgebra(name, n, out, policy);
}

LeftSymmetricAlgebra products(const std::string& name, int n, const std::vector<Prod>& ps) {
  LeftSymmetricAlgebra a(n, name);
  for (const auto& p : ps) a.set_product(p.i - 1, p.j - 1, a.product(p.i - 1, p.j - 1) + coords_of(n, p.v));
  return a;
}

Matrix identity(int m) { return Matrix::Identity(m, m); }

Matrix diag_unit(int m, int i) { return unit_matrix(m, i - 1, i - 1); }

LeftSymmetricAlgebra diagonal_lsa(const std::string& name, int n) {
  std::vector<Prod> ps;
  for (int i = 1; i <= n; ++i) ps.push_back({i, i, {{i, 1}}});
  return products(name, n, ps);
}

Representation diagonal_rep(const LieAlgebra& g) {
  std::vector<Matrix> images;
  for (int i = 1; i <= g.dim(); ++i) images.push_back(diag_unit(g.dim(), i));
  return Representation(g, std::move(images));
}

const Scalar& param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing parameter " + key);
  return it->second;
}

bool is_quarter(const Scalar& alpha) { return alpha.equals(q(1, 4)); }

/// Exact value of an approximate root when the defining relation admits one.
Scalar refine(const Scalar& z, bool exact_inputs, const std::function<bool(const Scalar&)>& holds) {
  if (!exact_inputs) return z;
  auto exact = recover_exact(z, holds);
  return exact ? *exact : z;
}

// --- algebras ---------------------------------------------------------------

LieAlgebra make_r2(const std::string& name, int n) { return algebra(name, n, {{1, 2, {{1, 1}}}}); }
LieAlgebra make_n3(const std::string& name, int n) { return algebra(name, n, {{1, 2, {{3, 1}}}}); }
LieAlgebra make_r3(const std::string& name, int n) {
  return algebra(name, n, {{1, 2, {{2, 1}}}, {1, 3, {{2, 1}, {3, 1}}}});
}
LieAlgebra make_r3lambda(const std::string& name, int n, const Scalar& lambda) {
  return algebra(name, n, {{1, 2, {{2, 1}}}, {1, 3, {{3, lambda}}}});
}
LieAlgebra make_sl2(const std::string& name, int n) {
  return algebra(name, n, {{1, 2, {{3, 1}}}, {1, 3, {{1, -2}}}, {2, 3, {{2, 2}}}});
}

LieAlgebra build_algebra(const std::string& id, const Params& p) {
  if (id == "c1") return LieAlgebra("C", 1);
  if (id == "c2") return LieAlgebra("C^2", 2);
  if (id == "r2") return make_r2("r2", 2);
  if (id == "c3") return LieAlgebra("C^3", 3);
  if (id == "n3") return make_n3("n3", 3);
  if (id == "r2_c") return make_r2("r2+C", 3);
  if (id == "r3") return make_r3("r3", 3);
  if (id == "r3lambda") return make_r3lambda("r3,lambda", 3, param(p, "lambda"));
  if (id == "sl2") return make_sl2("sl2", 3);
  if (id == "c4") return LieAlgebra("C^4", 4);
  if (id == "n3_c") return make_n3("n3+C", 4);
  if (id == "r2_c2") return make_r2("r2+C^2", 4);
  if (id == "r3_c") return make_r3("r3+C", 4);
  if (id == "r3lambda_c") return make_r3lambda("r3,lambda+C", 4, param(p, "lambda"));
  if (id == "r2_r2") return algebra("r2+r2", 4, {{1, 2, {{1, 1}}}, {3, 4, {{3, 1}}}});
  if (id == "sl2_c") return make_sl2("sl2+C", 4);
  if (id == "n4") return algebra("n4", 4, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}});
  if (id == "g1") {
    return algebra("g1", 4, {{1, 2, {{2, 1}}}, {1, 3, {{3, 1}}}, {1, 4, {{4, param(p, "alpha")}}}});
  }
  if (id == "g2") {
    const Scalar& a = param(p, "alpha");
    const Scalar& b = param(p, "beta");
    return algebra("g2", 4, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}, {1, 4, {{2, a}, {3, -b}, {4, 1}}}});
  }
  if (id == "g3") {
    const Scalar& a = param(p, "alpha");
    return algebra("g3", 4, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}, {1, 4, {{2, a}, {3, a}}}});
  }
  if (id == "g4") return algebra("g4", 4, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}, {1, 4, {{2, 1}}}});
  if (id == "g5") {
    return algebra("g5", 4, {{1, 2, {{2, q(1, 3)}, {3, 1}}}, {1, 3, {{3, q(1, 3)}}}, {1, 4, {{4, q(1, 3)}}}});
  }
  if (id == "g6") {
    return algebra("g6", 4, {{1, 2, {{2, 1}}}, {1, 3, {{3, 1}}}, {1, 4, {{4, 2}}}, {2, 3, {{4, 1}}}});
  }
  if (id == "g7") return algebra("g7", 4, {{1, 2, {{3, 1}}}, {1, 3, {{2, 1}}}, {2, 3, {{4, 1}}}});
  if (id == "g8") {
    const Scalar& a = param(p, "alpha");
    return algebra("g8", 4, {{1, 2, {{3, 1}}}, {1, 3, {{2, -a}, {3, 1}}}, {1, 4, {{4, 1}}}, {2, 3, {{4, 1}}}});
  }
  throw LookupError("unknown family " + id);
}

// --- representations ----------------------------------------------------------

Representation rep(const LieAlgebra& g, std::vector<Matrix> images) { return Representation(g, std::move(images)); }

/// Shared shape of the g2 / g3 rows.
Representation triangular_rep(const LieAlgebra& g, const TriangularConstants& k) {
  const auto& [b, x, y] = k;
  return rep(g, {units(4, {{1, 1, -b}, {3, 3, -x}, {4, 4, -y}, {3, 2, 1}, {4, 3, 1}}), units(4, {{2, 1, 1}}),
                 units(4, {{2, 1, b}, {3, 1, 1}}), units(4, {{2, 1, b * b}, {3, 1, 2 * b - x}, {4, 1, 1}})});
}

Scalar sqrt3() { return Scalar::approx(std::sqrt(3.0)); }
Scalar half_sqrt2() { return Scalar::approx(std::sqrt(2.0) / 2.0); }

Representation build_minimal_rep(const std::string& id, const Params& p) {
  const LieAlgebra g = build_algebra(id, p);
  if (id == "c1" || id == "c2" || id == "c3" || id == "c4") return diagonal_rep(g);
  if (id == "r2") return rep(g, {units(2, {{1, 2, 1}}), units(2, {{2, 2, 1}})});
  if (id == "n3") {
    return rep(g, {identity(3) + units(3, {{1, 2, 1}, {2, 3, -1}}), units(3, {{1, 2, 1}, {2, 3, 1}}),
                   units(3, {{1, 3, 2}})});
  }
  if (id == "r2_c") return rep(g, {units(2, {{1, 2, 1}}), units(2, {{2, 2, 1}}), identity(2)});
  if (id == "r3") return rep(g, {units(3, {{1, 2, 1}, {3, 3, -1}}), units(3, {{1, 3, 1}}), units(3, {{2, 3, 1}})});
  if (id == "r3lambda") {
    const Scalar& l = param(p, "lambda");
    return rep(g, {units(3, {{1, 1, -1}, {3, 3, l - 1}}), units(3, {{2, 1, 1}}), units(3, {{3, 1, 1}})});
  }
  if (id == "sl2") return rep(g, {units(2, {{1, 2, 1}}), units(2, {{2, 1, 1}}), units(2, {{1, 1, 1}, {2, 2, -1}})});
  if (id == "n3_c") return rep(g, {units(3, {{1, 2, 1}}), units(3, {{2, 3, 1}}), units(3, {{1, 3, 1}}), identity(3)});
  if (id == "r2_c2") {
    return rep(g, {units(3, {{1, 3, 1}}), units(3, {{3, 3, 1}}), units(3, {{2, 2, 1}}), identity(3)});
  }
  if (id == "r3_c") {
    return rep(g, {units(3, {{1, 2, 1}, {3, 3, -1}}), units(3, {{1, 3, 1}}), units(3, {{2, 3, 1}}), identity(3)});
  }
  if (id == "r3lambda_c") {
    const Scalar& l = param(p, "lambda");
    return rep(g, {units(3, {{1, 1, 1}, {3, 3, 1 - l}}), units(3, {{1, 2, 1}}), units(3, {{1, 3, 1}}), identity(3)});
  }
  if (id == "r2_r2") {
    return rep(g, {units(3, {{1, 3, 1}}), units(3, {{3, 3, 1}}), units(3, {{1, 2, 1}}), units(3, {{2, 2, 1}})});
  }
  if (id == "sl2_c") {
    return rep(g, {units(2, {{1, 2, 1}}), units(2, {{2, 1, 1}}), units(2, {{1, 1, 1}, {2, 2, -1}}), identity(2)});
  }
  if (id == "n4") {
    return rep(g, {identity(4) + units(4, {{1, 2, 1}, {2, 3, 1}}), units(4, {{3, 4, 1}}), units(4, {{2, 4, 1}}),
                   units(4, {{1, 4, 1}})});
  }
  if (id == "g1") {
    const Scalar& a = param(p, "alpha");
    return rep(g, {units(4, {{1, 1, -1}, {4, 4, a - 1}}), units(4, {{2, 1, 1}}), units(4, {{3, 1, 1}}),
                   units(4, {{4, 1, 1}})});
  }
  if (id == "g2") return triangular_rep(g, g2_constants(param(p, "alpha"), param(p, "beta")));
  if (id == "g3") return triangular_rep(g, g3_constants(param(p, "alpha")));
  if (id == "g4") {
    const Scalar s = sqrt3();
    return rep(g, {units(4, {{1, 1, -1}, {3, 2, 1}, {3, 3, -(3 + s * kI) / 2}, {4, 3, 1}, {4, 4, -(3 - s * kI) / 2}}),
                   units(4, {{2, 1, 1}}), units(4, {{2, 1, 1}, {3, 1, 1}}),
                   units(4, {{2, 1, 1}, {3, 1, (1 - s * kI) / 2}, {4, 1, 1}})});
  }
  if (id == "g5") {
    return rep(g, {units(4, {{4, 4, q(-1, 3)}, {2, 3, 1}}), units(4, {{3, 4, 1}}), units(4, {{2, 4, 1}}),
                   units(4, {{1, 4, 1}})});
  }
  if (id == "g6" || id == "g7") {
    const Scalar h = half_sqrt2();
    const Scalar last = id == "g6" ? Scalar(-1) : Scalar(1);
    return rep(g, {units(3, {{1, 1, 1}, {3, 3, last}}), units(3, {{1, 2, h}, {2, 3, -h}}),
                   units(3, {{1, 2, h}, {2, 3, h}}), units(3, {{1, 3, 1}})});
  }
  if (id == "g8") {
    const Scalar& a = param(p, "alpha");
    if (is_quarter(a)) {
      return rep(g, {units(4, {{1, 1, q(1, 2)}, {4, 4, q(-1, 2)}, {2, 3, 1}}),
                     units(4, {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}}),
                     units(4, {{1, 2, q(1, 2)}, {1, 3, q(-1, 2)}, {2, 4, q(3, 2)}, {3, 4, q(1, 2)}}),
                     units(4, {{1, 4, 2}})});
    }
    const auto [x1, x2, c] = g8_constants(a);
    // The listed image of e4 names e_{14}, which does not exist in gl(3);
    // e_{13} is the reading under which the homomorphism check passes.
    return rep(g, {units(3, {{1, 1, x1}, {3, 3, -x2}}), units(3, {{1, 2, c}, {2, 3, c}}),
                   units(3, {{1, 2, c * x1}, {2, 3, c * x2}}), units(3, {{1, 3, 1}})});
  }
  throw LookupError("unknown family " + id);
}

// --- products -----------------------------------------------------------------

std::vector<Prod> r3_products() {
  return {{1, 1, {{1, -1}, {2, 1}}}, {1, 3, {{2, 1}}}, {2, 1, {{2, -1}}}, {3, 1, {{3, -1}}}};
}
std::vector<Prod> r3lambda_products(const Scalar& l) {
  return {{1, 1, {{1, -1}, {3, l * l - l}}}, {1, 3, {{3, l - 1}}}, {2, 1, {{2, -1}}}, {3, 1, {{3, -1}}}};
}
std::vector<Prod> n3_products() {
  return {{1, 1, {{1, 1}, {2, -1}, {3, q(1, 2)}}}, {1, 2, {{2, 1}, {3, q(1, 2)}}}, {1, 3, {{3, 1}}},
          {2, 1, {{2, 1}, {3, q(-1, 2)}}},          {2, 2, {{3, q(1, 2)}}},         {3, 1, {{3, 1}}}};
}
std::vector<Prod> with(std::vector<Prod> ps, std::vector<Prod> more) {
  ps.insert(ps.end(), more.begin(), more.end());
  return ps;
}

std::optional<LeftSymmetricAlgebra> build_minimal_lsa(const std::string& id, const Params& p) {
  if (id == "c1") return diagonal_lsa("C", 1);
  if (id == "c2") return diagonal_lsa("C^2", 2);
  if (id == "c3") return diagonal_lsa("C^3", 3);
  if (id == "c4") return diagonal_lsa("C^4", 4);
  if (id == "r2") return products("r2", 2, {{1, 2, {{1, 1}}}, {2, 2, {{2, 1}}}});
  if (id == "n3") return products("n3", 3, n3_products());
  if (id == "r3") return products("r3", 3, r3_products());
  if (id == "r3lambda") return products("r3,lambda", 3, r3lambda_products(param(p, "lambda")));
  if (id == "n4") {
    return products("n4", 4,
                    {{1, 1, {{1, 1}, {3, 1}, {4, 2}}},
                     {1, 2, {{2, 1}, {3, 1}}},
                     {1, 3, {{3, 1}, {4, 1}}},
                     {1, 4, {{4, 1}}},
                     {2, 1, {{2, 1}}},
                     {3, 1, {{3, 1}}},
                     {4, 1, {{4, 1}}}});
  }
  if (id == "g1") {
    const Scalar& a = param(p, "alpha");
    return products("g1", 4,
                    {{1, 1, {{1, -1}, {4, a * a - a}}},
                     {1, 4, {{4, a - 1}}},
                     {2, 1, {{2, -1}}},
                     {3, 1, {{3, -1}}},
                     {4, 1, {{4, -1}}}});
  }
  if (id == "g2") {
    const Scalar& a = param(p, "alpha");
    const Scalar& be = param(p, "beta");
    const auto [b, x, y] = g2_constants(a, be);
    const Scalar b2 = b * b, b3 = b2 * b;
    return products("g2", 4,
                    {{1, 1,
                      {{1, -b},
                       {2, 2 * b3 * y - b2 * y - 2 * b3 + b2 + b * x * y - b * x * y * y},
                       {3, 4 * b2 - 3 * b + 2 * b2 * y - b * x * y - x * y + x * y * y - 2 * b * y * y},
                       {4, 2 - 2 * b - b * y + y * y}}},
                     {1, 2, {{3, 1}, {2, -b}}},
                     {1, 3, {{4, 1}, {3, -b}}},
                     {1, 4, {{2, a}, {3, -be}, {4, 1 - b}}},
                     {2, 1, {{2, -b}}},
                     {3, 1, {{3, -b}}},
                     {4, 1, {{4, -b}}}});
  }
  if (id == "g3") {
    const Scalar& a = param(p, "alpha");
    const auto [b, x, y] = g3_constants(a);
    const Scalar b2 = b * b, b3 = b2 * b;
    return products("g3", 4,
                    {{1, 1,
                      {{1, -b},
                       {2, 2 * b3 * y - 2 * b3 + b * x * y - b * x * y * y},
                       {3, 4 * b2 - b - 4 * b2 * y + b * x * y - x * y + x * y * y},
                       {4, 1 - 2 * b - b * y + y * y}}},
                     {1, 2, {{3, 1}, {2, -b}}},
                     {1, 3, {{4, 1}, {3, -b}}},
                     {1, 4, {{4, -b}, {2, a}, {3, a}}},
                     {2, 1, {{2, -b}}},
                     {3, 1, {{3, -b}}},
                     {4, 1, {{4, -b}}}});
  }
  if (id == "g4") {
    const Scalar s = sqrt3();
    return products("g4", 4,
                    {{1, 1, {{1, -1}, {2, (-1 + s * kI) / 2}, {3, (3 + s * kI) / 2}, {4, -(1 + s * kI)}}},
                     {1, 2, {{3, 1}, {2, -1}}},
                     {1, 3, {{4, 1}, {3, -1}}},
                     {1, 4, {{2, 1}, {4, -1}}},
                     {2, 1, {{2, -1}}},
                     {3, 1, {{3, -1}}},
                     {4, 1, {{4, -1}}}});
  }
  if (id == "g5") {
    return products("g5", 4,
                    {{1, 1, {{1, q(-1, 3)}, {3, q(1, 3)}}},
                     {1, 2, {{3, 1}}},
                     {2, 1, {{2, q(-1, 3)}}},
                     {3, 1, {{3, q(-1, 3)}}},
                     {4, 1, {{4, q(-1, 3)}}}});
  }
  if (id == "g8" && is_quarter(param(p, "alpha"))) {
    return products("g8", 4,
                    {{1, 1, {{1, q(-1, 2)}, {2, q(-1, 4)}, {3, q(1, 2)}, {4, q(1, 2)}}},
                     {1, 2, {{2, q(-1, 2)}, {3, 1}, {4, 1}}},
                     {1, 3, {{2, q(-1, 4)}, {3, q(1, 2)}, {4, q(1, 4)}}},
                     {1, 4, {{4, q(1, 2)}}},
                     {2, 1, {{2, q(-1, 2)}, {4, 1}}},
                     {2, 2, {{4, 1}}},
                     {2, 3, {{4, 1}}},
                     {3, 1, {{3, q(-1, 2)}, {4, q(1, 4)}}},
                     {3, 3, {{4, q(1, 4)}}},
                     {4, 1, {{4, q(-1, 2)}}}});
  }
  return std::nullopt;
}

Representation g8_square_rep(const LieAlgebra& g, const Scalar& x, const Scalar& coeff24) {
  return rep(g, {units(4, {{2, 2, x - 1}, {3, 3, -x}, {4, 4, -1}}), units(4, {{1, 2, 1}, {2, 4, 1}, {3, 4, 1}}),
                 units(4, {{1, 2, 1 - x}, {2, 4, coeff24}, {3, 4, 1 - x}}), units(4, {{1, 4, 2 * x - 1}})});
}

std::optional<SquareEntry> build_square_entry(const std::string& id, const Params& p) {
  const auto e4 = [] { return Prod{4, 4, {{4, 1}}}; };
  if (id == "r2_c") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{rep(g, {units(3, {{1, 2, 1}}), units(3, {{2, 2, 1}}), units(3, {{3, 3, 1}})}),
                       products("r2+C", 3, {{1, 2, {{1, 1}}}, {2, 2, {{2, 1}}}, {3, 3, {{3, 1}}}})};
  }
  if (id == "n3_c") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{rep(g, {units(4, {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {1, 2, 1}, {2, 3, -1}}),
                               units(4, {{1, 2, 1}, {2, 3, 1}}), units(4, {{1, 3, 2}}), units(4, {{4, 4, 1}})}),
                       products("n3+C", 4, with(n3_products(), {e4()}))};
  }
  if (id == "r2_c2") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{
        rep(g, {units(4, {{1, 2, 1}}), units(4, {{2, 2, 1}}), units(4, {{3, 3, 1}}), units(4, {{4, 4, 1}})}),
        products("r2+C^2", 4, {{1, 2, {{1, 1}}}, {2, 2, {{2, 1}}}, {3, 3, {{3, 1}}}, e4()})};
  }
  if (id == "r3_c") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{rep(g, {units(4, {{1, 2, 1}, {3, 3, -1}}), units(4, {{1, 3, 1}}), units(4, {{2, 3, 1}}),
                               units(4, {{4, 4, 1}})}),
                       products("r3+C", 4, with(r3_products(), {e4()}))};
  }
  if (id == "r3lambda_c") {
    const Scalar& l = param(p, "lambda");
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{rep(g, {units(4, {{1, 1, -1}, {3, 3, l - 1}}), units(4, {{2, 1, 1}}), units(4, {{3, 1, 1}}),
                               units(4, {{4, 4, 1}})}),
                       products("r3,lambda+C", 4, with(r3lambda_products(l), {e4()}))};
  }
  if (id == "r2_r2") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{
        rep(g, {units(4, {{1, 2, 1}}), units(4, {{2, 2, 1}}), units(4, {{3, 4, 1}}), units(4, {{4, 4, 1}})}),
        products("r2+r2", 4, {{1, 2, {{1, 1}}}, {2, 2, {{2, 1}}}, {3, 4, {{3, 1}}}, e4()})};
  }
  if (id == "sl2_c") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{rep(g, {units(4, {{1, 2, 2}, {3, 4, q(1, 2)}}), units(4, {{2, 1, q(1, 2)}, {4, 3, 2}}),
                               units(4, {{1, 1, 1}, {2, 2, -1}, {3, 3, 1}, {4, 4, -1}}), identity(4)}),
                       products("sl2+C", 4,
                                {{1, 2, {{3, q(1, 2)}, {4, q(1, 2)}}},
                                 {1, 3, {{1, -1}}},
                                 {1, 4, {{1, 1}}},
                                 {2, 1, {{3, q(-1, 2)}, {4, q(1, 2)}}},
                                 {2, 3, {{2, 1}}},
                                 {2, 4, {{2, 1}}},
                                 {3, 1, {{1, 1}}},
                                 {3, 2, {{2, -1}}},
                                 {3, 3, {{4, 1}}},
                                 {3, 4, {{3, 1}}},
                                 {4, 1, {{1, 1}}},
                                 {4, 2, {{2, 1}}},
                                 {4, 3, {{3, 1}}},
                                 {4, 4, {{4, 1}}}})};
  }
  if (id == "g6") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{rep(g, {units(4, {{1, 1, 1}, {4, 4, -1}}), units(4, {{1, 2, 2}, {3, 4, 1}}),
                               units(4, {{1, 3, 1}, {2, 4, 1}}), units(4, {{1, 4, 1}})}),
                       products("g6", 4,
                                {{1, 1, {{4, 2}, {1, -1}}},
                                 {1, 2, {{4, 2}}},
                                 {1, 3, {{4, 1}}},
                                 {1, 4, {{4, 1}}},
                                 {2, 1, {{4, 2}, {2, -1}}},
                                 {2, 3, {{4, 2}}},
                                 {3, 1, {{4, 1}, {3, -1}}},
                                 {3, 2, {{4, 1}}},
                                 {4, 1, {{4, -1}}}})};
  }
  if (id == "g7") {
    const LieAlgebra g = build_algebra(id, p);
    return SquareEntry{rep(g, {units(4, {{1, 1, 1}, {3, 3, 2}, {4, 4, 1}}), units(4, {{1, 2, 1}, {2, 4, -1}, {3, 4, 1}}),
                               units(4, {{1, 2, 1}, {2, 4, 1}, {3, 4, 1}}), units(4, {{1, 4, 2}})}),
                       products("g7", 4,
                                {{1, 1, {{1, 1}, {2, 1}, {3, 1}, {4, -1}}},
                                 {1, 2, {{2, 1}, {3, 1}, {4, q(-1, 2)}}},
                                 {1, 3, {{2, 1}, {3, 1}, {4, q(-1, 2)}}},
                                 {1, 4, {{4, 1}}},
                                 {2, 1, {{2, 1}, {4, q(-1, 2)}}},
                                 {2, 2, {{4, q(-1, 2)}}},
                                 {2, 3, {{4, q(1, 2)}}},
                                 {3, 1, {{3, 1}, {4, q(-1, 2)}}},
                                 {3, 2, {{4, q(-1, 2)}}},
                                 {3, 3, {{4, q(1, 2)}}},
                                 {4, 1, {{4, 1}}}})};
  }
  if (id == "g8") {
    const Scalar& a = param(p, "alpha");
    if (is_quarter(a)) return std::nullopt;
    const Scalar x = g8_constants(a).x2;
    const Scalar d = 2 * x - 1;
    const LieAlgebra g = build_algebra(id, p);
    // The e_{24} coefficient of rho(e3) is printed "x_{24}"; read as x e_{24}.
    return SquareEntry{g8_square_rep(g, x, x),
                       products("g8", 4,
                                {{1, 1, {{1, -1}, {2, -a}, {4, x / d}}},
                                 {1, 2, {{2, -1}, {3, 1}, {4, x / d}}},
                                 {1, 3, {{2, -a}, {4, a / d}}},
                                 {2, 1, {{2, -1}, {4, x / d}}},
                                 {2, 2, {{4, 1 / d}}},
                                 {2, 3, {{4, x / d}}},
                                 {3, 1, {{3, -1}, {4, a / d}}},
                                 {3, 2, {{4, (1 - x) / d}}},
                                 {3, 3, {{4, a / d}}},
                                 {4, 1, {{4, -1}}}})};
  }
  return std::nullopt;
}

// --- sampling -------------------------------------------------------------------

/// Deterministic integer in [lo, hi] independent of the standard library's
/// distribution implementations.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scalar random_lambda(std::mt19937_64& rng) {
  for (;;) {
    const long re = draw(rng, -7, 7), im = draw(rng, -7, 7);
    if ((re != 0 || im != 0) && re * re + im * im < 64) return Scalar::rational(re, 8, im, 8);
  }
}

Scalar random_alpha(std::mt19937_64& rng) {
  for (;;) {
    const long re = draw(rng, -8, 8), im = draw(rng, -8, 8);
    if ((re != 0 || im != 0) && !(re == 1 && im == 0)) return Scalar::rational(re, 4, im, 4);
  }
}

}  // namespace

Matrix units(int m, std::initializer_list<Term> terms) {
  Matrix out = Matrix::Zero(m, m);
  for (const auto& t : terms) out += t.c * unit_matrix(m, t.i - 1, t.j - 1);
  return out;
}

Vector coords(int n, std::initializer_list<Coord> terms) { return coords_of(n, std::vector<Coord>(terms)); }

const std::vector<Family>& families() {
  static const std::vector<Family> all = [] {
    const std::string lambda_domain = "λ∈C*,|λ|<1 or λ=e^{iθ}, 0≤θ≤π";
    const std::string nonzero = "α∈C*";
    std::vector<Family> f{
        {"c1", "C", 1, {}, "", true, true},
        {"c2", "C^2", 2, {}, "", true, true},
        {"r2", "r2(C)", 2, {}, "", true, true},
        {"c3", "C^3", 3, {}, "", true, true},
        {"n3", "n3(C)", 3, {}, "", true, true},
        {"r2_c", "r2(C)+C", 3, {}, "", true, true},
        {"r3", "r3(C)", 3, {}, "", true, true},
        {"r3lambda", "r3,lambda(C)", 3, {"lambda"}, lambda_domain, true, true},
        {"sl2", "sl2(C)", 3, {}, "", false, false},
        {"c4", "C^4", 4, {}, "", true, true},
        {"n3_c", "n3(C)+C", 4, {}, "", true, true},
        {"r2_c2", "r2(C)+C^2", 4, {}, "", true, true},
        {"r3_c", "r3(C)+C", 4, {}, "", true, true},
        {"r3lambda_c", "r3,lambda(C)+C", 4, {"lambda"}, lambda_domain, true, true},
        {"r2_r2", "r2(C)+r2(C)", 4, {}, "", true, true},
        {"sl2_c", "sl2(C)+C", 4, {}, "", true, true},
        {"n4", "n4(C)", 4, {}, "", true, true},
        {"g1", "g1(alpha)", 4, {"alpha"}, nonzero, true, true},
        {"g2", "g2(alpha,beta)", 4, {"alpha", "beta"}, "α∈C*,β∈C or α,β=0", true, true},
        {"g3", "g3(alpha)", 4, {"alpha"}, nonzero, true, true},
        {"g4", "g4", 4, {}, "", true, true},
        {"g5", "g5", 4, {}, "", true, true},
        {"g6", "g6", 4, {}, "", true, true},
        {"g7", "g7", 4, {}, "", true, true},
        {"g8", "g8(alpha)", 4, {"alpha"}, "α∈C", true, true},
    };
    return f;
  }();
  return all;
}

const Family& family(const std::string& id) {
  for (const auto& f : families())
    if (f.id == id) return f;
  throw LookupError("unknown family " + id);
}

void check_domain(const Family& f, const Params& p) {
  for (const auto& [key, value] : p) {
    if (std::find(f.params.begin(), f.params.end(), key) == f.params.end()) {
      throw DomainError(f.id + " has no parameter " + key);
    }
  }
  for (const auto& key : f.params) param(p, key);
  const auto fail = [&] { throw DomainError(f.id + ": parameter outside domain (" + f.domain + ")"); };
  if (f.id == "r3lambda" || f.id == "r3lambda_c") {
    const Scalar& l = param(p, "lambda");
    if (l.is_zero()) fail();
    if (l.is_exact()) {
      const mpq_class n2 = l.exact_real() * l.exact_real() + l.exact_imag() * l.exact_imag();
      if (n2 > 1 || (n2 == 1 && l.exact_imag() < 0)) fail();
    } else {
      const double mag = l.magnitude();
      const double eps = Tolerance{}.epsilon;
      if (mag > 1 + eps || (mag >= 1 - eps && l.imag() < -eps)) fail();
    }
  } else if (f.id == "g1" || f.id == "g3") {
    if (param(p, "alpha").is_zero()) fail();
  } else if (f.id == "g2") {
    if (param(p, "alpha").is_zero() && !param(p, "beta").is_zero()) fail();
  }
}

LieAlgebra instantiate(const std::string& id, const Params& p) {
  check_domain(family(id), p);
  return build_algebra(id, p);
}

int published_mu(const std::string& id, const Params& p) {
  static const std::map<std::string, int> mu{
      {"c1", 1},   {"c2", 2},    {"r2", 2},         {"c3", 3},    {"n3", 3},    {"r2_c", 2},  {"r3", 3},
      {"r3lambda", 3}, {"sl2", 2}, {"c4", 4},      {"n3_c", 3},  {"r2_c2", 3}, {"r3_c", 3},  {"r3lambda_c", 3},
      {"r2_r2", 3}, {"sl2_c", 2}, {"n4", 4},       {"g1", 4},    {"g2", 4},    {"g3", 4},    {"g4", 4},
      {"g5", 4},    {"g6", 3},    {"g7", 3}};
  check_domain(family(id), p);
  if (id == "g8") return is_quarter(param(p, "alpha")) ? 4 : 3;
  return mu.at(id);
}

Representation minimal_representation(const std::string& id, const Params& p) {
  check_domain(family(id), p);
  return build_minimal_rep(id, p);
}

LeftSymmetricAlgebra minimal_lsa(const std::string& id, const Params& p) {
  check_domain(family(id), p);
  auto a = build_minimal_lsa(id, p);
  if (!a) throw LookupError("no tabulated products for " + id + " at minimal dimension");
  return *a;
}

bool has_minimal_lsa(const std::string& id, const Params& p) {
  const int dim = family(id).dim;
  return family(id).admits_lsa && published_mu(id, p) == dim;
}

SquareEntry square_entry(const std::string& id, const Params& p) {
  check_domain(family(id), p);
  auto e = build_square_entry(id, p);
  if (!e) throw LookupError("no same-dimension entry for " + id);
  return *e;
}

bool has_square_entry(const std::string& id, const Params& p) {
  const auto& f = family(id);
  return f.admits_lsa && published_mu(id, p) < f.dim;
}

Representation square_representation(const std::string& id, const Params& p) {
  if (has_minimal_lsa(id, p)) return minimal_representation(id, p);
  if (has_square_entry(id, p)) return square_entry(id, p).rep;
  throw LookupError(id + " has no same-dimension faithful representation in the catalog");
}

LeftSymmetricAlgebra square_lsa(const std::string& id, const Params& p) {
  if (has_minimal_lsa(id, p)) return minimal_lsa(id, p);
  if (has_square_entry(id, p)) return square_entry(id, p).lsa;
  throw LookupError(id + " has no compatible left-symmetric structure in the catalog");
}

std::vector<Params> sample_parameters(const std::string& id, int count, std::uint64_t seed) {
  const auto& f = family(id);
  if (f.params.empty()) return {Params{}};
  std::mt19937_64 rng(seed ^ std::hash<std::string>{}(id));
  std::vector<Params> out;
  if (f.params.front() == "lambda") {
    for (const Scalar& l : {q(1, 2), kI, Scalar::rational(-1, 2, 1, 2)}) out.push_back({{"lambda", l}});
    while (static_cast<int>(out.size()) < count) out.push_back({{"lambda", random_lambda(rng)}});
  } else if (id == "g2") {
    for (const Scalar& a : {Scalar(1), Scalar(2), kI})
      for (const Scalar& b : {Scalar(0), Scalar(1)}) out.push_back({{"alpha", a}, {"beta", b}});
    while (static_cast<int>(out.size()) < count) {
      out.push_back({{"alpha", random_alpha(rng)}, {"beta", random_alpha(rng)}});
    }
  } else {
    for (const Scalar& a : {Scalar(1), Scalar(2), kI}) out.push_back({{"alpha", a}});
    while (static_cast<int>(out.size()) < count) {
      Scalar a = random_alpha(rng);
      if (!is_quarter(a)) out.push_back({{"alpha", a}});
    }
  }
  out.resize(static_cast<std::size_t>(count));
  return out;
}

std::vector<Entry> table_entries(int samples, std::uint64_t seed) {
  std::vector<Entry> out;
  for (const auto& f : families()) {
    for (auto& p : sample_parameters(f.id, samples, seed)) out.push_back({f.id, std::move(p)});
    if (f.id == "g2") out.push_back({"g2", {{"alpha", 0}, {"beta", 0}}});
    if (f.id == "g8") out.push_back({"g8", {{"alpha", q(1, 4)}}});
  }
  return out;
}

std::string entry_label(const Entry& e) {
  if (e.params.empty()) return e.id;
  std::ostringstream os;
  os << e.id << "(";
  bool first = true;
  for (const auto& key : family(e.id).params) {
    os << (first ? "" : ",") << key << "=" << e.params.at(key).to_string();
    first = false;
  }
  os << ")";
  return os.str();
}

TriangularConstants g2_constants(const Scalar& alpha, const Scalar& beta) {
  const bool exact = alpha.is_exact() && beta.is_exact();
  const std::vector<Scalar> cubic{1, -1, beta, -alpha};
  std::optional<Scalar> b;
  for (const auto& root : poly_roots(cubic)) {
    const Scalar r = refine(root, exact, [&](const Scalar& z) { return poly_eval(cubic, z).is_exact_zero(); });
    if (r.is_exact() ? r.is_exact_zero() : r.is_zero(Tolerance{1e-6})) continue;
    b = r;
    break;
  }
  if (!b) throw ConstructionError("g2: no nonzero root b of b^3 = alpha - beta b + b^2");
  const Scalar& bb = *b;
  const std::vector<Scalar> quadratic{1, 1 - 3 * bb, 3 * bb * bb - 2 * bb + beta};
  const Scalar x = refine(poly_roots(quadratic).front(), exact && bb.is_exact(),
                          [&](const Scalar& z) { return poly_eval(quadratic, z).is_exact_zero(); });
  return {bb, x, 3 * bb - 1 - x};
}

TriangularConstants g3_constants(const Scalar& alpha) {
  const bool exact = alpha.is_exact();
  const std::vector<Scalar> cubic{1, 0, -alpha, -alpha};
  const Scalar b = refine(poly_roots(cubic).front(), exact,
                          [&](const Scalar& z) { return poly_eval(cubic, z).is_exact_zero(); });
  if (b.is_zero()) throw ConstructionError("g3: cubic b^3 = alpha (b + 1) has only the zero root");
  const std::vector<Scalar> quadratic{1, -3 * b, 3 * b * b - alpha};
  const Scalar x = refine(poly_roots(quadratic).front(), exact && b.is_exact(),
                          [&](const Scalar& z) { return poly_eval(quadratic, z).is_exact_zero(); });
  return {b, x, 3 * b - x};
}

SplitConstants g8_constants(const Scalar& alpha) {
  const Scalar d = 1 - 4 * alpha;
  if (d.is_zero()) throw DomainError("g8: the split constants need alpha != 1/4");
  const bool exact = d.is_exact();
  const Scalar s = refine(principal_root(d, 2), exact, [&](const Scalar& z) { return (z * z - d).is_exact_zero(); });
  const Scalar r4 =
      refine(principal_root(d, 4), exact, [&](const Scalar& z) { return (z * z * z * z - d).is_exact_zero(); });
  return {(1 - s) / 2, (1 + s) / 2, 1 / r4};
}

namespace printed {

LieAlgebra sl2_as_printed() {
  return algebra("sl2 (as printed)", 3, {{1, 2, {{3, 1}}}, {1, 3, {{2, -2}}}, {2, 3, {{2, 2}}}}, JacobiPolicy::Defer);
}

Representation g8_square(const Scalar& alpha, const Scalar& coeff24) {
  const Params p{{"alpha", alpha}};
  return g8_square_rep(instantiate("g8", p), g8_constants(alpha).x2, coeff24);
}

}  // namespace printed

}  // namespace ado
