#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ado/lsa.hpp"

namespace ado {

using Params = std::map<std::string, Scalar>;

/// One family of the classification in dimension <= 4. Parameter-free
/// families have an empty `params` list.
struct Family {
  std::string id;
  std::string display;
  int dim = 0;
  std::vector<std::string> params;
  /// Human-readable domain predicate, quoted in DomainError messages.
  std::string domain;
  /// Whether a tabulated representation of dimension dim exists, so the
  /// etale construction applies.
  bool has_square_witness = true;
  /// False for sl2, which admits no compatible left-symmetric structure.
  bool admits_lsa = true;
};

const std::vector<Family>& families();
const Family& family(const std::string& id);

/// Throws DomainError quoting the family's predicate when `p` lies outside.
void check_domain(const Family& f, const Params& p);

LieAlgebra instantiate(const std::string& id, const Params& p = {});
/// Published minimal faithful dimension.
int published_mu(const std::string& id, const Params& p = {});

/// The lowest-dimensional faithful representation listed for the family.
Representation minimal_representation(const std::string& id, const Params& p = {});
/// Products listed next to it. LookupError when the table has none.
LeftSymmetricAlgebra minimal_lsa(const std::string& id, const Params& p = {});
bool has_minimal_lsa(const std::string& id, const Params& p = {});

struct SquareEntry {
  Representation rep;
  LeftSymmetricAlgebra lsa;
};

/// Same-dimension representation and products for families whose minimal
/// dimension is below their dimension. LookupError when absent.
SquareEntry square_entry(const std::string& id, const Params& p = {});
bool has_square_entry(const std::string& id, const Params& p = {});

/// The representation the etale construction starts from: the minimal one
/// when its dimension equals dim g, else the same-dimension one. LookupError
/// if neither exists.
Representation square_representation(const std::string& id, const Params& p = {});
/// The tabulated products paired with square_representation.
LeftSymmetricAlgebra square_lsa(const std::string& id, const Params& p = {});

/// Parameter points used by the sweeps: fixed points first, then seeded
/// in-domain points, `count` in total. Parameter-free families yield {{}}.
std::vector<Params> sample_parameters(const std::string& id, int count = 5, std::uint64_t seed = 2024);

/// (family, parameters) pairs covering each minimal-representation row, including the
/// special points alpha = beta = 0 of g2 and alpha = 1/4 of g8.
struct Entry {
  std::string id;
  Params params;
};
std::vector<Entry> table_entries(int samples = 5, std::uint64_t seed = 2024);
std::string entry_label(const Entry& e);

/// Auxiliary constants of the g2 / g3 rows: b a nonzero root of the cubic,
/// x a root of the quadratic in b, y determined by b and x.
struct TriangularConstants {
  Scalar b;
  Scalar x;
  Scalar y;
};
TriangularConstants g2_constants(const Scalar& alpha, const Scalar& beta);
TriangularConstants g3_constants(const Scalar& alpha);

/// g8 constants for alpha != 1/4: x1, x2 roots of t^2 - t + alpha with
/// x1 = (1 - s)/2 for the principal square root s of 1 - 4 alpha, and
/// scale = (1 - 4 alpha)^(-1/4) using the principal fourth root.
struct SplitConstants {
  Scalar x1;
  Scalar x2;
  Scalar scale;
};
SplitConstants g8_constants(const Scalar& alpha);

/// Data as printed where it differs from the corrected catalog.
namespace printed {
/// The 3-dimensional sl2 row as printed, built without enforcing Jacobi.
LieAlgebra sl2_as_printed();
/// The same-dimension g8 representation with the ambiguous e_{24}
/// coefficient set to `coeff24`.
Representation g8_square(const Scalar& alpha, const Scalar& coeff24);
}  // namespace printed

/// Helpers for writing matrices, vectors and products with one-based indices.
struct Term {
  int i;
  int j;
  Scalar c;
};
Matrix units(int m, std::initializer_list<Term> terms);
struct Coord {
  int k;
  Scalar c;
};
Vector coords(int n, std::initializer_list<Coord> terms);

}  // namespace ado
