#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ado/linalg.hpp"

namespace ado {

enum class JacobiPolicy { Enforce, Defer };

/// A finite-dimensional Lie algebra given by structure constants on a basis
/// e_1..e_n. Only brackets [e_i, e_j] with i < j are stored; the others follow
/// from antisymmetry. Indices in the API are zero-based.
class LieAlgebra {
 public:
  struct Bracket {
    int i;
    int j;
    Vector value;
  };

  LieAlgebra() = default;
  /// Abelian algebra of dimension `dim`.
  LieAlgebra(std::string name, int dim);
  /// Brackets may be given with i > j; they are stored negated. With
  /// JacobiPolicy::Enforce a Jacobi violation throws DomainError.
  LieAlgebra(std::string name, int dim, const std::vector<Bracket>& brackets,
             JacobiPolicy policy = JacobiPolicy::Enforce);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  /// [e_i, e_j] for any pair of basis indices.
  Vector basis_bracket(int i, int j) const;
  /// Structure constant c_{ij}^k.
  Scalar constant(int i, int j, int k) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  bool is_exact() const;
  LieAlgebra renamed(std::string name) const;
  std::vector<Bracket> nonzero_brackets() const;

 private:
  std::size_t pair_index(int i, int j) const;

  std::string name_;
  int dim_ = 0;
  std::vector<Vector> upper_;
};

struct JacobiFailure {
  int i;
  int j;
  int k;
  Vector residual;
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiFailure> failures;
};

/// Checks [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0 for i<j<k.
JacobiReport jacobi_check(const LieAlgebra& g, Tolerance tol = {});

/// ad(e_i) as n x n matrices; column j of ad(e_i) is [e_i, e_j].
std::vector<Matrix> adjoint_matrices(const LieAlgebra& g);

/// Basis (as columns) of the center.
Matrix center(const LieAlgebra& g, Tolerance tol = {});

/// Basis of [span(a), span(b)] where a, b hold basis vectors as columns.
Matrix bracket_span(const LieAlgebra& g, const Matrix& a, const Matrix& b, Tolerance tol = {});

/// Dimensions of g^(1) = g, g^(k+1) = [g^(k), g^(k)] until the dimension
/// reaches 0 or stops changing.
std::vector<int> derived_series(const LieAlgebra& g, Tolerance tol = {});
/// Dimensions of g^1 = g, g^(k+1) = [g, g^k], with the same stopping rule.
std::vector<int> lower_central_series(const LieAlgebra& g, Tolerance tol = {});

struct StructureInvariants {
  int dim = 0;
  int center_dim = 0;
  std::vector<int> derived;
  std::vector<int> lower_central;
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;
  /// k with g^k != 0 and g^(k+1) = 0; zero when not nilpotent.
  int nilpotency_class = 0;
  /// [g, g] is abelian.
  bool two_solvable = false;
  int derived_dim = 0;
  /// Nilpotent of class n - 1.
  bool filiform = false;
  bool two_step_one_dim_center = false;
};

StructureInvariants invariants(const LieAlgebra& g, Tolerance tol = {});

/// Block sum; brackets between the two summands vanish.
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h, std::string name = {});

struct Derivations {
  std::vector<Matrix> basis;
  bool has_invertible = false;
};

/// Solves D[x,y] = [Dx,y] + [x,Dy] on the n^2-dimensional space of
/// matrices. The invertibility flag tests up to 8 seeded random integer
/// combinations of the basis.
Derivations derivations(const LieAlgebra& g, std::uint64_t seed = 0x5eedULL, Tolerance tol = {});

LieAlgebra to_approx(const LieAlgebra& g);

/// Same dimension and structure constants (exact or within tolerance).
bool same_structure(const LieAlgebra& g, const LieAlgebra& h, Tolerance tol = {});

}  // namespace ado
