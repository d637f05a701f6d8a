#pragma once

#include <string>
#include <vector>

#include "ado/representation.hpp"

namespace ado {

/// Bilinear product on C^n given densely by e_i * e_j for all i, j.
class LeftSymmetricAlgebra {
 public:
  LeftSymmetricAlgebra() = default;
  /// Zero product of dimension n.
  explicit LeftSymmetricAlgebra(int n, std::string name = {});
  /// products[i * n + j] = e_i * e_j.
  LeftSymmetricAlgebra(int n, std::vector<Vector> products, std::string name = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Vector& product(int i, int j) const { return products_[index(i, j)]; }
  void set_product(int i, int j, Vector value);
  Scalar constant(int i, int j, int k) const { return product(i, j)(k); }
  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of left multiplication by e_i.
  Matrix left_matrix(int i) const;
  bool is_exact() const;

 private:
  std::size_t index(int i, int j) const;

  int dim_ = 0;
  std::string name_;
  std::vector<Vector> products_;
};

/// (x, y, z) = (xy)z - x(yz).
Vector associator(const LeftSymmetricAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

struct TripleFailure {
  int i;
  int j;
  int k;
  Vector residual;
};

struct LeftSymmetryReport {
  bool ok = true;
  std::vector<TripleFailure> failures;
};

/// (e_i, e_j, e_k) = (e_j, e_i, e_k) on all n^3 basis triples.
LeftSymmetryReport check_left_symmetric(const LeftSymmetricAlgebra& a, Tolerance tol = {});

/// [x, y] = xy - yx. Throws PreconditionError unless `a` is left-symmetric.
LieAlgebra sub_adjacent(const LeftSymmetricAlgebra& a, Tolerance tol = {});

/// e_i -> L_{e_i} as a representation of the sub-adjacent Lie algebra.
Representation left_regular_rep(const LeftSymmetricAlgebra& a, Tolerance tol = {});

/// {x : L_x = 0} as columns. Throws InconsistencyError if the result is not a
/// two-sided ideal.
Matrix kernel_ideal(const LeftSymmetricAlgebra& a, Tolerance tol = {});

bool has_nontrivial_translations(const LeftSymmetricAlgebra& a, Tolerance tol = {});

/// Entrywise comparison of product constants.
bool same_products(const LeftSymmetricAlgebra& a, const LeftSymmetricAlgebra& b, Tolerance tol = {});

LeftSymmetricAlgebra to_approx(const LeftSymmetricAlgebra& a);

}  // namespace ado
