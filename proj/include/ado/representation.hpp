#pragma once

#include <vector>

#include "ado/lie_algebra.hpp"

namespace ado {

/// A linear map g -> gl(m) fixed by the images of the basis e_1..e_n.
class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::vector<Matrix> images);

  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<Matrix>& images() const { return images_; }
  const Matrix& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  /// Target dimension m.
  int dimension() const { return images_.empty() ? 0 : static_cast<int>(images_.front().rows()); }
  /// rho(x) for a coordinate vector x.
  Matrix operator()(const Vector& x) const;
  bool is_exact() const;

 private:
  LieAlgebra algebra_;
  std::vector<Matrix> images_;
};

struct PairResidual {
  int i;
  int j;
  Matrix residual;
  double norm;
};

struct HomomorphismReport {
  bool ok = true;
  std::vector<PairResidual> failures;
  /// Largest Frobenius residual over all pairs.
  double max_residual = 0.0;
};

/// rho([e_i, e_j]) = [rho(e_i), rho(e_j)] for all i < j. Exact representations
/// must match exactly; otherwise a pair passes when its Frobenius residual is
/// at most epsilon * (1 + largest entry magnitude of the images).
HomomorphismReport check_homomorphism(const Representation& rho, Tolerance tol = {});

struct FaithfulReport {
  bool ok = true;
  /// Kernel basis as columns (coordinates in g).
  Matrix kernel;
};

/// Injectivity via the nullspace of the m^2 x n matrix of stacked images.
/// Throws PreconditionError when rho is not a homomorphism.
FaithfulReport check_faithful(const Representation& rho, Tolerance tol = {});

/// Representation of g + C sending the new basis vector to the identity.
/// Requires rho faithful and I_m outside span rho(g).
Representation extend_with_identity(const Representation& rho, Tolerance tol = {});

/// e_i -> ad(e_i).
Representation adjoint_rep(const LieAlgebra& g);

Representation to_approx(const Representation& rho);

}  // namespace ado
