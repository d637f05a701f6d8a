#pragma once

#include <vector>

#include "ado/lsa.hpp"

namespace ado {

/// x -> rho(x) + q(x) acting on C^m; column i of `translation` is q(e_i).
struct AffineRep {
  Representation rho;
  Matrix translation;
  Vector base;
  bool etale = false;
};

struct CocycleReport {
  bool ok = true;
  std::vector<PairResidual> failures;
};

/// q[e_i, e_j] = rho(e_i) q(e_j) - rho(e_j) q(e_i) for i < j.
CocycleReport check_cocycle(const AffineRep& phi, Tolerance tol = {});

/// Matrix of x -> rho(x) v + q(x) at the base point v.
Matrix evaluation_matrix(const AffineRep& phi);

/// q(e_i) = rho(e_i) (1, ..., 1) with base point 0. Requires a faithful
/// representation of dimension n; a singular q raises NotEtaleError.
AffineRep construct_etale(const Representation& rho, Tolerance tol = {});

/// x * y = ev^{-1}(rho(x) ev(y)). Throws PreconditionError for a singular ev.
LeftSymmetricAlgebra induced_lsa(const AffineRep& phi, Tolerance tol = {});

}  // namespace ado
