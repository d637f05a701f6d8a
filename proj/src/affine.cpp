#include "ado/affine.hpp"

namespace ado {

CocycleReport check_cocycle(const AffineRep& phi, Tolerance tol) {
  const auto& g = phi.rho.algebra();
  const bool exact = phi.rho.is_exact() && is_exact(phi.translation);
  CocycleReport report;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      const Vector lhs = phi.translation * g.basis_bracket(i, j);
      const Vector rhs = phi.rho.image(i) * phi.translation.col(j) - phi.rho.image(j) * phi.translation.col(i);
      Matrix residual = lhs - rhs;
      const double norm = frobenius_norm(residual);
      const bool pass = exact ? is_zero(residual) : is_zero(residual, tol);
      if (!pass) {
        report.ok = false;
        report.failures.push_back({i, j, std::move(residual), norm});
      }
    }
  return report;
}

Matrix evaluation_matrix(const AffineRep& phi) {
  const int n = phi.rho.algebra().dim();
  Matrix ev = phi.translation;
  for (int i = 0; i < n; ++i) ev.col(i) += phi.rho.image(i) * phi.base;
  return ev;
}

AffineRep construct_etale(const Representation& rho, Tolerance tol) {
  const int n = rho.algebra().dim();
  const int m = rho.dimension();
  if (m != n) throw PreconditionError("construct_etale: representation dimension must equal the algebra dimension");
  if (!check_faithful(rho, tol).ok) throw PreconditionError("construct_etale: representation is not faithful");
  AffineRep phi{rho, Matrix(m, n), Vector::Zero(m), false};
  const Vector ones = Vector::Constant(m, Scalar(1));
  for (int i = 0; i < n; ++i) phi.translation.col(i) = rho.image(i) * ones;
  const Index r = rank(phi.translation, tol);
  if (r < n) throw NotEtaleError("construct_etale: translation part has rank " + std::to_string(r), r);
  phi.etale = true;
  return phi;
}

LeftSymmetricAlgebra induced_lsa(const AffineRep& phi, Tolerance tol) {
  const int n = phi.rho.algebra().dim();
  const Matrix ev = evaluation_matrix(phi);
  if (ev.rows() != n || rank(ev, tol) < n) throw PreconditionError("induced_lsa: evaluation map is not invertible");
  // Column i * n + j of the right-hand side is rho(e_i) ev(e_j).
  Matrix rhs(n, n * n);
  for (int i = 0; i < n; ++i) rhs.middleCols(i * n, n) = phi.rho.image(i) * ev;
  const Matrix solved = solve(ev, rhs, tol);
  std::vector<Vector> products;
  for (int c = 0; c < n * n; ++c) products.push_back(solved.col(c));
  return LeftSymmetricAlgebra(n, std::move(products), phi.rho.algebra().name());
}

}  // namespace ado
