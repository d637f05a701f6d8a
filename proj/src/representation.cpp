#include "ado/representation.hpp"

namespace ado {

Representation::Representation(LieAlgebra algebra, std::vector<Matrix> images)
    : algebra_(std::move(algebra)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != algebra_.dim()) {
    throw DimensionError("representation needs one image per basis vector");
  }
  const Index m = images_.front().rows();
  for (const auto& img : images_)
    if (img.rows() != m || img.cols() != m) throw DimensionError("representation images must be square of one size");
}

Matrix Representation::operator()(const Vector& x) const {
  if (x.size() != algebra_.dim()) throw DimensionError("representation applied to a vector of wrong length");
  Matrix out = Matrix::Zero(dimension(), dimension());
  for (int i = 0; i < algebra_.dim(); ++i)
    if (!x(i).is_exact_zero()) out += x(i) * images_[static_cast<std::size_t>(i)];
  return out;
}

bool Representation::is_exact() const {
  if (!algebra_.is_exact()) return false;
  for (const auto& img : images_)
    if (!ado::is_exact(img)) return false;
  return true;
}

HomomorphismReport check_homomorphism(const Representation& rho, Tolerance tol) {
  HomomorphismReport report;
  const auto& g = rho.algebra();
  const bool exact = rho.is_exact();
  double scale = 0.0;
  for (const auto& img : rho.images()) scale = std::max(scale, max_abs(img));
  const double bound = tol.epsilon * (1.0 + scale);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Matrix residual = commutator(rho.image(i), rho.image(j)) - rho(g.basis_bracket(i, j));
      const double norm = frobenius_norm(residual);
      report.max_residual = std::max(report.max_residual, norm);
      const bool pass = exact ? is_zero(residual) : norm <= bound;
      if (!pass) {
        report.ok = false;
        report.failures.push_back({i, j, std::move(residual), norm});
      }
    }
  return report;
}

FaithfulReport check_faithful(const Representation& rho, Tolerance tol) {
  if (!check_homomorphism(rho, tol).ok) throw PreconditionError("check_faithful: not a homomorphism");
  FaithfulReport report;
  report.kernel = nullspace(stack_columns(rho.images()), tol);
  report.ok = report.kernel.cols() == 0;
  return report;
}

Representation extend_with_identity(const Representation& rho, Tolerance tol) {
  if (!check_faithful(rho, tol).ok) throw PreconditionError("extend_with_identity: representation is not faithful");
  const int m = rho.dimension();
  std::vector<Matrix> images = rho.images();
  images.push_back(Matrix::Identity(m, m));
  if (rank(stack_columns(images), tol) != static_cast<Index>(images.size())) {
    throw ConstructionError("extend_with_identity: identity already lies in the image");
  }
  const auto& g = rho.algebra();
  LieAlgebra sum = direct_sum(g, LieAlgebra("C", 1), g.name() + "+C");
  return Representation(std::move(sum), std::move(images));
}

Representation adjoint_rep(const LieAlgebra& g) { return Representation(g, adjoint_matrices(g)); }

Representation to_approx(const Representation& rho) {
  std::vector<Matrix> images;
  for (const auto& img : rho.images()) images.push_back(to_approx(img));
  return Representation(to_approx(rho.algebra()), std::move(images));
}

}  // namespace ado
