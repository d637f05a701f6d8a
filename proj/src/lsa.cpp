#include "ado/lsa.hpp"

#include <algorithm>
#include <tuple>

namespace ado {

namespace {

Vector unit(int n, int i) {
  Vector e = Vector::Zero(n);
  e(i) = Scalar(1);
  return e;
}

}  // namespace

LeftSymmetricAlgebra::LeftSymmetricAlgebra(int n, std::string name)
    : dim_(n), name_(std::move(name)), products_(static_cast<std::size_t>(n * n), Vector::Zero(n)) {
  if (n < 1) throw DimensionError("algebra dimension must be positive");
}

LeftSymmetricAlgebra::LeftSymmetricAlgebra(int n, std::vector<Vector> products, std::string name)
    : dim_(n), name_(std::move(name)), products_(std::move(products)) {
  if (n < 1) throw DimensionError("algebra dimension must be positive");
  if (products_.size() != static_cast<std::size_t>(n * n)) throw DimensionError("need n^2 products");
  for (const auto& p : products_)
    if (p.size() != n) throw DimensionError("product vector has wrong length");
}

std::size_t LeftSymmetricAlgebra::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw DimensionError("product index out of range");
  return static_cast<std::size_t>(i * dim_ + j);
}

void LeftSymmetricAlgebra::set_product(int i, int j, Vector value) {
  if (value.size() != dim_) throw DimensionError("product vector has wrong length");
  products_[index(i, j)] = std::move(value);
}

Vector LeftSymmetricAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("multiply: vector length differs from dimension");
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i).is_exact_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j).is_exact_zero()) continue;
      out += (x(i) * y(j)) * products_[index(i, j)];
    }
  }
  return out;
}

Matrix LeftSymmetricAlgebra::left_matrix(int i) const {
  Matrix l(dim_, dim_);
  for (int j = 0; j < dim_; ++j) l.col(j) = product(i, j);
  return l;
}

bool LeftSymmetricAlgebra::is_exact() const {
  for (const auto& p : products_)
    if (!ado::is_exact(p)) return false;
  return true;
}

Vector associator(const LeftSymmetricAlgebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z));
}

LeftSymmetryReport check_left_symmetric(const LeftSymmetricAlgebra& a, Tolerance tol) {
  // (x,y,z) - (y,x,z) = (L_{xy - yx} - [L_x, L_y]) z, so one matrix per pair
  // covers all n^3 triples.
  LeftSymmetryReport report;
  const int n = a.dim();
  std::vector<Matrix> left;
  for (int i = 0; i < n; ++i) left.push_back(a.left_matrix(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vector c = a.product(i, j) - a.product(j, i);
      Matrix m = left[j] * left[i] - left[i] * left[j];
      for (int l = 0; l < n; ++l)
        if (!c(l).is_exact_zero()) m += c(l) * left[l];
      for (int k = 0; k < n; ++k) {
        const Vector r = m.col(k);
        if (is_zero(Matrix(r), tol)) continue;
        report.ok = false;
        report.failures.push_back({i, j, k, r});
        report.failures.push_back({j, i, k, -r});
      }
    }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const TripleFailure& x, const TripleFailure& y) { return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k); });
  return report;
}

LieAlgebra sub_adjacent(const LeftSymmetricAlgebra& a, Tolerance tol) {
  if (!check_left_symmetric(a, tol).ok) throw PreconditionError("sub_adjacent: product is not left-symmetric");
  std::vector<LieAlgebra::Bracket> brackets;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) brackets.push_back({i, j, a.product(i, j) - a.product(j, i)});
  LieAlgebra g(a.name(), a.dim(), brackets, JacobiPolicy::Defer);
  if (!jacobi_check(g, tol).ok) throw InconsistencyError("sub_adjacent: commutator bracket violates Jacobi");
  return g;
}

Representation left_regular_rep(const LeftSymmetricAlgebra& a, Tolerance tol) {
  LieAlgebra g = sub_adjacent(a, tol);
  std::vector<Matrix> images;
  for (int i = 0; i < a.dim(); ++i) images.push_back(a.left_matrix(i));
  return Representation(std::move(g), std::move(images));
}

Matrix kernel_ideal(const LeftSymmetricAlgebra& a, Tolerance tol) {
  std::vector<Matrix> ls;
  for (int i = 0; i < a.dim(); ++i) ls.push_back(a.left_matrix(i));
  const Matrix kernel = nullspace(stack_columns(ls), tol);
  if (kernel.cols() == 0) return kernel;
  const int n = a.dim();
  Matrix products(n, 2 * n * kernel.cols());
  Index c = 0;
  for (Index p = 0; p < kernel.cols(); ++p)
    for (int i = 0; i < n; ++i) {
      products.col(c++) = a.multiply(kernel.col(p), unit(n, i));
      products.col(c++) = a.multiply(unit(n, i), kernel.col(p));
    }
  Matrix joined(n, kernel.cols() + products.cols());
  joined << kernel, products;
  if (rank(joined, tol) != kernel.cols()) throw InconsistencyError("kernel_ideal: kernel is not a two-sided ideal");
  return kernel;
}

bool has_nontrivial_translations(const LeftSymmetricAlgebra& a, Tolerance tol) {
  return kernel_ideal(a, tol).cols() > 0;
}

bool same_products(const LeftSymmetricAlgebra& a, const LeftSymmetricAlgebra& b, Tolerance tol) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!is_zero(Matrix(a.product(i, j) - b.product(i, j)), tol)) return false;
  return true;
}

LeftSymmetricAlgebra to_approx(const LeftSymmetricAlgebra& a) {
  std::vector<Vector> products;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) products.push_back(to_approx(Matrix(a.product(i, j))).col(0));
  return LeftSymmetricAlgebra(a.dim(), std::move(products), a.name());
}

}  // namespace ado
