#include "ado/lie_algebra.hpp"

#include <random>
#include <sstream>

namespace ado {

LieAlgebra::LieAlgebra(std::string name, int dim) : name_(std::move(name)), dim_(dim) {
  if (dim < 1) throw DimensionError("Lie algebra dimension must be positive");
  upper_.assign(static_cast<std::size_t>(dim * (dim - 1) / 2), Vector::Zero(dim));
}

LieAlgebra::LieAlgebra(std::string name, int dim, const std::vector<Bracket>& brackets, JacobiPolicy policy)
    : LieAlgebra(std::move(name), dim) {
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim) throw DimensionError("bracket index out of range");
    if (b.value.size() != dim) throw DimensionError("bracket value has wrong length");
    if (b.i == b.j) {
      if (!is_zero(b.value)) throw DomainError("[e_i, e_i] must vanish");
      continue;
    }
    if (b.i < b.j) {
      upper_[pair_index(b.i, b.j)] = b.value;
    } else {
      upper_[pair_index(b.j, b.i)] = -b.value;
    }
  }
  if (policy == JacobiPolicy::Enforce) {
    const auto report = jacobi_check(*this);
    if (!report.ok) {
      const auto& f = report.failures.front();
      std::ostringstream os;
      os << "Jacobi identity fails for " << name_ << " on (e" << f.i + 1 << ",e" << f.j + 1 << ",e" << f.k + 1
         << ")";
      throw DomainError(os.str());
    }
  }
}

std::size_t LieAlgebra::pair_index(int i, int j) const {
  // Row-major index of (i, j), i < j, in the strict upper triangle.
  return static_cast<std::size_t>(i * (2 * dim_ - i - 1) / 2 + (j - i - 1));
}

Vector LieAlgebra::basis_bracket(int i, int j) const {
  if (i == j) return Vector::Zero(dim_);
  if (i < j) return upper_[pair_index(i, j)];
  return -upper_[pair_index(j, i)];
}

Scalar LieAlgebra::constant(int i, int j, int k) const {
  if (i == j) return Scalar(0);
  if (i < j) return upper_[pair_index(i, j)](k);
  return -upper_[pair_index(j, i)](k);
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket: vector length differs from dimension");
  Vector out = Vector::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const Scalar coeff = x(i) * y(j) - x(j) * y(i);
      if (coeff.is_exact_zero()) continue;
      out += coeff * upper_[pair_index(i, j)];
    }
  return out;
}

bool LieAlgebra::is_exact() const {
  for (const auto& v : upper_)
    if (!ado::is_exact(v)) return false;
  return true;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::vector<LieAlgebra::Bracket> LieAlgebra::nonzero_brackets() const {
  std::vector<Bracket> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      const auto& v = upper_[pair_index(i, j)];
      if (!ado::is_zero(v, Tolerance{0.0})) out.push_back({i, j, v});
    }
  return out;
}

JacobiReport jacobi_check(const LieAlgebra& g, Tolerance tol) {
  JacobiReport report;
  const int n = g.dim();
  auto unit = [n](int i) {
    Vector e = Vector::Zero(n);
    e(i) = Scalar(1);
    return e;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vector r = g.bracket(unit(i), g.basis_bracket(j, k)) + g.bracket(unit(j), g.basis_bracket(k, i)) +
                         g.bracket(unit(k), g.basis_bracket(i, j));
        if (!is_zero(r, tol)) {
          report.ok = false;
          report.failures.push_back({i, j, k, r});
        }
      }
  return report;
}

std::vector<Matrix> adjoint_matrices(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<Matrix> ad;
  ad.reserve(n);
  for (int i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) m.col(j) = g.basis_bracket(i, j);
    ad.push_back(std::move(m));
  }
  return ad;
}

Matrix center(const LieAlgebra& g, Tolerance tol) { return nullspace(stack_columns(adjoint_matrices(g)), tol); }

Matrix bracket_span(const LieAlgebra& g, const Matrix& a, const Matrix& b, Tolerance tol) {
  const int n = g.dim();
  if (a.cols() == 0 || b.cols() == 0) return Matrix(n, 0);
  Matrix all(n, a.cols() * b.cols());
  Index c = 0;
  for (Index p = 0; p < a.cols(); ++p)
    for (Index q = 0; q < b.cols(); ++q) all.col(c++) = g.bracket(a.col(p), b.col(q));
  return column_basis(all, tol);
}

namespace {

template <typename Step>
std::vector<int> series(const LieAlgebra& g, Step next) {
  Matrix term = Matrix::Identity(g.dim(), g.dim());
  std::vector<int> dims{static_cast<int>(term.cols())};
  while (term.cols() > 0) {
    Matrix following = next(term);
    if (following.cols() == term.cols()) break;
    term = std::move(following);
    dims.push_back(static_cast<int>(term.cols()));
  }
  return dims;
}

}  // namespace

std::vector<int> derived_series(const LieAlgebra& g, Tolerance tol) {
  return series(g, [&](const Matrix& t) { return bracket_span(g, t, t, tol); });
}

std::vector<int> lower_central_series(const LieAlgebra& g, Tolerance tol) {
  const Matrix whole = Matrix::Identity(g.dim(), g.dim());
  return series(g, [&](const Matrix& t) { return bracket_span(g, whole, t, tol); });
}

StructureInvariants invariants(const LieAlgebra& g, Tolerance tol) {
  StructureInvariants inv;
  const int n = g.dim();
  inv.dim = n;
  inv.center_dim = static_cast<int>(center(g, tol).cols());
  inv.derived = derived_series(g, tol);
  inv.lower_central = lower_central_series(g, tol);
  inv.abelian = inv.center_dim == n;
  inv.solvable = inv.derived.back() == 0;
  inv.nilpotent = inv.lower_central.back() == 0;
  inv.nilpotency_class = inv.nilpotent ? static_cast<int>(inv.lower_central.size()) - 1 : 0;
  inv.derived_dim = inv.derived.size() > 1 ? inv.derived[1] : inv.derived[0];
  const Matrix whole = Matrix::Identity(n, n);
  const Matrix derived = bracket_span(g, whole, whole, tol);
  inv.two_solvable = bracket_span(g, derived, derived, tol).cols() == 0;
  inv.filiform = inv.nilpotent && n >= 2 && inv.nilpotency_class == n - 1;
  inv.two_step_one_dim_center = inv.nilpotent && inv.nilpotency_class == 2 && inv.center_dim == 1;
  return inv;
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h, std::string name) {
  const int n = g.dim() + h.dim();
  std::vector<LieAlgebra::Bracket> brackets;
  for (const auto& b : g.nonzero_brackets()) {
    Vector v = Vector::Zero(n);
    v.head(g.dim()) = b.value;
    brackets.push_back({b.i, b.j, v});
  }
  for (const auto& b : h.nonzero_brackets()) {
    Vector v = Vector::Zero(n);
    v.tail(h.dim()) = b.value;
    brackets.push_back({b.i + g.dim(), b.j + g.dim(), v});
  }
  if (name.empty()) name = g.name() + "+" + h.name();
  return LieAlgebra(std::move(name), n, brackets, JacobiPolicy::Defer);
}

Derivations derivations(const LieAlgebra& g, std::uint64_t seed, Tolerance tol) {
  const int n = g.dim();
  // Unknown D(b, a) sits at a * n + b (column-major vec of D).
  const int pairs = n * (n - 1) / 2;
  Matrix system = Matrix::Zero(std::max(1, pairs * n), n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k, ++row)
        for (int b = 0; b < n; ++b) {
          // D[e_i, e_j]_k = sum_b D(k, b) c_ij^b
          system(row, b * n + k) += g.constant(i, j, b);
          // [D e_i, e_j]_k = sum_b D(b, i) c_bj^k
          system(row, i * n + b) -= g.constant(b, j, k);
          // [e_i, D e_j]_k = sum_b D(b, j) c_ib^k
          system(row, j * n + b) -= g.constant(i, b, k);
        }
  const Matrix kernel = nullspace(system, tol);
  Derivations out;
  for (Index c = 0; c < kernel.cols(); ++c) out.basis.push_back(kernel.col(c).reshaped(n, n));
  if (out.basis.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-7, 7);
  for (int attempt = 0; attempt < 8 && !out.has_invertible; ++attempt) {
    Matrix d = Matrix::Zero(n, n);
    for (const auto& basis : out.basis) d += Scalar(coeff(rng)) * basis;
    out.has_invertible = rank(d, tol) == n;
  }
  return out;
}

LieAlgebra to_approx(const LieAlgebra& g) {
  std::vector<LieAlgebra::Bracket> brackets;
  for (const auto& b : g.nonzero_brackets()) brackets.push_back({b.i, b.j, to_approx(Matrix(b.value)).col(0)});
  return LieAlgebra(g.name(), g.dim(), brackets, JacobiPolicy::Defer);
}

bool same_structure(const LieAlgebra& g, const LieAlgebra& h, Tolerance tol) {
  if (g.dim() != h.dim()) return false;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      if (!is_zero(Matrix(g.basis_bracket(i, j) - h.basis_bracket(i, j)), tol)) return false;
  return true;
}

}  // namespace ado
