#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "ado/error.hpp"
#include "ado/scalar.hpp"

namespace ado {

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Per-field hooks used by the elimination routines.
template <typename T>
struct FieldTraits;

template <>
struct FieldTraits<Scalar> {
  static bool exact(const Scalar& s) { return s.is_exact(); }
  static bool exact_zero(const Scalar& s) { return s.is_exact_zero(); }
  static double magnitude(const Scalar& s) { return s.max_component(); }
};

template <>
struct FieldTraits<std::complex<double>> {
  static bool exact(const std::complex<double>&) { return false; }
  static bool exact_zero(const std::complex<double>& z) { return z == 0.0; }
  static double magnitude(const std::complex<double>& z) { return std::max(std::abs(z.real()), std::abs(z.imag())); }
};

template <>
struct FieldTraits<double> {
  static bool exact(double) { return false; }
  static bool exact_zero(double x) { return x == 0.0; }
  static double magnitude(double x) { return std::abs(x); }
};

template <typename Derived>
bool is_exact(const Eigen::MatrixBase<Derived>& a) {
  using T = typename Derived::Scalar;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!FieldTraits<T>::exact(a(i, j))) return false;
  return true;
}

/// Largest entry magnitude (max of |re|, |im| over entries).
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  using T = typename Derived::Scalar;
  double m = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) m = std::max(m, FieldTraits<T>::magnitude(a(i, j)));
  return m;
}

double frobenius_norm(const Matrix& a);
bool is_zero(const Matrix& a, Tolerance tol = {});
Matrix to_approx(const Matrix& a);

/// e_ij of size m x m (zero-based indices).
Matrix unit_matrix(Index m, Index i, Index j);

/// Columns of the result are vec(ms[k]) in column-major order.
Matrix stack_columns(const std::vector<Matrix>& ms);

template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject commutator(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError("commutator: operands must be square of equal size");
  }
  return a * b - b * a;
}

namespace detail {

template <typename T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Reduced row echelon form with the pivot columns in order.
template <typename T>
struct Echelon {
  DenseMatrix<T> reduced;
  std::vector<Index> pivots;
};

// Fraction-free (Bareiss) forward elimination. Returns the echelon matrix and
// pivot columns; `swaps` counts row exchanges.
template <typename T>
Echelon<T> bareiss_forward(DenseMatrix<T> m, int* swaps = nullptr) {
  Echelon<T> out;
  T prev(1);
  Index r = 0;
  int nswaps = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    while (p < m.rows() && FieldTraits<T>::exact_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      ++nswaps;
    }
    for (Index i = r + 1; i < m.rows(); ++i) {
      for (Index j = c + 1; j < m.cols(); ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = T(0);
    }
    prev = m(r, c);
    out.pivots.push_back(c);
    ++r;
  }
  if (swaps) *swaps = nswaps;
  out.reduced = std::move(m);
  return out;
}

// Back substitution turning a row echelon form into the reduced form.
template <typename T>
void reduce_upward(Echelon<T>& e) {
  auto& m = e.reduced;
  for (Index k = static_cast<Index>(e.pivots.size()) - 1; k >= 0; --k) {
    const Index c = e.pivots[k];
    const T p = m(k, c);
    for (Index j = 0; j < m.cols(); ++j) m(k, j) = m(k, j) / p;
    for (Index i = 0; i < k; ++i) {
      if (FieldTraits<T>::exact_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
}

// Gauss-Jordan with partial pivoting. A column is treated as pivot-free when
// its best remaining entry is at most epsilon times the largest entry of the
// input matrix.
template <typename T>
Echelon<T> pivoting_rref(DenseMatrix<T> m, Tolerance tol) {
  Echelon<T> out;
  const double threshold = tol.epsilon * max_abs(m);
  Index r = 0;
  for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Index p = r;
    double best = -1.0;
    for (Index i = r; i < m.rows(); ++i) {
      const double mag = FieldTraits<T>::magnitude(m(i, c));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    if (best <= threshold) {
      for (Index i = r; i < m.rows(); ++i) m(i, c) = T(0);
      continue;
    }
    if (p != r) m.row(p).swap(m.row(r));
    const T piv = m(r, c);
    for (Index j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) / piv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const T f = m(i, c);
      if (FieldTraits<T>::exact_zero(f)) continue;
      for (Index j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
      m(i, c) = T(0);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& a, Tolerance tol) {
  using T = typename Derived::Scalar;
  if (is_exact(a)) {
    auto e = bareiss_forward<T>(a.eval());
    reduce_upward(e);
    return e;
  }
  return pivoting_rref<T>(a.eval(), tol);
}

}  // namespace detail

/// Exact rank for exact matrices (fraction-free elimination); otherwise the
/// number of pivots above epsilon times the largest entry.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& a, Tolerance tol = {}) {
  using T = typename Derived::Scalar;
  if (a.size() == 0) return 0;
  if (is_exact(a)) return static_cast<Index>(detail::bareiss_forward<T>(a.eval()).pivots.size());
  return static_cast<Index>(detail::pivoting_rref<T>(a.eval(), tol).pivots.size());
}

/// Basis of ker(a), one vector per column. Zero columns iff a is injective.
template <typename Derived>
detail::DenseMatrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& a, Tolerance tol = {}) {
  using T = typename Derived::Scalar;
  const Index n = a.cols();
  if (a.rows() == 0) return detail::DenseMatrix<T>::Identity(n, n);
  const auto e = detail::rref(a, tol);
  std::vector<bool> is_pivot(n, false);
  for (Index c : e.pivots) is_pivot[c] = true;
  detail::DenseMatrix<T> basis = detail::DenseMatrix<T>::Zero(n, n - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = T(1);
    for (Index row = 0; row < static_cast<Index>(e.pivots.size()); ++row) basis(e.pivots[row], k) = -e.reduced(row, f);
    ++k;
  }
  return basis;
}

/// Columns of `a` forming a basis of its column space (pivot columns).
template <typename Derived>
detail::DenseMatrix<typename Derived::Scalar> column_basis(const Eigen::MatrixBase<Derived>& a, Tolerance tol = {}) {
  using T = typename Derived::Scalar;
  if (a.cols() == 0) return detail::DenseMatrix<T>(a.rows(), 0);
  const auto e = detail::rref(a, tol);
  detail::DenseMatrix<T> out(a.rows(), static_cast<Index>(e.pivots.size()));
  for (Index k = 0; k < out.cols(); ++k) out.col(k) = a.col(e.pivots[k]);
  return out;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using T = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  const Index n = a.rows();
  if (n == 0) return T(1);
  if (is_exact(a)) {
    int swaps = 0;
    const auto e = detail::bareiss_forward<T>(a.eval(), &swaps);
    if (static_cast<Index>(e.pivots.size()) < n) return T(0);
    const T d = e.reduced(n - 1, n - 1);
    return swaps % 2 ? T(0) - d : d;
  }
  detail::DenseMatrix<T> m = a.eval();
  T det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    double best = -1.0;
    for (Index i = c; i < n; ++i) {
      const double mag = FieldTraits<T>::magnitude(m(i, c));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    if (best == 0.0) return T(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = T(0) - det;
    }
    det = det * m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      const T f = m(i, c) / m(c, c);
      for (Index j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// Unique solution of a x = b for square a; SingularError carries rank(a).
template <typename DerivedA, typename DerivedB>
detail::DenseMatrix<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                     const Eigen::MatrixBase<DerivedB>& b, Tolerance tol = {}) {
  using T = typename DerivedA::Scalar;
  if (a.rows() != a.cols()) throw DimensionError("solve: matrix must be square");
  if (b.rows() != a.rows()) throw DimensionError("solve: right-hand side has wrong length");
  const Index n = a.rows();
  detail::DenseMatrix<T> aug(n, n + b.cols());
  aug << a, b;
  const auto e = detail::rref(aug, tol);
  Index rank_a = 0;
  for (Index c : e.pivots) rank_a += c < n ? 1 : 0;
  if (rank_a < n) throw SingularError("solve: singular matrix of rank " + std::to_string(rank_a), rank_a);
  return e.reduced.rightCols(b.cols());
}

template <typename Derived>
detail::DenseMatrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& a, Tolerance tol = {}) {
  using T = typename Derived::Scalar;
  return solve(a, detail::DenseMatrix<T>::Identity(a.rows(), a.rows()), tol);
}

}  // namespace ado
