#include "ado/linalg.hpp"

namespace ado {

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) sum += std::norm(a(i, j).to_complex());
  return std::sqrt(sum);
}

bool is_zero(const Matrix& a, Tolerance tol) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero(tol)) return false;
  return true;
}

Matrix to_approx(const Matrix& a) {
  return a.unaryExpr([](const Scalar& s) { return s.to_approx(); });
}

Matrix unit_matrix(Index m, Index i, Index j) {
  if (i < 0 || j < 0 || i >= m || j >= m) {
    throw DimensionError("unit_matrix: index (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") outside a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
  }
  Matrix e = Matrix::Zero(m, m);
  e(i, j) = Scalar(1);
  return e;
}

Matrix stack_columns(const std::vector<Matrix>& ms) {
  if (ms.empty()) return Matrix(0, 0);
  const Index rows = ms.front().size();
  Matrix out(rows, static_cast<Index>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (ms[k].size() != rows) throw DimensionError("stack_columns: matrices of different sizes");
    out.col(static_cast<Index>(k)) = ms[k].reshaped();
  }
  return out;
}

}  // namespace ado
