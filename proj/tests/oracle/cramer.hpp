#pragma once

// Brute-force reference for the induced product: every coordinate of
// e_i * e_j comes from Cramer's rule with cofactor-expansion determinants.
// Shares nothing with the elimination code in the library.

#include <vector>

#include "ado/affine.hpp"

namespace oracle {

using ado::Scalar;

inline Scalar laplace_det(const std::vector<std::vector<Scalar>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Scalar det(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_exact_zero()) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const Scalar term = a[0][c] * laplace_det(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

inline std::vector<std::vector<Scalar>> rows_of(const ado::Matrix& m) {
  std::vector<std::vector<Scalar>> out(static_cast<std::size_t>(m.rows()));
  for (ado::Index r = 0; r < m.rows(); ++r)
    for (ado::Index c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  return out;
}

/// Solves ev x = b by Cramer's rule.
inline std::vector<Scalar> cramer(const ado::Matrix& ev, const std::vector<Scalar>& b) {
  const auto a = rows_of(ev);
  const Scalar det = laplace_det(a);
  std::vector<Scalar> x;
  for (std::size_t k = 0; k < a.size(); ++k) {
    auto replaced = a;
    for (std::size_t r = 0; r < a.size(); ++r) replaced[r][k] = b[r];
    x.push_back(laplace_det(replaced) / det);
  }
  return x;
}

/// products[i][j] = coordinates of e_i * e_j, defined by ev(e_i * e_j) = rho(e_i) ev(e_j).
inline std::vector<std::vector<std::vector<Scalar>>> induced_products(const ado::AffineRep& phi) {
  const ado::Matrix ev = ado::evaluation_matrix(phi);
  const int n = static_cast<int>(ev.cols());
  std::vector<std::vector<std::vector<Scalar>>> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> b(n, Scalar(0));
      for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) b[r] = b[r] + phi.rho.image(i)(r, k) * ev(k, j);
      out[i].push_back(cramer(ev, b));
    }
  return out;
}

}  // namespace oracle
