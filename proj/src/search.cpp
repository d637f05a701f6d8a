#include <Eigen/Dense>
#include <random>

#include "ado/mu.hpp"

namespace ado {

namespace {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

constexpr double kFoundResidual = 1e-10;
constexpr double kWitnessTolerance = 1e-6;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Objective for one (algebra, m) pair. Parameters are the real and imaginary
/// parts of the upper-triangular entries of each image.
class Problem {
 public:
  Problem(const LieAlgebra& g, int m, const SearchOptions& options)
      : n_(g.dim()), m_(m), tri_(m * (m + 1) / 2), floor_(options.singular_floor), box_(options.box) {
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) slots_.push_back({a, b});
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        std::vector<cd> c(static_cast<std::size_t>(n_));
        for (int k = 0; k < n_; ++k) c[static_cast<std::size_t>(k)] = g.constant(i, j, k).to_complex();
        pairs_.push_back({i, j, std::move(c)});
      }
  }

  int parameters() const { return 2 * n_ * tri_; }
  int rows() const { return static_cast<int>(pairs_.size()) * 2 * tri_ + 1 + parameters(); }

  std::vector<CMat> images(const RVec& theta) const {
    std::vector<CMat> x(static_cast<std::size_t>(n_), CMat::Zero(m_, m_));
    for (int k = 0; k < n_; ++k)
      for (int t = 0; t < tri_; ++t) {
        const int p = 2 * (k * tri_ + t);
        x[static_cast<std::size_t>(k)](slots_[t].first, slots_[t].second) = cd(theta(p), theta(p + 1));
      }
    return x;
  }

  /// Residual vector, and its Jacobian when `jac` is non-null.
  RVec evaluate(const RVec& theta, RMat* jac) const {
    const auto x = images(theta);
    RVec r = RVec::Zero(rows());
    if (jac) *jac = RMat::Zero(rows(), parameters());
    int row = 0;
    for (const auto& pr : pairs_) {
      const CMat& xi = x[static_cast<std::size_t>(pr.i)];
      const CMat& xj = x[static_cast<std::size_t>(pr.j)];
      CMat res = xi * xj - xj * xi;
      for (int k = 0; k < n_; ++k) res -= pr.c[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
      for (int t = 0; t < tri_; ++t) {
        const cd v = res(slots_[t].first, slots_[t].second);
        r(row + 2 * t) = v.real();
        r(row + 2 * t + 1) = v.imag();
      }
      if (jac) {
        for (int k = 0; k < n_; ++k)
          for (int s = 0; s < tri_; ++s) {
            const auto [a, b] = slots_[s];
            // d res for dX_k = E_ab.
            CMat d = CMat::Zero(m_, m_);
            if (k == pr.i) {
              d.row(a) += xj.row(b);
              d.col(b) -= xj.col(a);
            }
            if (k == pr.j) {
              d.col(b) += xi.col(a);
              d.row(a) -= xi.row(b);
            }
            d(a, b) -= pr.c[static_cast<std::size_t>(k)];
            const int p = 2 * (k * tri_ + s);
            for (int t = 0; t < tri_; ++t) {
              const cd v = d(slots_[t].first, slots_[t].second);
              // Real parameter moves by v, imaginary parameter by i v.
              (*jac)(row + 2 * t, p) = v.real();
              (*jac)(row + 2 * t + 1, p) = v.imag();
              (*jac)(row + 2 * t, p + 1) = -v.imag();
              (*jac)(row + 2 * t + 1, p + 1) = v.real();
            }
          }
      }
      row += 2 * tri_;
    }

    // Faithfulness hinge on the smallest singular value of the stacked images.
    CMat stacked(m_ * m_, n_);
    for (int k = 0; k < n_; ++k) stacked.col(k) = x[static_cast<std::size_t>(k)].reshaped();
    if (m_ * m_ < n_) {
      r(row) = floor_;
    } else {
      Eigen::JacobiSVD<CMat> svd(stacked, Eigen::ComputeThinU | Eigen::ComputeThinV);
      const double sigma = svd.singularValues()(n_ - 1);
      if (sigma < floor_) {
        r(row) = floor_ - sigma;
        if (jac) {
          const auto u = svd.matrixU().col(n_ - 1);
          const auto v = svd.matrixV().col(n_ - 1);
          for (int k = 0; k < n_; ++k)
            for (int s = 0; s < tri_; ++s) {
              const int idx = slots_[s].second * m_ + slots_[s].first;
              const cd w = std::conj(u(idx)) * v(k);
              const int p = 2 * (k * tri_ + s);
              (*jac)(row, p) = -w.real();
              (*jac)(row, p + 1) = w.imag();
            }
        }
      }
    }
    ++row;

    for (int p = 0; p < parameters(); ++p, ++row) {
      const double excess = std::abs(theta(p)) - box_;
      if (excess > 0) {
        r(row) = excess;
        if (jac) (*jac)(row, p) = theta(p) > 0 ? 1.0 : -1.0;
      }
    }
    return r;
  }

 private:
  struct Pair {
    int i;
    int j;
    std::vector<cd> c;
  };
  int n_;
  int m_;
  int tri_;
  double floor_;
  double box_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<Pair> pairs_;
};

/// Levenberg-Marquardt from `theta`; returns the final residual norm.
double minimize(const Problem& problem, RVec& theta, int max_iterations) {
  RMat jac;
  RVec r = problem.evaluate(theta, &jac);
  double cost = r.squaredNorm();
  double mu = 1e-3;
  for (int it = 0; it < max_iterations && cost > 1e-30; ++it) {
    const RMat a = jac.transpose() * jac;
    const RVec grad = jac.transpose() * r;
    bool accepted = false;
    while (mu < 1e12) {
      RMat damped = a;
      damped.diagonal().array() += mu * (a.diagonal().array() + 1e-9);
      const RVec step = damped.ldlt().solve(-grad);
      const RVec trial = theta + step;
      const RVec r_trial = problem.evaluate(trial, nullptr);
      const double trial_cost = r_trial.squaredNorm();
      if (trial_cost < cost) {
        theta = trial;
        mu = std::max(mu / 3.0, 1e-15);
        accepted = true;
        break;
      }
      mu *= 4.0;
    }
    if (!accepted) break;
    r = problem.evaluate(theta, &jac);
    cost = r.squaredNorm();
  }
  return std::sqrt(cost);
}

Representation to_representation(const LieAlgebra& g, const std::vector<CMat>& images) {
  std::vector<Matrix> out;
  for (const auto& x : images) out.push_back(x.unaryExpr([](const cd& z) { return Scalar::approx(z); }));
  return Representation(to_approx(g), std::move(out));
}

}  // namespace

SearchReport search_faithful(const LieAlgebra& g, int m, const SearchOptions& options) {
  if (m < 1) throw DomainError("search_faithful: target dimension must be positive");
  if (!invariants(g).solvable) throw PreconditionError("search_faithful: the triangular ansatz needs a solvable algebra");
  SearchReport report;
  report.target_dim = m;
  report.seed = options.seed;
  const Problem problem(g, m, options);
  for (int restart = 0; restart < options.restarts; ++restart) {
    std::mt19937_64 rng(splitmix(options.seed + static_cast<std::uint64_t>(restart)));
    RVec theta(problem.parameters());
    for (int p = 0; p < theta.size(); ++p) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      theta(p) = -2.0 + 4.0 * unit;
    }
    const double residual = minimize(problem, theta, options.max_iterations);
    report.residuals.push_back(residual);
    ++report.restarts;
    if (residual < kFoundResidual && !report.found) {
      Representation candidate = to_representation(g, problem.images(theta));
      const Tolerance tol{kWitnessTolerance};
      if (check_homomorphism(candidate, tol).ok && check_faithful(candidate, tol).ok) {
        report.found = true;
        report.witness = std::move(candidate);
        if (options.stop_when_found) break;
      }
    }
  }
  return report;
}

}  // namespace ado
