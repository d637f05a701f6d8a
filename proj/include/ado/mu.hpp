#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ado/representation.hpp"

namespace ado {

/// Provenance of a bound on the minimal faithful dimension.
enum class BoundRule {
  AbelianFormula,      // ceil(2 sqrt(n - 1)) for abelian algebras, 1 for n = 1
  TwoStepCenter,       // (n + 3) / 2 for 2-step nilpotent with 1-dim center
  Filiform,            // n for filiform with abelian derived algebra or n < 10
  TwoSolvableCodimOne, // >= n when [g,g] is abelian of dimension n - 1, n <= 4
  TwoDimFingerprint,   // >= 3 when g matches none of the algebras with mu = 2
  DimensionCount,      // >= ceil(sqrt(n)) since gl(m) has dimension m^2
  SearchEvidence,      // numeric search found no faithful representation below
  Witness,             // upper bound from a verified representation
  Adjoint,             // upper bound n from the adjoint of a centerless algebra
};

std::string to_string(BoundRule rule);

enum class Grade { Proven, Evidence, Open };
std::string to_string(Grade grade);

int bound_abelian(int n);
int bound_abelian(const LieAlgebra& g, Tolerance tol = {});
int bound_two_step(const LieAlgebra& g, Tolerance tol = {});
int bound_filiform(const LieAlgebra& g, Tolerance tol = {});
int bound_two_solvable(const LieAlgebra& g, Tolerance tol = {});
/// 3 when the invariant fingerprint (dimension, center, derived and lower
/// central series) rules out every algebra with a 2-dimensional faithful
/// representation; nullopt when it might be one of them.
std::optional<int> bound_two_dim_fingerprint(const LieAlgebra& g, Tolerance tol = {});
int bound_dimension_count(const LieAlgebra& g);

struct CoarseBounds {
  /// 1 + n + n^n.
  mpz_class solvable;
  /// sum_{j=0}^{k} C(n-j, k-j) p(j); set when 1 <= k < n.
  std::optional<mpz_class> nilpotent;
};
CoarseBounds coarse_bounds(int n, int nilpotency_class = 0);
mpz_class partition_count(int j);

struct SearchOptions {
  int restarts = 200;
  std::uint64_t seed = 20240601;
  int max_iterations = 200;
  /// Hinge level for the smallest singular value of the stacked images.
  double singular_floor = 0.25;
  /// Entries beyond this magnitude are penalized.
  double box = 4.0;
  /// Stop at the first restart that yields a verified witness.
  bool stop_when_found = true;
};

struct SearchReport {
  int target_dim = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  /// Final objective norm of each restart, in restart order.
  std::vector<double> residuals;
  bool found = false;
  std::optional<Representation> witness;
  double best_residual() const;
};

/// Levenberg-Marquardt over upper-triangular complex m x m images with random
/// restarts. The objective stacks the real and imaginary parts of every
/// homomorphism residual, the hinge max(0, floor - sigma_min) on the stacked
/// images, and max(0, |theta| - box) per parameter. A restart counts as found
/// when its objective is below 1e-10 and the witness passes both checks at
/// tolerance 1e-6. Requires a solvable algebra.
SearchReport search_faithful(const LieAlgebra& g, int m, const SearchOptions& options = {});

struct MuCertificate {
  std::string algebra;
  int lower = 0;
  BoundRule lower_rule = BoundRule::DimensionCount;
  int upper = 0;
  BoundRule upper_rule = BoundRule::Witness;
  std::optional<Representation> witness;
  Grade grade = Grade::Open;
  std::vector<std::string> notes;
  std::vector<SearchReport> searches;
  bool settled() const { return lower == upper; }
};

struct CertifyOptions {
  bool run_search = true;
  SearchOptions search;
  Tolerance tol;
  /// Required number of restarts, each above this residual, to accept a
  /// search as evidence of infeasibility.
  int evidence_restarts = 200;
  double evidence_threshold = 1e-6;
};

/// Combines every applicable lower-bound rule with the witness (or adjoint)
/// upper bound, then searches the remaining gap when allowed. Throws
/// PreconditionError for an invalid witness and InconsistencyError when the
/// bounds cross.
MuCertificate mu_certify(const LieAlgebra& g, const std::optional<Representation>& witness = std::nullopt,
                         const CertifyOptions& options = {});

}  // namespace ado
