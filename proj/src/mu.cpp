#include "ado/mu.hpp"

#include <algorithm>
#include <sstream>

namespace ado {

std::string to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::AbelianFormula: return "abelian-formula";
    case BoundRule::TwoStepCenter: return "two-step-center";
    case BoundRule::Filiform: return "filiform";
    case BoundRule::TwoSolvableCodimOne: return "two-solvable-codim-one";
    case BoundRule::TwoDimFingerprint: return "two-dim-fingerprint";
    case BoundRule::DimensionCount: return "dimension-count";
    case BoundRule::SearchEvidence: return "search-evidence";
    case BoundRule::Witness: return "witness";
    case BoundRule::Adjoint: return "adjoint";
  }
  return "unknown";
}

std::string to_string(Grade grade) {
  switch (grade) {
    case Grade::Proven: return "proven";
    case Grade::Evidence: return "evidence";
    case Grade::Open: return "open";
  }
  return "unknown";
}

int bound_abelian(int n) {
  if (n < 1) throw DomainError("bound_abelian: dimension must be positive");
  if (n == 1) return 1;
  // Least m with m^2 >= 4(n - 1).
  const long target = 4L * (n - 1);
  long m = 0;
  while (m * m < target) ++m;
  return static_cast<int>(m);
}

int bound_abelian(const LieAlgebra& g, Tolerance tol) {
  if (!invariants(g, tol).abelian) throw RuleNotApplicable("abelian formula: algebra is not abelian");
  return bound_abelian(g.dim());
}

int bound_two_step(const LieAlgebra& g, Tolerance tol) {
  const auto inv = invariants(g, tol);
  if (!inv.two_step_one_dim_center || g.dim() % 2 == 0) {
    throw RuleNotApplicable("two-step rule: needs odd dimension, nilpotency class 2 and a 1-dimensional center");
  }
  return (g.dim() + 3) / 2;
}

int bound_filiform(const LieAlgebra& g, Tolerance tol) {
  const auto inv = invariants(g, tol);
  if (!inv.filiform) throw RuleNotApplicable("filiform rule: algebra is not filiform");
  if (!inv.two_solvable && g.dim() >= 10) {
    throw RuleNotApplicable("filiform rule: needs an abelian derived algebra or dimension below 10");
  }
  return g.dim();
}

int bound_two_solvable(const LieAlgebra& g, Tolerance tol) {
  const auto inv = invariants(g, tol);
  if (g.dim() > 4 || !inv.two_solvable || inv.derived_dim != g.dim() - 1) {
    throw RuleNotApplicable("two-solvable rule: needs dim <= 4 and an abelian derived algebra of codimension 1");
  }
  return g.dim();
}

namespace {

struct Fingerprint {
  int dim;
  int center_dim;
  std::vector<int> derived;
  std::vector<int> lower_central;
  bool solvable;
  bool nilpotent;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const LieAlgebra& g, Tolerance tol) {
  const auto inv = invariants(g, tol);
  return {inv.dim, inv.center_dim, inv.derived, inv.lower_central, inv.solvable, inv.nilpotent};
}

const std::vector<Fingerprint>& two_dim_fingerprints() {
  static const std::vector<Fingerprint> prints = [] {
    auto vec = [](int n, std::initializer_list<std::pair<int, int>> terms) {
      Vector v = Vector::Zero(n);
      for (auto [k, c] : terms) v(k) = Scalar(c);
      return v;
    };
    const LieAlgebra r2("r2", 2, {{0, 1, vec(2, {{0, 1}})}});
    const LieAlgebra sl2("sl2", 3, {{0, 1, vec(3, {{2, 1}})}, {0, 2, vec(3, {{0, -2}})}, {1, 2, vec(3, {{1, 2}})}});
    const LieAlgebra c("C", 1);
    std::vector<Fingerprint> out;
    for (const auto& g : {LieAlgebra("C^2", 2), r2, direct_sum(r2, c), sl2, direct_sum(sl2, c)})
      out.push_back(fingerprint(g, {}));
    return out;
  }();
  return prints;
}

}  // namespace

std::optional<int> bound_two_dim_fingerprint(const LieAlgebra& g, Tolerance tol) {
  // A 1-dimensional algebra embeds in gl(1); the rule only separates 2 from 3.
  if (g.dim() < 2) return std::nullopt;
  if (g.dim() > 4) return 3;
  const Fingerprint fp = fingerprint(g, tol);
  for (const auto& known : two_dim_fingerprints())
    if (known == fp) return std::nullopt;
  return 3;
}

int bound_dimension_count(const LieAlgebra& g) {
  int m = 1;
  while (m * m < g.dim()) ++m;
  return m;
}

mpz_class partition_count(int j) {
  if (j < 0) return 0;
  std::vector<mpz_class> p(static_cast<std::size_t>(j + 1), 0);
  p[0] = 1;
  for (int part = 1; part <= j; ++part)
    for (int s = part; s <= j; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(j)];
}

CoarseBounds coarse_bounds(int n, int k) {
  if (n < 1) throw DomainError("coarse_bounds: dimension must be positive");
  CoarseBounds out;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  out.solvable = 1 + n + power;
  if (k >= 1 && k < n) {
    mpz_class sum = 0;
    for (int j = 0; j <= k; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - j), static_cast<unsigned long>(k - j));
      sum += binom * partition_count(j);
    }
    out.nilpotent = sum;
  }
  return out;
}

double SearchReport::best_residual() const {
  return residuals.empty() ? 0.0 : *std::min_element(residuals.begin(), residuals.end());
}

MuCertificate mu_certify(const LieAlgebra& g, const std::optional<Representation>& witness,
                         const CertifyOptions& options) {
  const Tolerance tol = options.tol;
  MuCertificate cert;
  cert.algebra = g.name();
  const int n = g.dim();

  cert.lower = bound_dimension_count(g);
  cert.lower_rule = BoundRule::DimensionCount;
  cert.upper = n + 1;
  cert.upper_rule = BoundRule::Witness;
  bool upper_known = false;
  auto raise_lower = [&](int value, BoundRule rule) {
    if (value > cert.lower) {
      cert.lower = value;
      cert.lower_rule = rule;
    }
  };
  auto lower_upper = [&](int value, BoundRule rule) {
    if (!upper_known || value < cert.upper) {
      cert.upper = value;
      cert.upper_rule = rule;
      upper_known = true;
    }
  };

  // Rules that determine the value outright bound both sides.
  const std::pair<BoundRule, int (*)(const LieAlgebra&, Tolerance)> exact_rules[] = {
      {BoundRule::AbelianFormula, [](const LieAlgebra& a, Tolerance t) { return bound_abelian(a, t); }},
      {BoundRule::TwoStepCenter, &bound_two_step},
      {BoundRule::Filiform, &bound_filiform},
  };
  for (const auto& [rule, fn] : exact_rules) {
    try {
      const int value = fn(g, tol);
      raise_lower(value, rule);
      lower_upper(value, rule);
      cert.notes.push_back(to_string(rule) + " gives " + std::to_string(value));
    } catch (const RuleNotApplicable&) {
    }
  }
  try {
    const int value = bound_two_solvable(g, tol);
    raise_lower(value, BoundRule::TwoSolvableCodimOne);
    cert.notes.push_back("two-solvable-codim-one gives >= " + std::to_string(value));
  } catch (const RuleNotApplicable&) {
  }
  if (auto value = bound_two_dim_fingerprint(g, tol)) {
    raise_lower(*value, BoundRule::TwoDimFingerprint);
    cert.notes.push_back("two-dim-fingerprint gives >= " + std::to_string(*value));
  }

  if (witness) {
    if (!same_structure(witness->algebra(), g, tol)) {
      throw PreconditionError("mu_certify: witness is a representation of a different algebra");
    }
    if (!check_homomorphism(*witness, tol).ok || !check_faithful(*witness, tol).ok) {
      throw PreconditionError("mu_certify: witness is not a faithful representation");
    }
    lower_upper(witness->dimension(), BoundRule::Witness);
    if (cert.upper_rule == BoundRule::Witness) cert.witness = witness;
  }
  if (center(g, tol).cols() == 0) {
    const BoundRule before = cert.upper_rule;
    lower_upper(n, BoundRule::Adjoint);
    if (cert.upper_rule == BoundRule::Adjoint && before != BoundRule::Adjoint) cert.witness = adjoint_rep(g);
  }
  if (!upper_known) {
    throw PreconditionError("mu_certify: no upper bound available; supply a faithful witness");
  }
  if (cert.lower > cert.upper) {
    std::ostringstream os;
    os << "mu_certify: lower bound " << cert.lower << " (" << to_string(cert.lower_rule) << ") exceeds upper bound "
       << cert.upper << " (" << to_string(cert.upper_rule) << ")";
    throw InconsistencyError(os.str());
  }

  bool used_search = false;
  if (cert.lower < cert.upper && options.run_search) {
    if (!invariants(g, tol).solvable) {
      cert.notes.push_back("gap left open: search requires a solvable algebra");
    } else {
      for (int m = cert.lower; m < cert.upper; ++m) {
        SearchReport report = search_faithful(g, m, options.search);
        const bool evidence = !report.found && report.restarts >= options.evidence_restarts &&
                              report.best_residual() > options.evidence_threshold;
        cert.searches.push_back(report);
        if (report.found) {
          cert.upper = m;
          cert.upper_rule = BoundRule::Witness;
          cert.witness = report.witness;
          cert.notes.push_back("search found a witness of dimension " + std::to_string(m));
          break;
        }
        if (!evidence) {
          cert.notes.push_back("search at dimension " + std::to_string(m) + " inconclusive");
          break;
        }
        cert.lower = m + 1;
        cert.lower_rule = BoundRule::SearchEvidence;
        used_search = true;
        std::ostringstream os;
        os << "no faithful representation of dimension " << m << " in " << report.restarts
           << " restarts (best residual " << report.best_residual() << ")";
        cert.notes.push_back(os.str());
      }
    }
  }

  if (!cert.settled()) {
    cert.grade = Grade::Open;
  } else {
    cert.grade = used_search && cert.lower_rule == BoundRule::SearchEvidence ? Grade::Evidence : Grade::Proven;
  }
  return cert;
}

}  // namespace ado
