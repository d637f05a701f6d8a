#include "ado/tables.hpp"

#include <sstream>

namespace ado {

namespace {

std::string residual_text(double r) {
  std::ostringstream os;
  os.precision(3);
  os << r;
  return os.str();
}

std::string pair_text(int i, int j) { return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")"; }

class Recorder {
 public:
  explicit Recorder(TablesReport& report) : report_(report) {}
  bool add(std::string section, std::string subject, std::string check, bool ok, std::string detail = {}) {
    report_.checks.push_back({std::move(section), std::move(subject), std::move(check), ok, std::move(detail)});
    return ok;
  }

 private:
  TablesReport& report_;
};

void check_catalog(const TablesOptions& options, Recorder& rec) {
  for (const auto& e : table_entries(options.samples, options.sample_seed)) {
    const std::string label = entry_label(e);
    try {
      const LieAlgebra g = instantiate(e.id, e.params);
      bool antisymmetric = true;
      for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
          for (int k = 0; k < g.dim(); ++k)
            antisymmetric = antisymmetric && (g.constant(i, j, k) + g.constant(j, i, k)).is_exact_zero();
      rec.add("catalog", label, "antisymmetry", antisymmetric);
      const auto jacobi = jacobi_check(g, Tolerance{0.0});
      rec.add("catalog", label, "jacobi", jacobi.ok, g.is_exact() ? "exact" : "approximate");
    } catch (const Error& ex) {
      rec.add("catalog", label, "instantiate", false, ex.what());
    }
  }
}

void check_rep(const std::string& section, const std::string& label, const Representation& rho, int expected_dim,
               Tolerance tol, Recorder& rec) {
  const auto hom = check_homomorphism(rho, tol);
  std::string detail = rho.is_exact() ? "exact" : "residual " + residual_text(hom.max_residual);
  for (const auto& f : hom.failures) detail += "; fails on " + pair_text(f.i, f.j);
  rec.add(section, label, "homomorphism", hom.ok, detail);
  if (hom.ok) {
    const auto faithful = check_faithful(rho, tol);
    rec.add(section, label, "faithful", faithful.ok,
            faithful.ok ? "" : "kernel dimension " + std::to_string(faithful.kernel.cols()));
  }
  rec.add(section, label, "dimension", rho.dimension() == expected_dim,
          std::to_string(rho.dimension()) + " (expected " + std::to_string(expected_dim) + ")");
}

void check_representations(const TablesOptions& options, Recorder& rec) {
  for (const auto& e : table_entries(options.samples, options.sample_seed)) {
    const std::string label = entry_label(e);
    try {
      check_rep("minimal-representations", label, minimal_representation(e.id, e.params), published_mu(e.id, e.params),
                options.tol, rec);
      if (has_square_entry(e.id, e.params)) {
        check_rep("square-representations", label, square_entry(e.id, e.params).rep, family(e.id).dim, options.tol,
                  rec);
      }
    } catch (const Error& ex) {
      rec.add("minimal-representations", label, "construct", false, ex.what());
    }
  }
}

void certify_all(const TablesOptions& options, TablesReport& report, Recorder& rec) {
  CertifyOptions copts;
  copts.run_search = options.run_search;
  copts.search.restarts = options.restarts;
  copts.search.seed = options.seed;
  copts.search.stop_when_found = true;
  copts.evidence_restarts = std::min(200, options.restarts);
  copts.tol = options.tol;
  for (const auto& e : table_entries(options.samples, options.sample_seed)) {
    const std::string label = entry_label(e);
    const int published = published_mu(e.id, e.params);
    try {
      MuCertificate cert = mu_certify(instantiate(e.id, e.params), minimal_representation(e.id, e.params), copts);
      bool ok;
      std::string detail;
      if (cert.settled()) {
        ok = cert.lower == published;
        detail = "mu = " + std::to_string(cert.lower) + " (" + to_string(cert.grade) + ", lower bound by " +
                 to_string(cert.lower_rule) + ")";
      } else {
        // Without the search the gap stays open; consistency is all we ask.
        ok = !options.run_search && cert.lower <= published && published <= cert.upper;
        detail = std::to_string(cert.lower) + " <= mu <= " + std::to_string(cert.upper) + " (open)";
      }
      rec.add("mu", label, "published value", ok, detail);
      report.certificates.push_back({label, published, std::move(cert)});
    } catch (const Error& ex) {
      rec.add("mu", label, "certify", false, ex.what());
    }
  }
  try {
    const CoarseBounds b = coarse_bounds(4, 3);
    rec.add("mu", "coarse bounds", "nilpotent (n=4, k=3)", b.nilpotent && *b.nilpotent == 14,
            b.nilpotent ? b.nilpotent->get_str() : "none");
  } catch (const Error& ex) {
    rec.add("mu", "coarse bounds", "evaluate", false, ex.what());
  }
}

void check_etale(const TablesOptions& options, TablesReport& report, Recorder& rec) {
  const Tolerance tol = options.tol;
  for (const auto& e : table_entries(options.samples, options.sample_seed)) {
    const std::string label = entry_label(e);
    if (!family(e.id).admits_lsa) {
      rec.add("etale", label, "compatible structure", true, "none exists; recorded as catalog metadata");
      continue;
    }
    try {
      const LieAlgebra g = instantiate(e.id, e.params);
      const AffineRep phi = construct_etale(square_representation(e.id, e.params), tol);
      rec.add("etale", label, "translation invertible", phi.etale);
      rec.add("etale", label, "cocycle", check_cocycle(phi, tol).ok);
      const LeftSymmetricAlgebra derived = induced_lsa(phi, tol);
      const auto sym = check_left_symmetric(derived, tol);
      rec.add("etale", label, "left-symmetric", sym.ok,
              sym.ok ? "" : std::to_string(sym.failures.size()) + " failing triples");
      if (!sym.ok) continue;
      rec.add("etale", label, "sub-adjacent bracket", same_structure(sub_adjacent(derived, tol), g, tol));
      rec.add("etale", label, "zero kernel ideal", kernel_ideal(derived, tol).cols() == 0);
      const std::string location = has_minimal_lsa(e.id, e.params) ? "products beside the minimal representations"
                                                                  : "products beside the same-dimension representations";
      auto diffs = diff_products(location + ", " + e.id + " row", label, derived, square_lsa(e.id, e.params), tol);
      rec.add("etale", label, "matches printed products", true,
              diffs.empty() ? "identical" : std::to_string(diffs.size()) + " differing products recorded as errata");
      for (auto& d : diffs) report.errata.push_back(std::move(d));
    } catch (const Error& ex) {
      rec.add("etale", label, "construct", false, ex.what());
    }
  }
  // A centerless non-nilpotent algebra cannot act etale through its adjoint.
  try {
    construct_etale(adjoint_rep(instantiate("r2")), tol);
    rec.add("etale", "r2 adjoint", "not etale", false, "construction unexpectedly succeeded");
  } catch (const NotEtaleError& ex) {
    rec.add("etale", "r2 adjoint", "not etale", true, "translation rank " + std::to_string(ex.rank()));
  }
}

std::vector<Erratum> printed_errata(const TablesOptions& options) {
  std::vector<Erratum> out;
  {
    const auto report = jacobi_check(printed::sl2_as_printed());
    std::string recomputed = "Jacobi holds";
    if (!report.ok) {
      const auto& f = report.failures.front();
      recomputed = "Jacobi residual " + describe(f.residual) + " on (e" + std::to_string(f.i + 1) + ",e" +
                   std::to_string(f.j + 1) + ",e" + std::to_string(f.k + 1) + ")";
    }
    out.push_back({"3-dimensional classification, sl2 row", "sl2", "[e1,e2]=e3, [e1,e3]=-2e2, [e2,e3]=2e2", recomputed,
                   "use [e1,e3]=-2e1, as in the sl2+C row; the listed representation satisfies it"});
  }
  for (const auto& p : sample_parameters("g8", options.samples, options.sample_seed)) {
    const std::string label = entry_label({"g8", p});
    std::string printed_check;
    try {
      unit_matrix(3, 0, 3);
      printed_check = "e14 exists";
    } catch (const DimensionError&) {
      printed_check = "e14 lies outside gl(3)";
    }
    const bool passes = check_homomorphism(minimal_representation("g8", p), options.tol).ok;
    out.push_back({"minimal representations, g8 row (alpha != 1/4)", label, "e4 -> e14 (" + printed_check + ")",
                   std::string("e4 -> e13: homomorphism ") + (passes ? "passes" : "fails"), "read as e13"});
    const Scalar x = g8_constants(p.at("alpha")).x2;
    const auto literal = check_homomorphism(printed::g8_square(p.at("alpha"), 1), options.tol);
    const auto scaled = check_homomorphism(printed::g8_square(p.at("alpha"), x), options.tol);
    std::string failing;
    for (const auto& f : literal.failures) failing += (failing.empty() ? "" : ", ") + pair_text(f.i, f.j);
    out.push_back({"same-dimension representations, g8 row", label,
                   "rho(e3) = (1-x)e12 + x_{24} + (1-x)e34; as e24: " +
                       (literal.ok ? std::string("passes") : "fails on " + failing),
                   std::string("x e24: homomorphism ") + (scaled.ok ? "passes" : "fails"), "read as x*e24"});
  }
  return out;
}

}  // namespace

std::string describe(const Vector& v) {
  std::ostringstream os;
  bool first = true;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k).is_zero()) continue;
    const std::string c = v(k).to_string();
    if (!first) os << " + ";
    if (c == "1") {
      os << "e" << k + 1;
    } else if (c == "-1") {
      os << "-e" << k + 1;
    } else if (c.find_first_of("+i", 1) == std::string::npos) {
      // Real coefficients need no parentheses.
      os << c << "e" << k + 1;
    } else {
      os << "(" << c << ")e" << k + 1;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<Erratum> diff_products(const std::string& location, const std::string& subject,
                                   const LeftSymmetricAlgebra& derived, const LeftSymmetricAlgebra& printed,
                                   Tolerance tol) {
  std::vector<Erratum> out;
  for (int i = 0; i < derived.dim(); ++i)
    for (int j = 0; j < derived.dim(); ++j) {
      const Vector& d = derived.product(i, j);
      const Vector& p = printed.product(i, j);
      if (is_zero(Matrix(d - p), tol)) continue;
      const std::string product = "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1);
      out.push_back({location, subject, product + " = " + describe(p),
                     product + " = " + describe(d), "derived product is authoritative"});
    }
  return out;
}

bool TablesReport::ok() const { return failures() == 0; }

int TablesReport::failures() const {
  int count = 0;
  for (const auto& c : checks) count += c.ok ? 0 : 1;
  return count;
}

std::vector<Erratum> collect_errata(const TablesOptions& options) {
  TablesReport scratch;
  scratch.options = options;
  Recorder rec(scratch);
  std::vector<Erratum> out = printed_errata(options);
  check_etale(options, scratch, rec);
  for (auto& e : scratch.errata) out.push_back(std::move(e));
  return out;
}

TablesReport check_tables(const TablesOptions& options) {
  TablesReport report;
  report.options = options;
  Recorder rec(report);
  check_catalog(options, rec);
  {
    const auto sl2 = jacobi_check(printed::sl2_as_printed());
    rec.add("catalog", "sl2 (as printed)", "jacobi fails as expected", !sl2.ok,
            sl2.ok ? "" : "residual " + describe(sl2.failures.front().residual));
  }
  check_representations(options, rec);
  certify_all(options, report, rec);
  report.errata = printed_errata(options);
  check_etale(options, report, rec);
  return report;
}

io::json to_json(const Erratum& e) {
  return {{"location", e.location},
          {"subject", e.subject},
          {"printed", e.printed},
          {"recomputed", e.recomputed},
          {"resolution", e.resolution}};
}

io::json to_json(const TablesReport& report, const std::string& timestamp) {
  io::json checks = io::json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"section", c.section}, {"subject", c.subject}, {"check", c.check}, {"ok", c.ok}, {"detail", c.detail}});
  }
  io::json certs = io::json::array();
  for (const auto& c : report.certificates) {
    io::json cj = io::to_json(c.certificate);
    cj["subject"] = c.subject;
    cj["published"] = c.published;
    // Witness matrices are reproducible from the catalog; keep the report compact.
    cj.erase("witness");
    for (auto& s : cj["searches"]) s.erase("witness");
    certs.push_back(std::move(cj));
  }
  io::json errata = io::json::array();
  for (const auto& e : report.errata) errata.push_back(to_json(e));
  return {{"kind", "report"},
          {"generated_at", timestamp},
          {"options",
           {{"run_search", report.options.run_search},
            {"restarts", report.options.restarts},
            {"seed", report.options.seed},
            {"samples", report.options.samples},
            {"tolerance", report.options.tol.epsilon}}},
          {"summary",
           {{"checks", report.checks.size()},
            {"failures", report.failures()},
            {"errata", report.errata.size()},
            {"ok", report.ok()}}},
          {"checks", std::move(checks)},
          {"certificates", std::move(certs)},
          {"errata", std::move(errata)}};
}

std::string render_text(const TablesReport& report) {
  std::ostringstream os;
  std::string section;
  for (const auto& c : report.checks) {
    if (c.section != section) {
      section = c.section;
      os << "== " << section << "\n";
    }
    os << (c.ok ? "  ok   " : "  FAIL ") << c.subject << ": " << c.check;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << "\n";
  }
  os << "== errata\n";
  for (const auto& e : report.errata) {
    os << "  " << e.subject << " (" << e.location << ")\n    printed:    " << e.printed
       << "\n    recomputed: " << e.recomputed << "\n    resolution: " << e.resolution << "\n";
  }
  os << "summary: " << report.checks.size() << " checks, " << report.failures() << " failures, "
     << report.errata.size() << " errata\n";
  return os.str();
}

}  // namespace ado
