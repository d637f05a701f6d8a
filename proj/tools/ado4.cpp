// Command-line front end: catalog browsing, document verification, LSA
// derivation, minimal-dimension certificates and the full table check.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>

#include "ado/tables.hpp"

namespace {

using ado::io::json;

constexpr int kVerified = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct Global {
  std::string format = "json";
  double tol = 1e-9;
  ado::Tolerance tolerance() const { return ado::Tolerance{tol}; }
  bool text() const { return format == "text"; }
};

ado::Params parse_params(const std::vector<std::string>& raw) {
  ado::Params p;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ado::ParseError("--param expects key=value, got \"" + item + "\"");
    p[item.substr(0, eq)] = ado::Scalar::parse(item.substr(eq + 1));
  }
  return p;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json residual_json(const std::vector<ado::PairResidual>& failures) {
  json out = json::array();
  for (const auto& f : failures) {
    out.push_back({{"pair", {f.i + 1, f.j + 1}}, {"norm", f.norm}, {"residual", ado::io::matrix_to_json(f.residual)}});
  }
  return out;
}

json family_summary(const ado::Family& f) {
  return {{"id", f.id}, {"name", f.display}, {"dim", f.dim}, {"params", f.params}, {"domain", f.domain}};
}

int cmd_catalog_list(const Global& g) {
  if (g.text()) {
    for (const auto& f : ado::families()) {
      std::cout << f.id << "\t" << f.display << "\tdim " << f.dim;
      if (!f.domain.empty()) std::cout << "\t" << f.domain;
      std::cout << "\n";
    }
    return kVerified;
  }
  json list = json::array();
  for (const auto& f : ado::families()) list.push_back(family_summary(f));
  emit({{"kind", "catalog"}, {"families", std::move(list)}});
  return kVerified;
}

int cmd_catalog_show(const Global&, const std::string& id, const ado::Params& p) {
  const auto& f = ado::family(id);
  const ado::LieAlgebra g = ado::instantiate(id, p);
  json doc = family_summary(f);
  doc["algebra"] = ado::io::to_json(g, p);
  doc["mu"] = ado::published_mu(id, p);
  doc["minimal_representation"] = ado::io::to_json(ado::minimal_representation(id, p));
  if (ado::has_minimal_lsa(id, p)) doc["products"] = ado::io::to_json(ado::minimal_lsa(id, p));
  if (ado::has_square_entry(id, p)) {
    const auto e = ado::square_entry(id, p);
    doc["square_representation"] = ado::io::to_json(e.rep);
    doc["square_products"] = ado::io::to_json(e.lsa);
  }
  if (!f.admits_lsa) doc["note"] = "admits no compatible left-symmetric structure";
  emit(doc);
  return kVerified;
}

int cmd_verify_rep(const Global& g, const std::string& path) {
  const ado::Representation rho = ado::io::representation_from_json(ado::io::read_file(path));
  const auto hom = ado::check_homomorphism(rho, g.tolerance());
  json doc = {{"kind", "verification"},
              {"subject", "representation"},
              {"homomorphism", hom.ok},
              {"max_residual", hom.max_residual},
              {"failures", residual_json(hom.failures)}};
  bool ok = hom.ok;
  if (hom.ok) {
    const auto faithful = ado::check_faithful(rho, g.tolerance());
    doc["faithful"] = faithful.ok;
    json kernel = json::array();
    for (ado::Index c = 0; c < faithful.kernel.cols(); ++c) kernel.push_back(ado::io::vector_to_json(faithful.kernel.col(c)));
    doc["kernel"] = std::move(kernel);
    ok = faithful.ok;
  }
  doc["ok"] = ok;
  emit(doc);
  return ok ? kVerified : kMathFailure;
}

int cmd_verify_lsa(const Global& g, const std::string& path) {
  const ado::LeftSymmetricAlgebra a = ado::io::lsa_from_json(ado::io::read_file(path));
  const auto sym = ado::check_left_symmetric(a, g.tolerance());
  json failures = json::array();
  for (const auto& f : sym.failures) {
    failures.push_back({{"triple", {f.i + 1, f.j + 1, f.k + 1}}, {"residual", ado::io::vector_to_json(f.residual)}});
  }
  json doc = {{"kind", "verification"}, {"subject", "lsa"}, {"left_symmetric", sym.ok}, {"failures", failures}};
  if (sym.ok) {
    doc["sub_adjacent"] = ado::io::to_json(ado::sub_adjacent(a, g.tolerance()));
    doc["kernel_ideal_dim"] = ado::kernel_ideal(a, g.tolerance()).cols();
  }
  doc["ok"] = sym.ok;
  emit(doc);
  return sym.ok ? kVerified : kMathFailure;
}

int cmd_verify_affine(const Global& g, const std::string& path) {
  ado::AffineRep phi = ado::io::affine_from_json(ado::io::read_file(path));
  const auto hom = ado::check_homomorphism(phi.rho, g.tolerance());
  json doc = {{"kind", "verification"}, {"subject", "affine"}, {"homomorphism", hom.ok}};
  bool ok = hom.ok;
  if (hom.ok) {
    const auto cocycle = ado::check_cocycle(phi, g.tolerance());
    doc["cocycle"] = cocycle.ok;
    doc["cocycle_failures"] = residual_json(cocycle.failures);
    ok = cocycle.ok;
    const ado::Matrix ev = ado::evaluation_matrix(phi);
    const bool square = ev.rows() == ev.cols();
    const bool etale = square && ado::rank(ev, g.tolerance()) == ev.cols();
    doc["etale"] = etale;
    if (phi.etale && !etale) ok = false;
    if (ok && etale) {
      const auto lsa = ado::induced_lsa(phi, g.tolerance());
      doc["induced"] = ado::io::to_json(lsa);
      doc["left_symmetric"] = ado::check_left_symmetric(lsa, g.tolerance()).ok;
    }
  }
  doc["ok"] = ok;
  emit(doc);
  return ok ? kVerified : kMathFailure;
}

int cmd_derive_lsa(const Global& g, const std::string& id, const ado::Params& p, const std::string& rep_path) {
  ado::Representation rho;
  std::optional<ado::LeftSymmetricAlgebra> printed;
  std::string label = id;
  if (!rep_path.empty()) {
    rho = ado::io::representation_from_json(ado::io::read_file(rep_path));
  } else {
    const auto& f = ado::family(id);
    ado::instantiate(id, p);
    label = ado::entry_label({id, p});
    if (!f.admits_lsa) {
      emit({{"kind", "derivation"},
            {"subject", label},
            {"ok", false},
            {"reason", "no same-dimension etale construction; the algebra admits no compatible left-symmetric structure"}});
      return kMathFailure;
    }
    rho = ado::square_representation(id, p);
    printed = ado::square_lsa(id, p);
  }
  try {
    const ado::AffineRep phi = ado::construct_etale(rho, g.tolerance());
    const ado::LeftSymmetricAlgebra a = ado::induced_lsa(phi, g.tolerance());
    const auto sym = ado::check_left_symmetric(a, g.tolerance());
    json doc = ado::io::to_json(a);
    doc["subject"] = label;
    doc["left_symmetric"] = sym.ok;
    bool ok = sym.ok;
    if (sym.ok) {
      const bool compatible = ado::same_structure(ado::sub_adjacent(a, g.tolerance()), rho.algebra(), g.tolerance());
      doc["sub_adjacent_matches"] = compatible;
      doc["kernel_ideal_dim"] = ado::kernel_ideal(a, g.tolerance()).cols();
      ok = compatible;
    }
    if (printed) {
      json diff = json::array();
      for (const auto& e : ado::diff_products("printed products", label, a, *printed, g.tolerance())) {
        diff.push_back(ado::to_json(e));
      }
      doc["diff"] = std::move(diff);
    }
    doc["ok"] = ok;
    emit(doc);
    return ok ? kVerified : kMathFailure;
  } catch (const ado::NotEtaleError& ex) {
    emit({{"kind", "derivation"}, {"subject", label}, {"ok", false}, {"reason", ex.what()}, {"rank", ex.rank()}});
    return kMathFailure;
  }
}

int cmd_mu_certify(const Global& g, const std::string& id, const ado::Params& p, const ado::CertifyOptions& options) {
  const ado::LieAlgebra alg = ado::instantiate(id, p);
  const ado::MuCertificate cert = ado::mu_certify(alg, ado::minimal_representation(id, p), options);
  json doc = ado::io::to_json(cert);
  doc["subject"] = ado::entry_label({id, p});
  doc["published"] = ado::published_mu(id, p);
  emit(doc);
  const bool ok = cert.settled() && cert.lower == ado::published_mu(id, p);
  return ok ? kVerified : kMathFailure;
}

int cmd_mu_search(const Global&, const std::string& id, const ado::Params& p, int dim,
                  const ado::SearchOptions& options) {
  const ado::SearchReport report = ado::search_faithful(ado::instantiate(id, p), dim, options);
  json doc = ado::io::to_json(report);
  doc["subject"] = ado::entry_label({id, p});
  emit(doc);
  return kVerified;
}

int cmd_check_tables(const Global& g, const ado::TablesOptions& options) {
  const ado::TablesReport report = ado::check_tables(options);
  if (g.text()) {
    std::cout << ado::render_text(report);
  } else {
    emit(ado::to_json(report, utc_timestamp()));
  }
  return report.ok() ? kVerified : kMathFailure;
}

int cmd_errata(const Global& g, const ado::TablesOptions& options) {
  const auto errata = ado::collect_errata(options);
  if (g.text()) {
    for (const auto& e : errata) {
      std::cout << e.subject << " (" << e.location << ")\n  printed:    " << e.printed
                << "\n  recomputed: " << e.recomputed << "\n  resolution: " << e.resolution << "\n";
    }
  } else {
    json list = json::array();
    for (const auto& e : errata) list.push_back(ado::to_json(e));
    emit({{"kind", "errata"}, {"errata", std::move(list)}});
  }
  return kVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal faithful representations and left-symmetric structures of Lie algebras of dimension <= 4"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tol", global.tol, "Comparison tolerance for approximate scalars")->check(CLI::PositiveNumber);

  std::vector<std::string> raw_params;
  std::string name;
  std::string file;
  std::string rep_file;
  std::uint64_t seed = ado::SearchOptions{}.seed;
  int restarts = ado::SearchOptions{}.restarts;
  int dim = 0;
  bool skip_search = false;

  auto add_params = [&](CLI::App* cmd) { cmd->add_option("--param", raw_params, "Family parameter key=value"); };
  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Master seed of the search");
    cmd->add_option("--restarts", restarts, "Restarts per search")->check(CLI::PositiveNumber);
  };

  auto* catalog = app.add_subcommand("catalog", "Browse the classification");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "List all families");
  auto* catalog_show = catalog->add_subcommand("show", "Show one family");
  catalog_show->add_option("name", name, "Family id")->required();
  add_params(catalog_show);

  auto* verify = app.add_subcommand("verify", "Verify a document");
  verify->require_subcommand(1);
  auto* verify_rep = verify->add_subcommand("rep", "Homomorphism and faithfulness");
  auto* verify_lsa = verify->add_subcommand("lsa", "Left-symmetry");
  auto* verify_affine = verify->add_subcommand("affine", "Cocycle and etale checks");
  for (auto* cmd : {verify_rep, verify_lsa, verify_affine}) cmd->add_option("file", file, "JSON document")->required();

  auto* derive = app.add_subcommand("derive", "Derive structures");
  derive->require_subcommand(1);
  auto* derive_lsa = derive->add_subcommand("lsa", "Induced left-symmetric algebra of the etale construction");
  derive_lsa->add_option("name", name, "Family id")->required();
  derive_lsa->add_option("--rep", rep_file, "Representation document to use instead of the catalog");
  add_params(derive_lsa);

  auto* mu = app.add_subcommand("mu", "Minimal faithful dimension");
  mu->require_subcommand(1);
  auto* mu_certify = mu->add_subcommand("certify", "Certify the minimal dimension");
  mu_certify->add_option("name", name, "Family id")->required();
  mu_certify->add_flag("--skip-search", skip_search, "Do not search the remaining gap");
  add_params(mu_certify);
  add_search(mu_certify);
  auto* mu_search = mu->add_subcommand("search", "Search for a faithful representation");
  mu_search->add_option("name", name, "Family id")->required();
  mu_search->add_option("--dim", dim, "Target dimension")->required()->check(CLI::PositiveNumber);
  add_params(mu_search);
  add_search(mu_search);

  auto* check_tables = app.add_subcommand("check-tables", "Run the full verification pipeline");
  check_tables->add_flag("--skip-search", skip_search, "Do not run the numeric searches");
  add_search(check_tables);

  auto* errata = app.add_subcommand("errata", "List printed values that disagree with recomputation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kVerified : kInputError;
  }

  try {
    const ado::Params params = parse_params(raw_params);
    ado::SearchOptions search;
    search.seed = seed;
    search.restarts = restarts;
    ado::TablesOptions tables;
    tables.run_search = !skip_search;
    tables.seed = seed;
    tables.restarts = restarts;
    tables.tol = global.tolerance();

    if (catalog_list->parsed()) return cmd_catalog_list(global);
    if (catalog_show->parsed()) return cmd_catalog_show(global, name, params);
    if (verify_rep->parsed()) return cmd_verify_rep(global, file);
    if (verify_lsa->parsed()) return cmd_verify_lsa(global, file);
    if (verify_affine->parsed()) return cmd_verify_affine(global, file);
    if (derive_lsa->parsed()) return cmd_derive_lsa(global, name, params, rep_file);
    if (mu_certify->parsed()) {
      ado::CertifyOptions options;
      options.run_search = !skip_search;
      options.search = search;
      options.tol = global.tolerance();
      return cmd_mu_certify(global, name, params, options);
    }
    if (mu_search->parsed()) return cmd_mu_search(global, name, params, dim, search);
    if (check_tables->parsed()) return cmd_check_tables(global, tables);
    if (errata->parsed()) return cmd_errata(global, tables);
  } catch (const ado::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ado::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ado::LookupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ado::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ado::Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputError;
}
