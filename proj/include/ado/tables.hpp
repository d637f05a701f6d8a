#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ado/io.hpp"

namespace ado {

struct CheckRecord {
  std::string section;
  std::string subject;
  std::string check;
  bool ok = true;
  std::string detail;
};

/// A printed value that disagrees with the recomputed one.
struct Erratum {
  std::string location;
  std::string subject;
  std::string printed;
  std::string recomputed;
  std::string resolution;
};

struct LabeledCertificate {
  std::string subject;
  int published = 0;
  MuCertificate certificate;
};

struct TablesOptions {
  bool run_search = true;
  int restarts = 200;
  std::uint64_t seed = 20240601;
  int samples = 5;
  std::uint64_t sample_seed = 2024;
  Tolerance tol;
};

struct TablesReport {
  TablesOptions options;
  std::vector<CheckRecord> checks;
  std::vector<LabeledCertificate> certificates;
  std::vector<Erratum> errata;
  bool ok() const;
  int failures() const;
};

/// Runs every catalog, representation, minimal-dimension and etale check.
TablesReport check_tables(const TablesOptions& options = {});

/// The errata part of check_tables alone (no certification or search).
std::vector<Erratum> collect_errata(const TablesOptions& options = {});

/// Entrywise differences between derived and printed products as errata.
std::vector<Erratum> diff_products(const std::string& location, const std::string& subject,
                                   const LeftSymmetricAlgebra& derived, const LeftSymmetricAlgebra& printed,
                                   Tolerance tol = {});

std::string describe(const Vector& v);

io::json to_json(const TablesReport& report, const std::string& timestamp);
io::json to_json(const Erratum& e);
std::string render_text(const TablesReport& report);

}  // namespace ado
