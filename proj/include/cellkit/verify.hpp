#pragma once

#include "cellkit/analysis.hpp"
#include "cellkit/check.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellkit {

struct CatalogParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  uint64_t seed = kDefaultSeed;
  long long p15_samples = 100000;
  // P15 sample count for systems above the full-table threshold (h rows computed on demand).
  long long p15_samples_local = 300;
  int exhaustive_order = 48;
  std::vector<int> properties;  // P-subset; empty means 1..15
  bool run_properties = true;
  bool run_identities = true;
  bool run_ind_res = true;
  bool run_conjecture = true;
  bool run_internal = true;
  AnalysisOptions analysis;
};

// Checks in `checks` decide the verdict; `findings` are cross-checks reported alongside.
struct VerificationReport {
  std::string system;
  std::vector<Check> checks;
  std::vector<Check> findings;
  double seconds = 0;  // wall time, never serialized

  bool ok() const;
  const Check* find(const std::string& name) const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& o);
};

// P1..P15 for the selected indices (empty: all).
VerificationReport check_P(const Analysis& A, const std::vector<int>& which, const VerifyOptions& opt = {});
// Per-cell degree identity, rank of the cell vectors, single-family support,
// irreducibility when all f_E = 1.
VerificationReport check_cell_identities(const Analysis& A);
// w0 twist, restriction, induction, truncated induction and the bijection law, for every proper I.
VerificationReport check_ind_res(const Analysis& A);
// B_m with L(omega) = 0 against its subgroup D_m.
VerificationReport check_typeD(int m);
// Route comparisons and J-ring identities of the upstream modules.
VerificationReport check_internal(const Analysis& A, const VerifyOptions& opt = {});

VerificationReport verify_system(const CoxeterSystem& sys, const VerifyOptions& opt = {});

struct CatalogEntry {
  std::string family;
  int param = 0;
  std::vector<int> weights;
  CoxeterSystem system() const;
};

// Accepts a JSON array of entries or an object {"systems": [...]}; each entry has
// "family" (or "type"), "rank" or "m", and optional "weights".
std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> default_catalog();
std::string catalog_json(const std::vector<CatalogEntry>& entries);

struct AggregateReport {
  std::vector<VerificationReport> systems;
  bool ok() const;
};

AggregateReport run_catalog(const std::vector<CatalogEntry>& entries, const VerifyOptions& opt = {});

}  // namespace cellkit
