#pragma once

#include "cellkit/analysis.hpp"
#include "cellkit/constructible.hpp"
#include "cellkit/verify.hpp"

#include <map>
#include <string>

namespace cellkit {

// All reports are JSON with sorted keys and a trailing newline; exact numbers use the
// canonical Cyclo strings. Wall times are never included, so equal inputs give equal bytes.

// Cells, irreducibles, constructible characters, families and the conjecture verdict.
std::string compute_json(const Analysis& A);
std::string verification_json(const AggregateReport& agg);
std::string verification_json(const VerificationReport& rep);

// Symbol tables for Sy(n,k,r,d) and the regular expansion for (m, r) = (d, r).
std::string bsymbols_json(int n, int k, int r, int d);

struct FixtureTable {
  std::string name;
  std::string provenance;
  std::vector<std::string> rows;
  std::map<std::string, Cyclo> f;
  std::map<std::string, std::map<std::string, long long>> columns;
};

// Throws std::runtime_error on malformed fixtures.
FixtureTable parse_fixture(const std::string& text);
std::string diamond_json(const FixtureTable& t, const std::vector<std::string>& columns);
std::string f4_table_json(const F4Table& t);

}  // namespace cellkit
