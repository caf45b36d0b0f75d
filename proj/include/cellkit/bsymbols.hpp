#pragma once

#include "cellkit/chartable.hpp"
#include "cellkit/coxeter.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace cellkit {

// Two-row symbol: beta has k+r strictly increasing entries, gamma has k, all in [1, n+1].
struct Symbol {
  int n = 0, k = 0, r = 0;
  std::vector<int> beta, gamma;

  bool valid() const;
  std::string str() const;
  auto operator<=>(const Symbol&) const = default;
};

// beta = 1..k+r, gamma = 1..k.
Symbol base_symbol(int n, int k, int r);
int principal_degree(const Symbol& S);
bool is_standard(const Symbol& S);
// Valid symbols obtained by increasing exactly one entry by 1, in row-lex order.
std::vector<Symbol> branch(const Symbol& S);

// (n, k, r) large enough that symbols of degree d do not see the bounds.
bool admissible(int n, int k, int r, int d);
// Sy(n,k,r,d), row-lex order.
std::vector<Symbol> symbols(int n, int k, int r, int d);
std::vector<Symbol> standard_symbols(int n, int k, int r, int d);
// Number of branching paths from the base symbol, for every symbol of degree d.
std::map<Symbol, long long> path_counts(int n, int k, int r, int d);

// Rows minus the base symbol, read as partitions: beta -> first, gamma -> second.
BiPartition symbol_bipartition(const Symbol& S);

// W(B_m) with L(t) = r and L(s_i) = 1 (m = 0 and 1 included).
CoxeterSystem b_system(int m, int r);

struct RegularExpansion {
  int m = 0, r = 0;
  bool solvable = false;
  std::vector<CharVector> con;   // Con(W(B_m))
  std::vector<mpq_class> coeff;  // n_P per entry of con
  CharVector dims;
  std::string witness;
};

// Rational n_P with dim E = sum_P n_P [E:P] for every E.
RegularExpansion regular_expansion(int m, int r);

}  // namespace cellkit
