#include "cellkit/analysis.hpp"
#include "cellkit/bsymbols.hpp"
#include "cellkit/constructible.hpp"

#include "doctest.h"

#include <functional>
#include <set>

using namespace cellkit;

namespace {

// All strictly increasing sequences of length len in [1, top].
std::vector<std::vector<int>> increasing_rows(int len, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x <= top; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

int sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// Degree straight from the definition: entry sums minus those of the base symbol.
int degree_by_definition(int k, int r, const std::vector<int>& beta, const std::vector<int>& gamma) {
  int base = 0;
  for (int i = 1; i <= k + r; ++i) base += i;
  for (int i = 1; i <= k; ++i) base += i;
  return sum(beta) + sum(gamma) - base;
}

}  // namespace

TEST_SUITE("bsymbols") {

TEST_CASE("principal degree") {
  CHECK(principal_degree(base_symbol(6, 2, 1)) == 0);
  Symbol S{6, 2, 1, {1, 2, 4}, {1, 3}};
  REQUIRE(S.valid());
  CHECK(principal_degree(S) == degree_by_definition(2, 1, S.beta, S.gamma));
  CHECK(principal_degree(S) == 2);
  for (auto& T : branch(S)) CHECK(principal_degree(T) == 3);
}

TEST_CASE("standardness") {
  CHECK(is_standard(base_symbol(5, 2, 0)));
  Symbol S{6, 2, 1, {2, 3, 4}, {1, 2}};
  REQUIRE(S.valid());
  CHECK_FALSE(is_standard(S));
}

TEST_CASE("branching from the base symbol") {
  Symbol S0 = base_symbol(8, 1, 0);
  auto succ = branch(S0);
  CHECK(succ.size() == 2);
  for (auto& T : succ) CHECK(T.valid());
  Symbol full{3, 1, 0, {4}, {4}};
  REQUIRE(full.valid());
  CHECK(branch(full).empty());
}

TEST_CASE("standard symbols against brute force at (6,2,1,2)") {
  int n = 6, k = 2, r = 1, d = 2;
  long long all = 0, standard = 0;
  for (auto& beta : increasing_rows(k + r, n + 1))
    for (auto& gamma : increasing_rows(k, n + 1)) {
      if (degree_by_definition(k, r, beta, gamma) != d) continue;
      ++all;
      bool st = true;
      for (int i = 0; i < k; ++i) st = st && beta[static_cast<std::size_t>(i)] <= gamma[static_cast<std::size_t>(i)];
      standard += st;
    }
  CHECK(static_cast<long long>(symbols(n, k, r, d).size()) == all);
  CHECK(static_cast<long long>(standard_symbols(n, k, r, d).size()) == standard);
}

TEST_CASE("sum of squared path counts is the order of W(B_d)") {
  long long order = 1;
  for (int d = 1; d <= 5; ++d) {
    order *= 2 * d;
    for (int r = 0; r <= 2; ++r) {
      int k = d, n = d - 1 + k + r;
      long long s = 0;
      for (auto& [S, c] : path_counts(n, k, r, d)) s += c * c;
      CHECK(s == order);
    }
  }
}

TEST_CASE("path counts are the dimensions of the labelled irreducibles") {
  for (int d = 2; d <= 3; ++d) {
    CoxeterGroup G(b_system(d, 1));
    CharacterTable T = character_table(G);
    auto paths = path_counts(2 * d, d, 1, d);
    CHECK(static_cast<int>(paths.size()) == T.size());
    for (auto& [S, c] : paths) {
      int E = T.index(bipartition_str(symbol_bipartition(S)));
      REQUIRE(E >= 0);
      CHECK(T.dims[static_cast<std::size_t>(E)] == c);
    }
  }
}

TEST_CASE("results are stable in (n, k)") {
  for (int d = 1; d <= 3; ++d)
    for (int r = 0; r <= 2; ++r) {
      auto a = path_counts(d - 1 + d + r, d, r, d);
      auto b = path_counts(d + 3 + d + 2 + r, d + 2, r, d);
      std::multiset<long long> ca, cb;
      for (auto& [S, c] : a) ca.insert(c);
      for (auto& [S, c] : b) cb.insert(c);
      CHECK(ca == cb);
      CHECK(standard_symbols(d - 1 + d + r, d, r, d).size() == standard_symbols(d + 3 + d + 2 + r, d + 2, r, d).size());
    }
}

TEST_CASE("regular expansion is solvable") {
  for (auto [m, r] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}}) {
    RegularExpansion X = regular_expansion(m, r);
    INFO("m=" << m << " r=" << r << " " << X.witness);
    CHECK(X.solvable);
    // Residual: dim E = sum n_P [E:P] exactly.
    for (std::size_t E = 0; E < X.dims.size(); ++E) {
      mpq_class s = 0;
      for (std::size_t P = 0; P < X.con.size(); ++P) s += X.coeff[P] * mpq_class(static_cast<long>(X.con[P][E]));
      CHECK(s == mpq_class(static_cast<long>(X.dims[E])));
    }
  }
}

}  // TEST_SUITE
