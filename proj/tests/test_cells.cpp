#include "cellkit/analysis.hpp"
#include "cellkit/cells.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace cellkit;

namespace {

std::set<std::vector<int>> cell_set(const Partition& P) {
  return {P.cells.begin(), P.cells.end()};
}

template <class Key>
std::set<std::vector<int>> group_by(int n, const std::function<Key(int)>& key) {
  std::map<Key, std::vector<int>> m;
  for (int w = 0; w < n; ++w) m[key(w)].push_back(w);
  std::set<std::vector<int>> out;
  for (auto& [k, v] : m) out.insert(v);
  return out;
}

}  // namespace

TEST_SUITE("cells") {

TEST_CASE("type A left cells are the Robinson-Schensted classes") {
  for (int n = 1; n <= 4; ++n) {
    auto A = analyze(build_system("A", n, {1}));
    const CoxeterGroup& G = A->G();
    const Partition& L = A->C().partition(Side::Left);
    CHECK(L.count() == oracle::involutions(n + 1));
    auto by_p = group_by<std::vector<std::vector<int>>>(G.size(), [&](int w) {
      return oracle::rs_insertion(oracle::perm_of_word(n + 1, G.word(w)));
    });
    auto by_q = group_by<std::vector<std::vector<int>>>(G.size(), [&](int w) {
      return oracle::rs_insertion(oracle::perm_inverse(oracle::perm_of_word(n + 1, G.word(w))));
    });
    auto cells = cell_set(L);
    CHECK((cells == by_p || cells == by_q));
    // Two-sided cells are indexed by the shape.
    auto by_shape = group_by<std::vector<std::size_t>>(G.size(), [&](int w) {
      std::vector<std::size_t> sh;
      for (auto& row : oracle::rs_insertion(oracle::perm_of_word(n + 1, G.word(w)))) sh.push_back(row.size());
      return sh;
    });
    CHECK(cell_set(A->C().partition(Side::TwoSided)) == by_shape);
  }
}

TEST_CASE("right cells are inverses of left cells") {
  for (auto sys : {build_system("B", 3, {2, 1, 1}), build_system("H3", 3, {1}), build_system("I2", 8, {1, 3})}) {
    auto A = analyze(sys);
    const CoxeterGroup& G = A->G();
    const Partition& L = A->C().partition(Side::Left);
    const Partition& R = A->C().partition(Side::Right);
    for (int x = 0; x < G.size(); ++x)
      for (int y = 0; y < G.size(); ++y)
        CHECK((L.cell_of[static_cast<std::size_t>(x)] == L.cell_of[static_cast<std::size_t>(y)]) ==
              (R.cell_of[static_cast<std::size_t>(G.inverse(x))] == R.cell_of[static_cast<std::size_t>(G.inverse(y))]));
  }
}

TEST_CASE("left cells have constant right descent sets") {
  for (auto sys : {build_system("B", 3, {3, 1, 1}), build_system("F4", 4, {1, 1, 2, 2})}) {
    auto A = analyze(sys);
    for (auto& cell : A->C().partition(Side::Left).cells)
      for (int w : cell) CHECK(A->G().right_descents(w) == A->G().right_descents(cell[0]));
  }
}

TEST_CASE("a-function basics") {
  for (auto sys : {build_system("B", 3, {2, 1, 1}), build_system("I2", 6, {1, 2}), build_system("A", 4, {1})}) {
    auto A = analyze(sys);
    const CoxeterGroup& G = A->G();
    CHECK(A->C().a(0) == 0);
    CHECK(A->C().a(G.longest()) == G.weight_length(G.longest()));
    if (sys.family == "A")
      for (int s = 0; s < G.rank(); ++s) CHECK(A->C().a(G.from_word({s})) == 1);
    // Distinguished involutions: one per left cell, each an involution.
    CHECK(static_cast<int>(A->C().D().size()) == A->C().partition(Side::Left).count());
    for (int d : A->C().D()) CHECK(G.inverse(d) == d);
  }
}

TEST_CASE("dihedral unequal parameters split off four singleton cells") {
  auto A = analyze(build_system("I2", 8, {1, 2}));
  const Partition& L = A->C().partition(Side::Left);
  CHECK(L.count() == 6);
  std::multiset<std::size_t> sizes;
  for (auto& c : L.cells) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 1, 6, 6});
}

TEST_CASE("F4 weights (2,2,3,3) and (3,3,5,5) give identical cells") {
  auto A = analyze(build_system("F4", 4, {2, 2, 3, 3}));
  auto B = analyze(build_system("F4", 4, {3, 3, 5, 5}));
  for (Side s : {Side::Left, Side::Right, Side::TwoSided})
    CHECK(A->C().partition(s).cells == B->C().partition(s).cells);
}

TEST_CASE("scc partition") {
  std::vector<std::vector<int>> adj{{1}, {2}, {0}, {4}, {}};
  Partition P = scc_partition(adj);
  CHECK(P.count() == 3);
  CHECK(P.cells[0] == std::vector<int>{0, 1, 2});
  CHECK(P.cells[1] == std::vector<int>{3});
}

}  // TEST_SUITE
