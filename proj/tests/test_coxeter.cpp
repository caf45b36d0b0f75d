#include "cellkit/coxeter.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <set>

using namespace cellkit;

TEST_SUITE("coxeter") {

TEST_CASE("group orders match the classification") {
  struct Case {
    std::string fam;
    int param;
  };
  for (Case c : std::vector<Case>{{"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3}, {"B", 4},
                                   {"D", 3}, {"D", 4}, {"I2", 5}, {"I2", 8}, {"H3", 3}, {"F4", 4}}) {
    CoxeterGroup G(build_system(c.fam, c.param, {1}));
    CHECK(G.size() == classical_order(c.fam, c.param));
  }
  CHECK(CoxeterGroup(native_d(4)).size() == 192);
}

TEST_CASE("type A agrees with permutations") {
  for (int n = 1; n <= 4; ++n) {
    CoxeterGroup G(build_system("A", n, {1}));
    CHECK(G.size() == oracle::factorial(n + 1));
    std::set<std::vector<int>> seen;
    for (int w = 0; w < G.size(); ++w) {
      auto p = oracle::perm_of_word(n + 1, G.word(w));
      seen.insert(p);
      CHECK(G.length(w) == oracle::inversions(p));
      CHECK(oracle::perm_of_word(n + 1, G.word(G.inverse(w))) == oracle::perm_inverse(p));
      for (int s = 0; s < n; ++s) CHECK(G.is_left_descent(s, w) == (G.length(G.lmul(s, w)) < G.length(w)));
    }
    CHECK(static_cast<long long>(seen.size()) == G.size());
    int x = G.size() / 3, y = G.size() / 2;
    CHECK(oracle::perm_of_word(n + 1, G.word(G.multiply(x, y))) ==
          oracle::perm_compose(oracle::perm_of_word(n + 1, G.word(x)), oracle::perm_of_word(n + 1, G.word(y))));
  }
}

TEST_CASE("longest element has length equal to the number of reflections") {
  CHECK(CoxeterGroup(build_system("A", 4, {1})).max_length() == 10);
  CHECK(CoxeterGroup(build_system("B", 3, {1})).max_length() == 9);
  CHECK(CoxeterGroup(build_system("I2", 7, {1})).max_length() == 7);
  CHECK(CoxeterGroup(build_system("H3", 3, {1})).max_length() == 15);
  CHECK(CoxeterGroup(build_system("F4", 4, {1})).max_length() == 24);
  CHECK(CoxeterGroup(native_d(4)).max_length() == 12);
}

TEST_CASE("braid relations and inverses") {
  CoxeterSystem sys = build_system("H3", 3, {1});
  CoxeterGroup G(sys);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) {
      int m = sys.matrix[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      Word a, b;
      for (int i = 0; i < m; ++i) {
        a.push_back(i % 2 ? t : s);
        b.push_back(i % 2 ? s : t);
      }
      CHECK(G.from_word(a) == G.from_word(b));
    }
  for (int w = 0; w < G.size(); ++w) CHECK(G.multiply(w, G.inverse(w)) == 0);
}

TEST_CASE("parabolic coset decompositions are unique") {
  CoxeterGroup G(build_system("B", 3, {2, 1, 1}));
  for (std::vector<int> I : std::vector<std::vector<int>>{{0}, {0, 1}, {1, 2}, {0, 2}}) {
    ParabolicData P = G.parabolic(I);
    CHECK(static_cast<long long>(P.left_reps.size()) * P.sub->size() == G.size());
    std::set<int> hit;
    for (int x : P.left_reps)
      for (int u = 0; u < P.sub->size(); ++u) {
        int w = G.multiply(x, P.inject[static_cast<std::size_t>(u)]);
        CHECK(G.length(w) == G.length(x) + P.sub->length(u));
        hit.insert(w);
      }
    CHECK(static_cast<int>(hit.size()) == G.size());
  }
}

TEST_CASE("bruhat order against subword property") {
  CoxeterGroup G(build_system("A", 3, {1}));
  for (int x = 0; x < G.size(); ++x)
    for (int y = 0; y < G.size(); ++y) CHECK(G.bruhat_leq(x, y) == oracle::subword_leq(G, x, y));
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(build_system("A", 2, {1, 2}), WeightConflict);
  CHECK_THROWS_AS(build_system("I2", 5, {1, 2}), WeightConflict);
  CHECK_NOTHROW(build_system("I2", 6, {1, 2}));
  CHECK_THROWS_AS(build_system("X", 2, {1}), UnsupportedType);
  CoxeterSystem d = build_system("D", 4, {1});
  CHECK(d.weights[0] == 0);
  CHECK(d.weights[1] == 1);
  CHECK(build_system("B", 3, {4, 3, 3}).weights == std::vector<int>{4, 3, 3});
  CHECK_THROWS(build_system("A", 5, {1}));
  CHECK_THROWS(build_system("B", 3, {-1, 1, 1}));
}

}  // TEST_SUITE
