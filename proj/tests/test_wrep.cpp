#include "cellkit/analysis.hpp"
#include "cellkit/constructible.hpp"
#include "cellkit/wrep.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <sstream>

using namespace cellkit;

namespace {

Partition1 parse_partition(const std::string& s) {
  Partition1 p;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) p.push_back(std::stoi(tok));
  return p;
}

long long hook_dim(const Partition1& p) {
  int n = 0;
  for (int x : p) n += x;
  long long num = oracle::factorial(n), den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1, leg = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++leg;
      den *= arm + leg + 1;
    }
  return num / den;
}

long long binom(int n, int k) {
  return oracle::factorial(n) / (oracle::factorial(k) * oracle::factorial(n - k));
}

}  // namespace

TEST_SUITE("wrep") {

TEST_CASE("type A dimensions follow the hook length formula") {
  for (int n = 1; n <= 4; ++n) {
    auto A = analyze(build_system("A", n, {1}));
    const CharacterTable& T = A->T();
    CHECK(T.size() == static_cast<int>(partitions(n + 1).size()));
    for (int E = 0; E < T.size(); ++E)
      CHECK(T.dims[static_cast<std::size_t>(E)] == hook_dim(parse_partition(T.labels[static_cast<std::size_t>(E)])));
  }
}

TEST_CASE("type B dimensions follow the bipartition formula") {
  for (int n = 2; n <= 4; ++n) {
    CoxeterGroup G(build_system("B", n, {1}));
    CharacterTable T = character_table(G);
    CHECK(T.orthogonal());
    auto bps = bipartitions(n);
    for (auto& bp : bps) {
      int a = 0;
      for (int x : bp.first) a += x;
      int E = T.index(bipartition_str(bp));
      REQUIRE(E >= 0);
      CHECK(T.dims[static_cast<std::size_t>(E)] == binom(n, a) * hook_dim(bp.first) * hook_dim(bp.second));
    }
  }
}

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(mn_character({2, 1}, {3}) == -1);
  CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(mn_character({2, 2}, {2, 2}) == 2);
  CHECK(mn_character({3, 1}, {2, 1, 1}) == 1);
  CHECK(mn_character_b({{1}, {}}, {{1, -1}}) == 1);
  CHECK(mn_character_b({{}, {1}}, {{1, -1}}) == -1);
}

TEST_CASE("character tables are orthogonal") {
  for (auto sys : {build_system("H3", 3, {1}), build_system("I2", 7, {1}), build_system("D", 4, {1})}) {
    CoxeterGroup G(sys);
    CHECK(character_table(G).orthogonal());
  }
  CoxeterGroup G(build_system("B", 3, {1}));
  CharacterTable a = character_table(G), b = dixon_table(G);
  CHECK(b.orthogonal());
  CHECK_FALSE(match_tables(a, b).empty());
}

TEST_CASE("induction from A1 to A2") {
  auto A = analyze(build_system("A", 2, {1}));
  auto L = parabolic_link(*A, {0});
  const CharacterTable& T = A->T();
  const CharacterTable& Ts = L->sub->T();
  CharVector triv(static_cast<std::size_t>(Ts.size()), 0), sgn = triv;
  triv[static_cast<std::size_t>(Ts.trivial())] = 1;
  sgn[static_cast<std::size_t>(Ts.sign())] = 1;
  CharVector want1(static_cast<std::size_t>(T.size()), 0), want2 = want1;
  want1[static_cast<std::size_t>(T.index("[3]"))] = 1;
  want1[static_cast<std::size_t>(T.index("[2,1]"))] = 1;
  want2[static_cast<std::size_t>(T.index("[2,1]"))] = 1;
  want2[static_cast<std::size_t>(T.index("[1,1,1]"))] = 1;
  CHECK(induce(*L, triv) == want1);
  CHECK(induce(*L, sgn) == want2);
}

TEST_CASE("Frobenius reciprocity for every parabolic") {
  for (auto sys : {build_system("B", 3, {2, 1, 1}), build_system("H3", 3, {1})}) {
    auto A = analyze(sys);
    for (auto& I : proper_subsets(A->G().rank())) {
      auto L = parabolic_link(*A, I);
      for (std::size_t i = 0; i < L->ind.size(); ++i)
        for (std::size_t E = 0; E < L->res.size(); ++E) CHECK(L->ind[i][E] == L->res[E][i]);
    }
  }
}

TEST_CASE("left cell representations") {
  for (auto sys : {build_system("B", 3, {1, 1, 1}), build_system("I2", 8, {3, 1}), build_system("H3", 3, {1}),
                   build_system("B", 2, {0, 1})}) {
    auto A = analyze(sys);
    const Representations& R = A->R();
    INFO(sys.name());
    CHECK(R.check_routes().ok());
    CHECK(R.check_tau().ok());
    CHECK(R.check_positive_f().ok());
    CHECK(R.check_regular().ok());
    CHECK(R.check_a_blocks().ok());
  }
  auto A4 = analyze(build_system("A", 4, {1}));
  for (auto& v : A4->R().cell_characters()) {
    long long total = 0;
    for (long long m : v) total += m;
    CHECK(total == 1);
  }
}

TEST_CASE("generic degrees and schur elements") {
  auto A = analyze(build_system("B", 2, {1, 2}));
  const Representations& R = A->R();
  CHECK(R.check_specialization().ok());
  CHECK(R.check_schur().ok());
  CHECK(R.check_recomposition().ok());
}

}  // TEST_SUITE
