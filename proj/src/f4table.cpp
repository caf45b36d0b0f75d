#include "cellkit/constructible.hpp"

#include <algorithm>

namespace cellkit {

namespace {

// Name given to the 6-dimensional exterior square of the reflection representation.
constexpr const char* kExt2Label = "6_2";

std::vector<Cyclo> product(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  std::vector<Cyclo> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

// The unique irreducible of dimension dim in the character chi.
int constituent(const CharacterTable& T, const std::vector<Cyclo>& chi, int dim) {
  CharVector v = T.decompose(chi);
  int hit = -1;
  for (int E = 0; E < T.size(); ++E)
    if (v[static_cast<std::size_t>(E)] && T.dims[static_cast<std::size_t>(E)] == dim) {
      if (hit >= 0) throw std::runtime_error("several constituents of dimension " + std::to_string(dim));
      hit = E;
    }
  if (hit < 0) throw std::runtime_error("no constituent of dimension " + std::to_string(dim));
  return hit;
}

}  // namespace

F4Family f4_cuspidal_family(const Analysis& A) {
  const CoxeterSystem& S = A.sys;
  if (S.family != "F4") throw std::invalid_argument("F4 labels need a system of type F4");
  const CoxeterGroup& G = A.G();
  const CharacterTable& T = A.T();
  auto fam = families(A);
  F4Family out;
  for (int E = 0; E < T.size(); ++E)
    if (T.dims[static_cast<std::size_t>(E)] == 12) out.family = fam->family_of[static_cast<std::size_t>(E)];
  if (out.family < 0) throw std::runtime_error("no 12-dimensional irreducible");
  const auto& members = fam->families[static_cast<std::size_t>(out.family)].members;

  const ConjClasses& C = G.classes();
  int c1 = C.class_of[static_cast<std::size_t>(G.from_word({0}))];
  int c3 = C.class_of[static_cast<std::size_t>(G.from_word({2}))];
  int one2 = -1, one3 = -1;
  for (int E = 0; E < T.size(); ++E) {
    if (T.dims[static_cast<std::size_t>(E)] != 1) continue;
    const auto& row = T.values[static_cast<std::size_t>(E)];
    if (row[static_cast<std::size_t>(c1)] == Cyclo(-1) && row[static_cast<std::size_t>(c3)] == Cyclo(1)) one2 = E;
    if (row[static_cast<std::size_t>(c1)] == Cyclo(1) && row[static_cast<std::size_t>(c3)] == Cyclo(-1)) one3 = E;
  }
  if (one2 < 0 || one3 < 0) throw std::runtime_error("linear characters 1_2, 1_3 not found");
  const auto& l2 = T.values[static_cast<std::size_t>(one2)];
  const auto& l3 = T.values[static_cast<std::size_t>(one3)];

  std::vector<Cyclo> V = reflection_character(G);
  int nine1 = constituent(T, sym2_character(G, V), 9);
  const auto& n1 = T.values[static_cast<std::size_t>(nine1)];
  int ext = constituent(T, ext2_character(G, V), 6);

  auto& ix = out.index;
  ix["1_2"] = one2;
  ix["1_3"] = one3;
  ix["4_3"] = constituent(T, product(V, l2), 4);
  ix["4_4"] = constituent(T, product(V, l3), 4);
  ix["9_2"] = constituent(T, product(n1, l2), 9);
  ix["9_3"] = constituent(T, product(n1, l3), 9);
  ix[kExt2Label] = ext;
  const std::string other6 = std::string(kExt2Label) == "6_1" ? "6_2" : "6_1";
  for (int E : members) {
    int d = T.dims[static_cast<std::size_t>(E)];
    if (d == 12) ix["12_1"] = E;
    if (d == 16) ix["16_1"] = E;
    if (d == 6 && E != ext) ix[other6] = E;
    if (d == 4 && E != ix["4_3"] && E != ix["4_4"]) ix["4_1"] = E;
  }
  if (ix.size() != members.size()) throw std::runtime_error("F4 family labels do not cover the family");
  for (auto& [label, E] : ix)
    if (!std::binary_search(members.begin(), members.end(), E))
      throw std::runtime_error(label + " is not in the family of 12_1");
  return out;
}

F4Table f4_table(const Analysis& A) {
  F4Family fam = f4_cuspidal_family(A);
  F4Table out;
  out.rows = {"1_2", "1_3", "4_1", "4_3", "4_4", "6_1", "6_2", "9_2", "9_3", "12_1", "16_1"};
  for (auto& r : out.rows) out.f[r] = A.R().f(fam.index.at(r));
  auto L = parabolic_link(A, {0, 1, 2});
  auto con = constructible_set(*L->sub);
  std::vector<std::pair<std::vector<long long>, std::string>> found;
  for (const ConEntry& e : con->entries) {
    CharVector y = induce(*L, e.v);
    std::vector<long long> col;
    for (auto& r : out.rows) col.push_back(y[static_cast<std::size_t>(fam.index.at(r))]);
    if (std::all_of(col.begin(), col.end(), [](long long c) { return c == 0; })) continue;
    found.emplace_back(col, charvector_str(L->sub->T(), e.v));
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  for (auto& [col, src] : found) {
    if (out.columns.empty() || [&] {
          std::vector<long long> prev;
          for (auto& r : out.rows) prev.push_back(out.columns.back().at(r));
          return prev != col;
        }()) {
      std::map<std::string, long long> m;
      for (std::size_t i = 0; i < col.size(); ++i) m[out.rows[i]] = col[i];
      out.columns.push_back(m);
      out.sources.emplace_back();
    }
    out.sources.back().push_back(src);
  }
  return out;
}

}  // namespace cellkit
