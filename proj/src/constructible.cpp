#include "cellkit/constructible.hpp"

#include "cellkit/parallel.hpp"
#include "memo.hpp"

#include <algorithm>
#include <numeric>

namespace cellkit {

namespace {

KeyedMemo<ParabolicLink> link_memo;
KeyedMemo<ConstructibleSet> con_memo;
KeyedMemo<FamilyPartition> family_memo;

std::string subset_key(const std::vector<int>& I) {
  std::string k;
  for (int i : I) k += std::to_string(i) + ",";
  return k;
}

CharVector unit_vector(int n, int i) {
  CharVector v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace

bool is_zero(const CharVector& x) {
  return std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; });
}

std::shared_ptr<const ParabolicLink> parabolic_link(const Analysis& A, const std::vector<int>& I) {
  return link_memo.get(analysis_key(A.sys) + "@" + subset_key(I), [&] {
    auto L = std::make_shared<ParabolicLink>();
    L->I = I;
    L->P = A.G().parabolic(I);
    L->sub = analyze_parabolic(L->P);
    const CharacterTable& T = A.T();
    const CharacterTable& U = L->sub->T();
    for (int e = 0; e < U.size(); ++e)
      L->ind.push_back(T.decompose(induce_class_function(A.G(), L->P, U, U.values[static_cast<std::size_t>(e)])));
    for (int E = 0; E < T.size(); ++E)
      L->res.push_back(U.decompose(restrict_class_function(A.G(), L->P, U, T.values[static_cast<std::size_t>(E)])));
    return std::shared_ptr<const ParabolicLink>(L);
  });
}

CharVector induce(const ParabolicLink& L, const CharVector& x) {
  CharVector out(L.res.size(), 0);
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x[e])
      for (std::size_t E = 0; E < out.size(); ++E) out[E] += x[e] * L.ind[e][E];
  return out;
}

CharVector restrict_to(const ParabolicLink& L, const CharVector& x) {
  CharVector out(L.ind.size(), 0);
  for (std::size_t E = 0; E < x.size(); ++E)
    if (x[E])
      for (std::size_t e = 0; e < out.size(); ++e) out[e] += x[E] * L.res[E][e];
  return out;
}

int a_value(const Representations& R, const CharVector& x) {
  int a = -1;
  for (int E = 0; E < static_cast<int>(x.size()); ++E) {
    if (!x[static_cast<std::size_t>(E)]) continue;
    if (a >= 0 && R.a(E) != a) throw MixedAValues("support of " + charvector_str(R.table(), x) + " has several a-values");
    a = R.a(E);
  }
  return a;
}

CharVector truncated_induce(const Analysis& A, const ParabolicLink& L, const CharVector& x) {
  int a = a_value(L.sub->R(), x);
  if (a < 0) throw MixedAValues("truncated induction of the zero vector");
  CharVector y = induce(L, x);
  for (int E = 0; E < static_cast<int>(y.size()); ++E)
    if (A.R().a(E) != a) y[static_cast<std::size_t>(E)] = 0;
  if (is_zero(y))
    throw std::runtime_error("truncated induction of " + charvector_str(L.sub->T(), x) + " from " + subset_str(A.sys, L.I) +
                             " is zero");
  return y;
}

CharVector tensor_sign(const CharacterTable& T, const CharVector& x) {
  auto tw = T.sign_twist();
  CharVector out(x.size(), 0);
  for (std::size_t E = 0; E < x.size(); ++E) out[static_cast<std::size_t>(tw[E])] += x[E];
  return out;
}

int ConstructibleSet::find(const CharVector& v) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].v == v) return static_cast<int>(i);
  return -1;
}

std::shared_ptr<const ConstructibleSet> constructible_set(const Analysis& A) {
  return con_memo.get(analysis_key(A.sys), [&] {
    auto S = std::make_shared<ConstructibleSet>();
    const CharacterTable& T = A.T();
    if (A.G().rank() == 0) {
      S->entries.push_back({unit_vector(T.size(), T.trivial()), 0, {"unit"}});
      return std::shared_ptr<const ConstructibleSet>(S);
    }
    auto subsets = proper_subsets(A.G().rank());
    std::vector<std::shared_ptr<const ParabolicLink>> links(subsets.size());
    std::vector<std::shared_ptr<const ConstructibleSet>> subcon(subsets.size());
    parallel_for(subsets.size(), [&](std::size_t i) {
      links[i] = parabolic_link(A, subsets[i]);
      subcon[i] = constructible_set(*links[i]->sub);
    });
    auto add = [&](const CharVector& v, const std::string& why) {
      int k = S->find(v);
      if (k < 0) {
        S->entries.push_back({v, a_value(A.R(), v), {}});
        k = S->size() - 1;
      }
      S->entries[static_cast<std::size_t>(k)].provenance.push_back(why);
    };
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      const std::string I = subset_str(A.sys, subsets[i]);
      for (const ConEntry& e : subcon[i]->entries) {
        CharVector j = truncated_induce(A, *links[i], e.v);
        std::string src = "J_" + I + "(" + charvector_str(links[i]->sub->T(), e.v) + ")";
        add(j, src);
        add(tensor_sign(T, j), src + " x sgn");
      }
    }
    std::stable_sort(S->entries.begin(), S->entries.end(), [](const ConEntry& x, const ConEntry& y) {
      if (x.a != y.a) return x.a < y.a;
      return x.v > y.v;
    });
    return std::shared_ptr<const ConstructibleSet>(S);
  });
}

std::shared_ptr<const FamilyPartition> families(const Analysis& A) {
  return family_memo.get(analysis_key(A.sys), [&] {
    auto F = std::make_shared<FamilyPartition>();
    const int n = A.T().size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (const ConEntry& e : constructible_set(A)->entries) {
      int first = -1;
      for (int E = 0; E < n; ++E) {
        if (!e.v[static_cast<std::size_t>(E)]) continue;
        if (first < 0) first = E;
        else parent[static_cast<std::size_t>(root(E))] = root(first);
      }
    }
    std::map<int, int> index;  // root -> family
    F->family_of.assign(static_cast<std::size_t>(n), -1);
    for (int E = 0; E < n; ++E) {
      int r = root(E);
      auto it = index.find(r);
      if (it == index.end()) {
        it = index.emplace(r, F->count()).first;
        F->families.push_back({});
      }
      F->families[static_cast<std::size_t>(it->second)].members.push_back(E);
      F->family_of[static_cast<std::size_t>(E)] = it->second;
    }
    const auto& block = A.R().block_of();
    std::map<int, int> owner;  // two-sided cell -> family
    for (int k = 0; k < F->count(); ++k) {
      Family& fam = F->families[static_cast<std::size_t>(k)];
      fam.a = A.R().a(fam.members[0]);
      fam.two_sided = block[static_cast<std::size_t>(fam.members[0])];
      for (int E : fam.members) {
        F->block_check.expect(A.R().a(E) == fam.a, "family of " + A.T().labels[static_cast<std::size_t>(fam.members[0])] +
                                                       " has several a-values");
        if (block[static_cast<std::size_t>(E)] != fam.two_sided) fam.two_sided = -1;
      }
      F->block_check.expect(fam.two_sided >= 0, "family of " + A.T().labels[static_cast<std::size_t>(fam.members[0])] +
                                                    " is not contained in one block");
      if (fam.two_sided >= 0) {
        auto [it, fresh] = owner.emplace(fam.two_sided, k);
        F->block_check.expect(fresh, "families of " + A.T().labels[static_cast<std::size_t>(fam.members[0])] + " and " +
                                         A.T().labels[static_cast<std::size_t>(F->families[static_cast<std::size_t>(it->second)].members[0])] +
                                         " share a block");
      }
    }
    F->block_check.expect(static_cast<int>(owner.size()) == A.C().partition(Side::TwoSided).count(),
                          "some two-sided cell carries no family");
    return std::shared_ptr<const FamilyPartition>(F);
  });
}

bool j_bijection(const Analysis& A, const ParabolicLink& L, const Family& Fsub, const Family& F) {
  if (Fsub.members.size() != F.members.size()) return false;
  std::vector<int> seen;
  for (int e : Fsub.members) {
    CharVector j = truncated_induce(A, L, unit_vector(L.sub->T().size(), e));
    int hit = -1;
    for (int E = 0; E < static_cast<int>(j.size()); ++E) {
      long long m = j[static_cast<std::size_t>(E)];
      if (!m) continue;
      if (m != 1 || hit >= 0) return false;
      hit = E;
    }
    if (!std::binary_search(F.members.begin(), F.members.end(), hit)) return false;
    if (std::find(seen.begin(), seen.end(), hit) != seen.end()) return false;
    seen.push_back(hit);
  }
  return true;
}

std::vector<CuspidalInfo> cuspidal_families(const Analysis& A) {
  auto F = families(A);
  std::vector<CuspidalInfo> out(static_cast<std::size_t>(F->count()));
  if (A.G().rank() == 0) return out;
  const CharacterTable& T = A.T();
  auto tw = T.sign_twist();
  auto subsets = proper_subsets(A.G().rank());
  std::vector<std::shared_ptr<const ParabolicLink>> links(subsets.size());
  std::vector<std::shared_ptr<const FamilyPartition>> subfam(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t i) {
    links[i] = parabolic_link(A, subsets[i]);
    subfam[i] = families(*links[i]->sub);
  });
  // Witness for family k itself, if any.
  auto witness = [&](int k) -> std::string {
    const Family& fam = F->families[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < subsets.size(); ++i)
      for (const Family& fs : subfam[i]->families)
        if (j_bijection(A, *links[i], fs, fam))
          return "J_" + subset_str(A.sys, subsets[i]) + " from {" +
                 charvector_str(links[i]->sub->T(), [&] {
                   CharVector v(static_cast<std::size_t>(links[i]->sub->T().size()), 0);
                   for (int e : fs.members) v[static_cast<std::size_t>(e)] = 1;
                   return v;
                 }()) +
                 "}";
    return {};
  };
  for (int k = 0; k < F->count(); ++k) {
    std::string w = witness(k);
    if (!w.empty()) {
      out[static_cast<std::size_t>(k)] = {false, w};
      continue;
    }
    int ks = F->family_of[static_cast<std::size_t>(tw[static_cast<std::size_t>(F->families[static_cast<std::size_t>(k)].members[0])])];
    w = witness(ks);
    if (!w.empty()) out[static_cast<std::size_t>(k)] = {false, "x sgn: " + w};
  }
  return out;
}

DiamondResult check_diamond(const std::map<std::string, Cyclo>& f, const std::map<std::string, long long>& m) {
  DiamondResult r;
  r.sum = Cyclo(0);
  for (auto& [label, n] : m) {
    if (n < 0) {
      r.witness = "negative multiplicity at " + label;
      return r;
    }
    if (n == 0) continue;
    auto it = f.find(label);
    if (it == f.end()) {
      r.witness = "no f-value for " + label;
      return r;
    }
    if (it->second.sign() <= 0) {
      r.witness = "f-value of " + label + " is not positive";
      return r;
    }
    r.sum += Cyclo(static_cast<int>(n)) / it->second;
  }
  r.sum = r.sum.canonical();
  r.holds = r.sum == Cyclo(1);
  if (!r.holds) r.witness = "sum = " + r.sum.str();
  return r;
}

ConjectureReport verify_conjecture(const Analysis& A) {
  ConjectureReport rep;
  auto con = constructible_set(A);
  const auto& cells = A.R().cell_characters();
  const Partition& L = A.C().partition(Side::Left);
  std::vector<bool> used(static_cast<std::size_t>(con->size()), false);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    int k = con->find(cells[i]);
    rep.cell_match.push_back(k);
    if (k >= 0) used[static_cast<std::size_t>(k)] = true;
    rep.check.expect(k >= 0, "left cell of " + A.G().word_str(L.cells[i][0]) + " carries " + charvector_str(A.T(), cells[i]) +
                                 ", which is not constructible");
  }
  for (int k = 0; k < con->size(); ++k) {
    if (!used[static_cast<std::size_t>(k)]) rep.con_unmatched.push_back(k);
    rep.check.expect(used[static_cast<std::size_t>(k)], "constructible " + charvector_str(A.T(), con->entries[static_cast<std::size_t>(k)].v) +
                                                            " is carried by no left cell");
  }
  return rep;
}

std::vector<std::vector<long long>> decomposition_matrix(const Analysis& A) {
  auto con = constructible_set(A);
  std::vector<std::vector<long long>> D(static_cast<std::size_t>(A.T().size()), std::vector<long long>(static_cast<std::size_t>(con->size()), 0));
  for (int k = 0; k < con->size(); ++k)
    for (int E = 0; E < A.T().size(); ++E) D[static_cast<std::size_t>(E)][static_cast<std::size_t>(k)] = con->entries[static_cast<std::size_t>(k)].v[static_cast<std::size_t>(E)];
  return D;
}

}  // namespace cellkit
