#include "cellkit/verify.hpp"

#include "cellkit/constructible.hpp"
#include "cellkit/linalg.hpp"
#include "cellkit/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_map>

namespace cellkit {

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  for (auto& c : findings)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::append(const VerificationReport& o) {
  checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  findings.insert(findings.end(), o.findings.begin(), o.findings.end());
}

bool AggregateReport::ok() const {
  return std::all_of(systems.begin(), systems.end(), [](const VerificationReport& r) { return r.ok(); });
}

namespace {

std::string tuple_str(const CoxeterGroup& G, std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    s += (first ? "" : ", ") + G.word_str(x);
    first = false;
  }
  return s + ")";
}

// ---------------------------------------------------------------- P1..P15

Check p1(const Analysis& A) {
  Check ck("P1");
  const CellData& C = A.C();
  for (int z = 0; z < C.size(); ++z)
    ck.expect(C.a(z) <= C.delta(z), "a(z) = " + std::to_string(C.a(z)) + " > Delta(z) = " + std::to_string(C.delta(z)) +
                                         " at z = " + A.G().word_str(z));
  return ck;
}

void note_local(const Analysis& A, Check& ck) {
  if (!A.C().full()) ck.note = "gamma computed within left-cell modules";
}

Check p2(const Analysis& A) {
  Check ck("P2");
  const CellData& C = A.C();
  const CoxeterGroup& G = A.G();
  for (auto& [xy, row] : C.gamma_table())
    for (auto& [d, c] : row)
      if (C.in_D(d))
        ck.expect(xy.first == G.inverse(xy.second), "gamma_{x,y,d} = " + std::to_string(c) + " with x != y^-1 at (x,y,d) = " +
                                                        tuple_str(G, {xy.first, xy.second, d}));
  note_local(A, ck);
  return ck;
}

std::vector<int> d_partners(const CellData& C, int y) {
  std::vector<int> out;
  for (auto& [d, c] : C.gamma_row(C.group().inverse(y), y))
    if (C.in_D(d)) out.push_back(d);
  return out;
}

Check p3(const Analysis& A) {
  Check ck("P3");
  const CellData& C = A.C();
  for (int y = 0; y < C.size(); ++y) {
    auto ds = d_partners(C, y);
    ck.expect(ds.size() == 1, std::to_string(ds.size()) + " elements d of D with gamma_{y^-1,y,d} != 0 at y = " + A.G().word_str(y));
  }
  note_local(A, ck);
  return ck;
}

Check p4(const Analysis& A) {
  Check ck("P4");
  const CellData& C = A.C();
  for (int z = 0; z < C.size(); ++z)
    for (int zp = 0; zp < C.size(); ++zp)
      if (C.leq(Side::TwoSided, zp, z))
        ck.expect(C.a(zp) >= C.a(z), "z' <=_LR z with a(z') = " + std::to_string(C.a(zp)) + " < a(z) = " + std::to_string(C.a(z)) +
                                         " at (z',z) = " + tuple_str(A.G(), {zp, z}));
  return ck;
}

Check p5(const Analysis& A) {
  Check ck("P5");
  const CellData& C = A.C();
  const CoxeterGroup& G = A.G();
  for (int y = 0; y < C.size(); ++y)
    for (int d : d_partners(C, y)) {
      long long g = C.gamma(G.inverse(y), y, d);
      ck.expect(g == C.n(d) && (C.n(d) == 1 || C.n(d) == -1), "gamma_{y^-1,y,d} = " + std::to_string(g) + ", n_d = " +
                                                                   std::to_string(C.n(d)) + " at (y,d) = " + tuple_str(G, {y, d}));
    }
  note_local(A, ck);
  return ck;
}

Check p6(const Analysis& A) {
  Check ck("P6");
  for (int d : A.C().D()) ck.expect(A.G().inverse(d) == d, "d^2 != 1 for d = " + A.G().word_str(d));
  return ck;
}

Check p7(const Analysis& A) {
  Check ck("P7");
  const CellData& C = A.C();
  for (auto& [xy, row] : C.gamma_table())
    for (auto& [z, c] : row) {
      long long r = C.gamma(xy.second, z, xy.first);
      ck.expect(r == c, "gamma_{x,y,z} = " + std::to_string(c) + " but gamma_{y,z,x} = " + std::to_string(r) + " at (x,y,z) = " +
                            tuple_str(A.G(), {xy.first, xy.second, z}));
    }
  note_local(A, ck);
  return ck;
}

Check p8(const Analysis& A) {
  Check ck("P8");
  const CellData& C = A.C();
  const CoxeterGroup& G = A.G();
  const auto& L = C.partition(Side::Left).cell_of;
  auto same = [&](int a, int b) { return L[static_cast<std::size_t>(a)] == L[static_cast<std::size_t>(b)]; };
  for (auto& [xy, row] : C.gamma_table())
    for (auto& [z, c] : row) {
      int x = xy.first, y = xy.second;
      ck.expect(same(x, G.inverse(y)) && same(y, G.inverse(z)) && same(z, G.inverse(x)),
                "gamma_{x,y,z} = " + std::to_string(c) + " but the cells are not cyclically matched at (x,y,z) = " + tuple_str(G, {x, y, z}));
    }
  note_local(A, ck);
  return ck;
}

Check p9_11(const Analysis& A, Side s, const std::string& name, const char* rel) {
  Check ck(name);
  const CellData& C = A.C();
  const auto& cell = C.partition(s).cell_of;
  for (int z = 0; z < C.size(); ++z)
    for (int zp = 0; zp < C.size(); ++zp)
      if (C.a(zp) == C.a(z) && C.leq(s, zp, z))
        ck.expect(cell[static_cast<std::size_t>(zp)] == cell[static_cast<std::size_t>(z)],
                  std::string("z' <=_") + rel + " z, a(z') = a(z), but not in one cell at (z',z) = " + tuple_str(A.G(), {zp, z}));
  return ck;
}

Check p12(const Analysis& A) {
  Check ck("P12");
  const CellData& C = A.C();
  for (auto& I : proper_subsets(A.G().rank())) {
    if (I.empty()) continue;
    auto L = parabolic_link(A, I);
    const CellData& S = L->sub->C();
    for (int u = 0; u < S.size(); ++u) {
      int w = L->P.inject[static_cast<std::size_t>(u)];
      ck.expect(S.a(u) == C.a(w), "a in W_I = " + std::to_string(S.a(u)) + ", a in W = " + std::to_string(C.a(w)) + " at z = " +
                                      A.G().word_str(w) + ", I = " + subset_str(A.sys, I));
    }
  }
  return ck;
}

Check p13(const Analysis& A) {
  Check ck("P13");
  const CellData& C = A.C();
  const CoxeterGroup& G = A.G();
  const Partition& L = C.partition(Side::Left);
  for (const auto& cell : L.cells) {
    std::vector<int> ds;
    for (int z : cell)
      if (C.in_D(z)) ds.push_back(z);
    ck.expect(ds.size() == 1, std::to_string(ds.size()) + " elements of D in the left cell of " + G.word_str(cell[0]));
    if (ds.size() != 1) continue;
    for (int x : cell)
      ck.expect(C.gamma(G.inverse(x), x, ds[0]) != 0, "gamma_{x^-1,x,d} = 0 at (x,d) = " + tuple_str(G, {x, ds[0]}));
  }
  ck.expect(static_cast<int>(C.D().size()) == L.count(),
            "|D| = " + std::to_string(C.D().size()) + " but there are " + std::to_string(L.count()) + " left cells");
  note_local(A, ck);
  return ck;
}

Check p14(const Analysis& A) {
  Check ck("P14");
  const auto& cell = A.C().partition(Side::TwoSided).cell_of;
  for (int z = 0; z < A.C().size(); ++z)
    ck.expect(cell[static_cast<std::size_t>(z)] == cell[static_cast<std::size_t>(A.G().inverse(z))],
              "z and z^-1 in different two-sided cells at z = " + A.G().word_str(z));
  return ck;
}

// h-rows c_x c_y = sum_z h_{x,y,z} c_z: from the stored table in full mode, else on demand.
class HRows {
 public:
  explicit HRows(const CellData& C) : C_(C) {}
  const SparseVec& row(int x, int y) {
    if (C_.full()) return C_.h_row(x, y);
    long long key = static_cast<long long>(x) * C_.size() + y;
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, C_.hecke().product_c(x, y)).first;
    return it->second;
  }

 private:
  const CellData& C_;
  std::unordered_map<long long, SparseVec> cache_;
};

// Terms (y, exponent of v, exponent of v', coefficient) of a bivariate vector.
struct BiTerm {
  int y, e, ep;
  long long c;
  auto key() const { return std::tie(y, e, ep); }
};

long long small(const Integer& c) {
  if (!c.is_small()) throw std::overflow_error("h coefficient exceeds 64 bits");
  return c.small_value();
}

void add_bi(std::vector<BiTerm>& out, int y, const ZPoly& f_vp, const ZPoly& g_v) {
  for (auto& [ep, cp] : f_vp.terms())
    for (auto& [e, c] : g_v.terms()) {
      long long prod;
      if (__builtin_mul_overflow(small(cp), small(c), &prod)) throw std::overflow_error("bivariate coefficient overflow");
      out.push_back({y, e, ep, prod});
    }
}

void normalize(std::vector<BiTerm>& t) {
  std::sort(t.begin(), t.end(), [](const BiTerm& a, const BiTerm& b) { return a.key() < b.key(); });
  std::size_t k = 0;
  for (std::size_t i = 0; i < t.size();) {
    BiTerm s = t[i];
    std::size_t j = i + 1;
    for (; j < t.size() && t[j].key() == s.key(); ++j) s.c += t[j].c;
    if (s.c != 0) t[k++] = s;
    i = j;
  }
  t.resize(k);
}

std::string bi_str(const std::vector<BiTerm>& t, int y) {
  BiLaurentPoly p;
  for (auto& b : t)
    if (b.y == y) p.add_term(b.e, b.ep, Integer(b.c));
  return p.str();
}

// Both sides of the P15 identity for fixed (x, w, x'), restricted to y in `ys` (or all y with
// a(y) = a(w) when ys is empty).
struct P15Sides {
  std::vector<BiTerm> lhs, rhs;
};

P15Sides p15_sides(const CellData& C, HRows& H, int x, int w, int xp, int only_y) {
  P15Sides s;
  const int aw = C.a(w);
  auto keep = [&](int y) { return only_y >= 0 ? y == only_y : C.a(y) == aw; };
  // sum_{y'} h'_{w,x',y'} h_{x,y',y}
  SparseVec wxp = H.row(w, xp);
  for (auto& [yp, f] : wxp) {
    const SparseVec& r = H.row(x, yp);
    for (auto& [y, g] : r)
      if (keep(y)) add_bi(s.lhs, y, f, g);
  }
  // sum_{y'} h_{x,w,y'} h'_{y',x',y}
  SparseVec xw = H.row(x, w);
  for (auto& [yp, g] : xw) {
    const SparseVec& r = H.row(yp, xp);
    for (auto& [y, f] : r)
      if (keep(y)) add_bi(s.rhs, y, f, g);
  }
  normalize(s.lhs);
  normalize(s.rhs);
  return s;
}

std::string p15_witness(const CoxeterGroup& G, const P15Sides& s, int x, int w, int xp) {
  std::set<int> ys;
  for (auto& t : s.lhs) ys.insert(t.y);
  for (auto& t : s.rhs) ys.insert(t.y);
  for (int y : ys) {
    std::string l = bi_str(s.lhs, y), r = bi_str(s.rhs, y);
    if (l != r) return "(x,w,x',y) = " + tuple_str(G, {x, w, xp, y}) + ": lhs " + l + ", rhs " + r + " (w = v')";
  }
  return "(x,w,x') = " + tuple_str(G, {x, w, xp});
}

bool same_terms(const std::vector<BiTerm>& a, const std::vector<BiTerm>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const BiTerm& p, const BiTerm& q) { return p.key() == q.key() && p.c == q.c; });
}

Check p15(const Analysis& A, const VerifyOptions& opt) {
  Check ck("P15");
  const CellData& C = A.C();
  const CoxeterGroup& G = A.G();
  const int N = C.size();
  std::map<int, std::vector<int>> by_a;
  for (int y = 0; y < N; ++y) by_a[C.a(y)].push_back(y);

  if (N <= opt.exhaustive_order && C.full()) {
    struct Slot {
      long long cases = 0;
      std::string witness;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(N));
    parallel_for(static_cast<std::size_t>(N), [&](std::size_t xi) {
      HRows H(C);
      int x = static_cast<int>(xi);
      Slot& sl = slots[xi];
      for (int w = 0; w < N; ++w)
        for (int xp = 0; xp < N; ++xp) {
          sl.cases += static_cast<long long>(by_a[C.a(w)].size());
          if (!sl.witness.empty()) continue;
          P15Sides s = p15_sides(C, H, x, w, xp, -1);
          if (!same_terms(s.lhs, s.rhs)) sl.witness = p15_witness(G, s, x, w, xp);
        }
    }, opt.analysis.threads);
    for (auto& sl : slots) {
      ck.cases += sl.cases;
      if (!sl.witness.empty()) ck.fail(sl.witness);
    }
    return ck;
  }

  const long long count = C.full() ? opt.p15_samples : opt.p15_samples_local;
  Sampler rng(opt.seed);
  HRows H(C);
  for (long long k = 0; k < count; ++k) {
    int x = rng.below(N), xp = rng.below(N), w = rng.below(N);
    const auto& ys = by_a[C.a(w)];
    int y = ys[static_cast<std::size_t>(rng.below(static_cast<int>(ys.size())))];
    P15Sides s = p15_sides(C, H, x, w, xp, y);
    ck.expect(same_terms(s.lhs, s.rhs), p15_witness(G, s, x, w, xp));
  }
  ck.sampled(opt.seed, count);
  if (!C.full()) ck.note = "h rows computed on demand above the full-table threshold";
  return ck;
}

Check property(const Analysis& A, int p, const VerifyOptions& opt) {
  switch (p) {
    case 1: return p1(A);
    case 2: return p2(A);
    case 3: return p3(A);
    case 4: return p4(A);
    case 5: return p5(A);
    case 6: return p6(A);
    case 7: return p7(A);
    case 8: return p8(A);
    case 9: return p9_11(A, Side::Left, "P9", "L");
    case 10: return p9_11(A, Side::Right, "P10", "R");
    case 11: return p9_11(A, Side::TwoSided, "P11", "LR");
    case 12: return p12(A);
    case 13: return p13(A);
    case 14: return p14(A);
    case 15: return p15(A, opt);
    default: throw std::invalid_argument("no property P" + std::to_string(p));
  }
}

// ---------------------------------------------------------------- helpers

std::string cell_name(const CoxeterGroup& G, const std::vector<int>& cell) { return "left cell of " + G.word_str(cell[0]); }

// Elements of `set` grouped by the cells of `part` they meet; true if `set` is a union of cells.
bool union_of_cells(const Partition& part, const std::vector<int>& set, std::vector<int>& cells) {
  std::set<int> hit;
  for (int z : set) hit.insert(part.cell_of[static_cast<std::size_t>(z)]);
  cells.assign(hit.begin(), hit.end());
  std::size_t total = 0;
  for (int c : cells) total += part.cells[static_cast<std::size_t>(c)].size();
  if (total != set.size()) return false;
  std::vector<int> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  for (int c : cells)
    for (int z : part.cells[static_cast<std::size_t>(c)])
      if (!std::binary_search(sorted.begin(), sorted.end(), z)) return false;
  return true;
}

CharVector sum_of(const std::vector<CharVector>& chars, const std::vector<int>& which, std::size_t n) {
  CharVector s(n, 0);
  for (int c : which)
    for (std::size_t E = 0; E < n; ++E) s[E] += chars[static_cast<std::size_t>(c)][E];
  return s;
}

// Whether target is a sum of cell vectors, each vector used at most as often as cells carry it.
// Branches on the first irreducible still needed; failed states (use counts) are memoized.
class Expresser {
 public:
  explicit Expresser(const std::vector<std::pair<CharVector, int>>& vecs) : vecs_(vecs) {}
  bool operator()(const CharVector& target) {
    dead_.clear();
    std::vector<int> used(vecs_.size(), 0);
    CharVector rest = target;
    return search(rest, used);
  }

 private:
  bool search(CharVector& rest, std::vector<int>& used) {
    auto E = std::find_if(rest.begin(), rest.end(), [](long long c) { return c != 0; });
    if (E == rest.end()) return true;
    if (*E < 0 || dead_.count(used)) return false;
    const std::size_t e = static_cast<std::size_t>(E - rest.begin());
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
      const auto& [v, cap] = vecs_[i];
      if (!v[e] || used[i] == cap) continue;
      bool fits = true;
      for (std::size_t k = 0; k < rest.size() && fits; ++k) fits = v[k] <= rest[k];
      if (!fits) continue;
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= v[k];
      ++used[i];
      bool ok = search(rest, used);
      --used[i];
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] += v[k];
      if (ok) return true;
    }
    dead_.insert(used);
    return false;
  }

  const std::vector<std::pair<CharVector, int>>& vecs_;
  std::set<std::vector<int>> dead_;
};

bool support_in(const CharVector& v, const std::vector<int>& members) {
  for (std::size_t E = 0; E < v.size(); ++E)
    if (v[E] && !std::binary_search(members.begin(), members.end(), static_cast<int>(E))) return false;
  return true;
}

}  // namespace

VerificationReport check_P(const Analysis& A, const std::vector<int>& which, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.system = A.sys.name();
  std::vector<int> sel = which;
  if (sel.empty())
    for (int p = 1; p <= 15; ++p) sel.push_back(p);
  for (int p : sel) rep.add(property(A, p, opt));
  return rep;
}

VerificationReport check_cell_identities(const Analysis& A) {
  VerificationReport rep;
  rep.system = A.sys.name();
  const Representations& R = A.R();
  const CharacterTable& T = A.T();
  const CoxeterGroup& G = A.G();
  const Partition& L = A.C().partition(Side::Left);
  const auto& chars = R.cell_characters();

  Check sum("cell-degree-sum");
  for (int i = 0; i < L.count(); ++i) {
    Cyclo s;
    for (int E = 0; E < T.size(); ++E)
      if (long long m = chars[static_cast<std::size_t>(i)][static_cast<std::size_t>(E)]) s += Cyclo(m) / R.f(E);
    sum.expect(s == Cyclo(1), cell_name(G, L.cells[static_cast<std::size_t>(i)]) + ": sum of [E:Gamma]/f_E = " + s.str());
  }
  rep.add(sum);

  Check rank("cell-vector-rank");
  std::set<CharVector> distinct(chars.begin(), chars.end());
  Matrix<mpq_class> M;
  for (auto& v : distinct) {
    std::vector<mpq_class> row;
    for (long long c : v) row.push_back(mpq_class(static_cast<long>(c)));
    M.push_back(row);
  }
  std::size_t r = rank_q(M);
  rank.expect(r == distinct.size(), "rank " + std::to_string(r) + " of " + std::to_string(distinct.size()) + " distinct cell vectors");
  rep.add(rank);

  Check fam("cell-single-family");
  auto F = families(A);
  for (int i = 0; i < L.count(); ++i) {
    std::set<int> fs;
    for (int E = 0; E < T.size(); ++E)
      if (chars[static_cast<std::size_t>(i)][static_cast<std::size_t>(E)]) fs.insert(F->family_of[static_cast<std::size_t>(E)]);
    fam.expect(fs.size() == 1, cell_name(G, L.cells[static_cast<std::size_t>(i)]) + " meets " + std::to_string(fs.size()) + " families: " +
                                   charvector_str(T, chars[static_cast<std::size_t>(i)]));
  }
  rep.add(fam);

  Check irr("cell-irreducible-when-f1");
  bool all_one = true;
  for (int E = 0; E < T.size(); ++E) all_one = all_one && R.f(E) == Cyclo(1);
  if (!all_one) {
    irr.skip("some f_E != 1");
  } else {
    auto con = constructible_set(A);
    for (int i = 0; i < L.count(); ++i) {
      const CharVector& v = chars[static_cast<std::size_t>(i)];
      long long total = 0;
      for (long long c : v) total += c;
      irr.expect(total == 1 && con->find(v) >= 0, cell_name(G, L.cells[static_cast<std::size_t>(i)]) + " carries " + charvector_str(T, v));
    }
  }
  rep.add(irr);
  return rep;
}

VerificationReport check_ind_res(const Analysis& A) {
  VerificationReport rep;
  rep.system = A.sys.name();
  const CoxeterGroup& G = A.G();
  const CharacterTable& T = A.T();
  const Partition& Lp = A.C().partition(Side::Left);
  const auto& chars = A.R().cell_characters();
  const int N = G.size();

  Check twist("w0-twist");
  for (int i = 0; i < Lp.count(); ++i) {
    const auto& cell = Lp.cells[static_cast<std::size_t>(i)];
    std::vector<int> img;
    for (int z : cell) img.push_back(G.multiply(z, G.longest()));
    std::sort(img.begin(), img.end());
    int j = Lp.cell_of[static_cast<std::size_t>(img[0])];
    twist.expect(Lp.cells[static_cast<std::size_t>(j)] == img, cell_name(G, cell) + " times w0 is not a left cell");
    CharVector tw = tensor_sign(T, chars[static_cast<std::size_t>(i)]);
    twist.expect(chars[static_cast<std::size_t>(j)] == tw, cell_name(G, cell) + ": [Gamma w0] = " +
                                                            charvector_str(T, chars[static_cast<std::size_t>(j)]) + ", [Gamma] x sgn = " + charvector_str(T, tw));
  }
  rep.add(twist);

  std::map<CharVector, int> multiplicity;
  for (auto& v : chars) ++multiplicity[v];
  std::vector<std::pair<CharVector, int>> vecs(multiplicity.begin(), multiplicity.end());
  Expresser expressible(vecs);

  Check res("restriction-law"), ind("induction-law"), trunc("truncated-induction-law"), bij("bijection-law");
  auto F = families(A);
  for (auto& I : proper_subsets(G.rank())) {
    auto L = parabolic_link(A, I);
    const Analysis& S = *L->sub;
    const ParabolicData& P = L->P;
    const Partition& Ls = S.C().partition(Side::Left);
    const auto& subchars = S.R().cell_characters();
    const CharacterTable& U = S.T();
    const std::string at = ", I = " + subset_str(A.sys, I);

    // w = u y with u in W_I and y in Y_I
    std::vector<int> fac_u(static_cast<std::size_t>(N), -1), fac_y(static_cast<std::size_t>(N), -1);
    for (std::size_t yi = 0; yi < P.right_reps.size(); ++yi)
      for (int u = 0; u < S.G().size(); ++u) {
        int w = G.multiply(P.inject[static_cast<std::size_t>(u)], P.right_reps[yi]);
        fac_u[static_cast<std::size_t>(w)] = u;
        fac_y[static_cast<std::size_t>(w)] = static_cast<int>(yi);
      }
    res.expect(std::find(fac_u.begin(), fac_u.end(), -1) == fac_u.end(), "right cosets of W_I do not cover W" + at);

    for (int i = 0; i < Lp.count(); ++i) {
      const auto& cell = Lp.cells[static_cast<std::size_t>(i)];
      std::map<int, std::vector<int>> pieces;
      for (int z : cell) pieces[fac_y[static_cast<std::size_t>(z)]].push_back(fac_u[static_cast<std::size_t>(z)]);
      std::vector<int> parts;
      bool unions = true;
      for (auto& [yi, us] : pieces) {
        std::vector<int> cs;
        if (!union_of_cells(Ls, us, cs)) unions = false;
        parts.insert(parts.end(), cs.begin(), cs.end());
      }
      res.expect(unions, cell_name(G, cell) + " meets a right coset of W_I outside a union of W_I left cells" + at);
      CharVector lhs = restrict_to(*L, chars[static_cast<std::size_t>(i)]);
      CharVector rhs = sum_of(subchars, parts, static_cast<std::size_t>(U.size()));
      res.expect(lhs == rhs, cell_name(G, cell) + ": Res = " + charvector_str(U, lhs) + ", sum of pieces = " + charvector_str(U, rhs) + at);
    }

    for (int c = 0; c < Ls.count(); ++c) {
      const auto& sub = Ls.cells[static_cast<std::size_t>(c)];
      const std::string where = "W_I left cell of " + S.G().word_str(sub[0]) + at;
      std::vector<int> X;
      for (int x : P.left_reps)
        for (int u : sub) X.push_back(G.multiply(x, P.inject[static_cast<std::size_t>(u)]));
      std::vector<int> cs;
      ind.expect(union_of_cells(Lp, X, cs), "X_I Gamma' is not a union of left cells for the " + where);
      CharVector lhs = induce(*L, subchars[static_cast<std::size_t>(c)]);
      CharVector rhs = sum_of(chars, cs, static_cast<std::size_t>(T.size()));
      ind.expect(lhs == rhs, "Ind = " + charvector_str(T, lhs) + ", cells of X_I Gamma' give " + charvector_str(T, rhs) + " for the " + where);
      ind.expect(expressible(lhs), "Ind = " + charvector_str(T, lhs) + " is no sum of cell vectors for the " + where);

      int j = Lp.cell_of[static_cast<std::size_t>(P.inject[static_cast<std::size_t>(sub[0])])];
      bool inside = std::all_of(sub.begin(), sub.end(), [&](int u) {
        return Lp.cell_of[static_cast<std::size_t>(P.inject[static_cast<std::size_t>(u)])] == j;
      });
      trunc.expect(inside, "the " + where + " meets several left cells of W");
      try {
        CharVector t = truncated_induce(A, *L, subchars[static_cast<std::size_t>(c)]);
        trunc.expect(t == chars[static_cast<std::size_t>(j)], "J = " + charvector_str(T, t) + ", containing cell carries " +
                                                                  charvector_str(T, chars[static_cast<std::size_t>(j)]) + " for the " + where);
      } catch (const std::exception& e) {
        trunc.expect(false, std::string(e.what()) + " for the " + where);
      }
    }

    auto Fs = families(S);
    for (const Family& fam : F->families)
      for (const Family& fsub : Fs->families) {
        if (!j_bijection(A, *L, fsub, fam)) continue;
        std::vector<CharVector> images;
        for (int c = 0; c < Ls.count(); ++c)
          if (support_in(subchars[static_cast<std::size_t>(c)], fsub.members))
            images.push_back(truncated_induce(A, *L, subchars[static_cast<std::size_t>(c)]));
        for (int i = 0; i < Lp.count(); ++i) {
          const CharVector& v = chars[static_cast<std::size_t>(i)];
          if (!support_in(v, fam.members)) continue;
          bij.expect(std::find(images.begin(), images.end(), v) != images.end(),
                     cell_name(G, Lp.cells[static_cast<std::size_t>(i)]) + " carries " + charvector_str(T, v) +
                         ", not J of a W_I left cell in the family of " + U.labels[static_cast<std::size_t>(fsub.members[0])] + at);
        }
      }
  }
  rep.add(res);
  rep.add(ind);
  rep.add(trunc);
  rep.add(bij);
  return rep;
}

VerificationReport check_typeD(int m) {
  VerificationReport rep;
  auto A = analyze(build_system("D", m, {1}));
  auto A1 = analyze(native_d(m));
  rep.system = "D" + std::to_string(m);
  const CoxeterGroup& G = A->G();
  const CoxeterGroup& G1 = A1->G();
  const Partition& L = A->C().partition(Side::Left);
  const Partition& L1 = A1->C().partition(Side::Left);
  const auto& chars = A->R().cell_characters();
  const auto& chars1 = A1->R().cell_characters();

  // u -> omega s1 omega, s_i -> s_i
  std::vector<int> phi(static_cast<std::size_t>(G1.size()));
  std::vector<int> back(static_cast<std::size_t>(G.size()), -1);
  for (int w = 0; w < G1.size(); ++w) {
    Word word;
    for (int s : G1.word(w)) {
      if (s == 0) word.insert(word.end(), {0, 1, 0});
      else word.push_back(s);
    }
    phi[static_cast<std::size_t>(w)] = G.from_word(word);
    back[static_cast<std::size_t>(phi[static_cast<std::size_t>(w)])] = w;
  }
  Check embed("typeD: D in W1");
  embed.expect(2 * G1.size() == G.size() && std::count(back.begin(), back.end(), -1) == G1.size(), "D_m does not embed with index 2");
  for (int d : A->C().D()) embed.expect(back[static_cast<std::size_t>(d)] >= 0, "distinguished involution " + G.word_str(d) + " lies outside W1");
  rep.add(embed);

  const int om = G.from_word({0});
  auto omega = [&](int w1) { return back[static_cast<std::size_t>(G.multiply(om, G.multiply(phi[static_cast<std::size_t>(w1)], om)))]; };
  Check split("typeD: cell splitting");
  std::set<int> covered;
  for (const auto& cell1 : L1.cells) {
    std::vector<int> oc;
    for (int w : cell1) oc.push_back(omega(w));
    std::sort(oc.begin(), oc.end());
    split.expect(L1.cells[static_cast<std::size_t>(L1.cell_of[static_cast<std::size_t>(oc[0])])] == oc,
                 "omega(" + cell_name(G1, cell1) + ") is not a left cell of W1");
    std::vector<int> big;
    for (int w : cell1) {
      big.push_back(phi[static_cast<std::size_t>(w)]);
      big.push_back(G.multiply(om, phi[static_cast<std::size_t>(w)]));
    }
    std::sort(big.begin(), big.end());
    int j = L.cell_of[static_cast<std::size_t>(big[0])];
    split.expect(L.cells[static_cast<std::size_t>(j)] == big, "Gamma1 u omega(Gamma1) omega is not a left cell of W for Gamma1 the " + cell_name(G1, cell1));
    covered.insert(j);
  }
  split.expect(static_cast<int>(covered.size()) == L.count(), "some left cell of W is not of the form Gamma1 u omega(Gamma1) omega");
  rep.add(split);

  Check res("typeD: restriction");
  const CharacterTable& T = A->T();
  const CharacterTable& T1 = A1->T();
  const ConjClasses& C1 = G1.classes();
  const ConjClasses& C = G.classes();
  for (const auto& cell1 : L1.cells) {
    int i1 = L1.cell_of[static_cast<std::size_t>(cell1[0])];
    int j = L.cell_of[static_cast<std::size_t>(phi[static_cast<std::size_t>(cell1[0])])];
    int k1 = L1.cell_of[static_cast<std::size_t>(omega(cell1[0]))];
    std::vector<Cyclo> f = T.class_function(chars[static_cast<std::size_t>(j)]);
    std::vector<Cyclo> r;
    for (int c = 0; c < C1.count(); ++c)
      r.push_back(f[static_cast<std::size_t>(C.class_of[static_cast<std::size_t>(phi[static_cast<std::size_t>(C1.reps[static_cast<std::size_t>(c)])])])]);
    CharVector lhs = T1.decompose(r);
    CharVector rhs = chars1[static_cast<std::size_t>(i1)];
    for (std::size_t e = 0; e < rhs.size(); ++e) rhs[e] += chars1[static_cast<std::size_t>(k1)][e];
    res.expect(lhs == rhs, cell_name(G1, cell1) + ": Res = " + charvector_str(T1, lhs) + ", [Gamma1] + [omega(Gamma1)] = " + charvector_str(T1, rhs));
    // [omega(Gamma1)] against the omega-twist of [Gamma1]
    std::vector<Cyclo> f1 = T1.class_function(chars1[static_cast<std::size_t>(i1)]);
    std::vector<Cyclo> twisted;
    for (int c = 0; c < C1.count(); ++c)
      twisted.push_back(f1[static_cast<std::size_t>(C1.class_of[static_cast<std::size_t>(omega(C1.reps[static_cast<std::size_t>(c)]))])]);
    res.expect(T1.decompose(twisted) == chars1[static_cast<std::size_t>(k1)], cell_name(G1, cell1) + ": [omega(Gamma1)] is not the omega-twist of [Gamma1]");
  }
  rep.add(res);

  Check conj = verify_conjecture(*A1).check;
  conj.name = "typeD: conjecture for W1";
  rep.add(conj);

  if (m == 3) {
    // D3 = A3 with u, s1, s2 -> s1, s3, s2.
    auto A3 = analyze(build_system("A", 3, {1}));
    const CoxeterGroup& GA = A3->G();
    const Partition& LA = A3->C().partition(Side::Left);
    const std::vector<int> to_a{0, 2, 1};
    std::vector<int> psi(static_cast<std::size_t>(G1.size()));
    for (int w = 0; w < G1.size(); ++w) {
      Word word;
      for (int s : G1.word(w)) word.push_back(to_a[static_cast<std::size_t>(s)]);
      psi[static_cast<std::size_t>(w)] = GA.from_word(word);
    }
    Check iso("typeD: D3 = A3");
    const ConjClasses& CA = GA.classes();
    for (const auto& cell1 : L1.cells) {
      std::vector<int> img;
      for (int w : cell1) img.push_back(psi[static_cast<std::size_t>(w)]);
      std::sort(img.begin(), img.end());
      int j = LA.cell_of[static_cast<std::size_t>(img[0])];
      iso.expect(LA.cells[static_cast<std::size_t>(j)] == img, cell_name(G1, cell1) + " does not map to a left cell of A3");
      std::vector<Cyclo> fa = A3->T().class_function(A3->R().cell_characters()[static_cast<std::size_t>(j)]);
      std::vector<Cyclo> f1 = T1.class_function(chars1[static_cast<std::size_t>(L1.cell_of[static_cast<std::size_t>(cell1[0])])]);
      bool same = true;
      for (int c = 0; c < C1.count(); ++c)
        same = same && f1[static_cast<std::size_t>(c)] ==
                           fa[static_cast<std::size_t>(CA.class_of[static_cast<std::size_t>(psi[static_cast<std::size_t>(C1.reps[static_cast<std::size_t>(c)])])])];
      iso.expect(same, cell_name(G1, cell1) + ": characters differ under the isomorphism");
    }
    rep.add(iso);
  }
  return rep;
}

VerificationReport check_internal(const Analysis& A, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.system = A.sys.name();
  const Representations& R = A.R();
  const JRing& J = *A.jring;
  rep.add(R.check_routes());
  rep.add(R.check_tau());
  rep.add(R.check_positive_f());
  rep.add(R.check_specialization());
  rep.add(R.check_schur());
  rep.add(R.check_recomposition());
  rep.add(R.check_omega_in_A());
  rep.add(R.check_a_blocks());
  rep.add(R.check_regular());
  rep.add(J.check_identity());
  rep.add(J.check_blocks());
  rep.add(J.check_tau(opt.exhaustive_order, 20000, opt.seed));
  rep.add(J.check_cell_units());
  rep.add(J.check_associativity(1000, opt.seed));
  rep.add(families(A)->block_check);
  rep.findings.push_back(J.check_left_criterion(opt.exhaustive_order, 20000, opt.seed));
  return rep;
}

VerificationReport verify_system(const CoxeterSystem& sys, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto A = analyze(sys, opt.analysis);
  VerificationReport rep;
  rep.system = sys.name();
  if (opt.run_properties) rep.append(check_P(*A, opt.properties, opt));
  if (opt.run_identities) rep.append(check_cell_identities(*A));
  if (opt.run_ind_res) rep.append(check_ind_res(*A));
  if (opt.run_conjecture) rep.add(verify_conjecture(*A).check);
  if (opt.run_internal) rep.append(check_internal(*A, opt));
  if (sys.family == "D" && (opt.run_conjecture || opt.run_ind_res)) rep.append(check_typeD(sys.param));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CoxeterSystem CatalogEntry::system() const { return build_system(family, param, weights); }

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("systems")) throw CatalogParseError("catalog object needs a \"systems\" array");
    j = j["systems"];
  }
  if (!j.is_array()) throw CatalogParseError("catalog must be an array of systems");
  std::vector<CatalogEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    const std::string at = "catalog entry " + std::to_string(i);
    if (!e.is_object()) throw CatalogParseError(at + " is not an object");
    CatalogEntry c;
    const char* fk = e.contains("family") ? "family" : "type";
    if (!e.contains(fk) || !e[fk].is_string()) throw CatalogParseError(at + " needs a string \"family\"");
    c.family = e[fk].get<std::string>();
    const char* pk = e.contains("rank") ? "rank" : "m";
    if (e.contains(pk)) {
      if (!e[pk].is_number_integer()) throw CatalogParseError(at + ": \"" + pk + "\" must be an integer");
      c.param = e[pk].get<int>();
    } else if (c.family == "H3" || c.family == "F4") {
      c.param = c.family == "H3" ? 3 : 4;
    } else {
      throw CatalogParseError(at + " needs \"rank\" or \"m\"");
    }
    if (e.contains("weights")) {
      if (!e["weights"].is_array()) throw CatalogParseError(at + ": \"weights\" must be an array");
      for (auto& w : e["weights"]) {
        if (!w.is_number_integer() || w.get<int>() < 0) throw CatalogParseError(at + ": weights must be nonnegative integers");
        c.weights.push_back(w.get<int>());
      }
    }
    try {
      (void)c.system();
    } catch (const std::exception& ex) {
      throw CatalogParseError(at + ": " + ex.what());
    }
    out.push_back(c);
  }
  return out;
}

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= 4; ++n) out.push_back({"A", n, {1}});
  for (int r = 0; r <= 3; ++r) out.push_back({"B", 2, {r, 1}});
  out.push_back({"B", 2, {1, 2}});
  for (int r = 0; r <= 3; ++r) out.push_back({"B", 3, {r, 1, 1}});
  out.push_back({"B", 3, {4, 3, 3}});
  for (int m = 3; m <= 8; ++m) {
    out.push_back({"I2", m, {1, 1}});
    if (m % 2 == 0) {
      out.push_back({"I2", m, {1, 2}});
      out.push_back({"I2", m, {2, 1}});
    }
  }
  out.push_back({"H3", 3, {1}});
  out.push_back({"F4", 4, {1, 1, 1, 1}});
  out.push_back({"F4", 4, {1, 1, 2, 2}});
  out.push_back({"F4", 4, {2, 2, 3, 3}});
  out.push_back({"F4", 4, {1, 1, 3, 3}});
  out.push_back({"D", 3, {1}});
  out.push_back({"D", 4, {1}});
  return out;
}

std::string catalog_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& e : entries) {
    nlohmann::json o;
    o["family"] = e.family;
    o[e.family == "I2" ? "m" : "rank"] = e.param;
    o["weights"] = e.weights;
    j.push_back(o);
  }
  return nlohmann::json{{"systems", j}}.dump(2) + "\n";
}

AggregateReport run_catalog(const std::vector<CatalogEntry>& entries, const VerifyOptions& opt) {
  AggregateReport agg;
  agg.systems.resize(entries.size());
  // Entries share the analysis memo; slots keep the merge order independent of scheduling.
  parallel_for(entries.size(), [&](std::size_t i) { agg.systems[i] = verify_system(entries[i].system(), opt); }, opt.analysis.threads);
  return agg;
}

}  // namespace cellkit
