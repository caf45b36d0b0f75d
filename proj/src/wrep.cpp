#include "cellkit/wrep.hpp"

#include "cellkit/linalg.hpp"
#include "cellkit/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cellkit {

namespace {

Cyclo to_cyclo(const Integer& c) { return Cyclo(mpq_class(c.to_mpz())); }

CPoly to_cpoly(const ZPoly& p) {
  return p.map_coeffs([](const Integer& c) { return to_cyclo(c); });
}

QPoly to_qpoly_checked(const CPoly& p) {
  std::vector<std::pair<int, mpq_class>> t;
  for (auto& [e, c] : p.terms()) {
    if (!c.is_rational()) throw std::logic_error("irrational trace");
    t.emplace_back(e, c.to_rational());
  }
  return QPoly::from_terms(std::move(t));
}

using SparseInt = std::vector<std::vector<std::pair<int, long long>>>;  // [col] -> (row, value)

// v = 1 matrices of the generators on the c^dagger basis of a cell module.
std::vector<SparseInt> generator_matrices(const CellModule& M, const CoxeterGroup& G) {
  const int k = M.dim();
  std::vector<SparseInt> out(static_cast<std::size_t>(G.rank()), SparseInt(static_cast<std::size_t>(k)));
  for (int s = 0; s < G.rank(); ++s)
    for (int j = 0; j < k; ++j) {
      std::map<int, long long> col;
      if (G.weight(s) > 0) col[j] += 1;
      for (auto& [i, p] : M.act(s, {{j, ZPoly(1)}})) col[i] -= p.eval1().to_ll();
      for (auto& [i, v] : col)
        if (v) out[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)].emplace_back(i, v);
    }
  return out;
}

}  // namespace

Representations::Representations(std::shared_ptr<const CellData> cells, RepOptions opt)
    : C_(std::move(cells)), opt_(opt) {
  T_ = character_table(group());
  compute_cell_characters();
  compute_theta();
  if (theta_ok_) {
    compute_g_and_a();
    compute_blocks();
    compute_schur();
    compute_central();
  }
  relabel();
}

CharVector Representations::character_of_module(const CellModule& M) const {
  const CoxeterGroup& G = group();
  auto gens = generator_matrices(M, G);
  const int k = M.dim();
  std::vector<Cyclo> f;
  for (int rep : T_.class_reps) {
    const Word& wd = G.word(rep);
    long long tr = 0;
    std::vector<long long> v(static_cast<std::size_t>(k)), nv(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      std::fill(v.begin(), v.end(), 0);
      v[static_cast<std::size_t>(j)] = 1;
      for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
        std::fill(nv.begin(), nv.end(), 0);
        const SparseInt& S = gens[static_cast<std::size_t>(*it)];
        for (int c = 0; c < k; ++c) {
          long long x = v[static_cast<std::size_t>(c)];
          if (!x) continue;
          for (auto& [r, a] : S[static_cast<std::size_t>(c)]) nv[static_cast<std::size_t>(r)] += a * x;
        }
        std::swap(v, nv);
      }
      tr += v[static_cast<std::size_t>(j)];
    }
    f.emplace_back(mpq_class(static_cast<long>(tr)));
  }
  return T_.decompose(f);
}

CharVector Representations::module_character(const std::vector<int>& elems) const {
  return character_of_module(CellModule(C_->hecke(), elems));
}

void Representations::compute_cell_characters() {
  const Partition& L = C_->partition(Side::Left);
  cellchar_.assign(static_cast<std::size_t>(L.count()), {});
  parallel_for(
      static_cast<std::size_t>(L.count()), [&](std::size_t i) { cellchar_[i] = module_character(L.cells[i]); }, opt_.threads);
}

void Representations::compute_theta() {
  const CoxeterGroup& G = group();
  const Hecke& H = C_->hecke();
  const int N = G.size(), R = irr();
  for (int w = 0; w < N; ++w)
    if (C_->phi_column(w).empty()) {
      theta_err_ = "phi unavailable: some left cell has no unique element of D";
      return;
    }
  // r_w(E) = tr(c_w^dagger, E) at v = 1.
  const ConjClasses& CC = G.classes();
  std::vector<Cyclo> r(static_cast<std::size_t>(N) * R);
  parallel_for(
      static_cast<std::size_t>(N),
      [&](std::size_t w) {
        std::vector<Integer> acc(static_cast<std::size_t>(T_.classes()));
        for (auto& [y, p] : H.column(static_cast<int>(w))) {
          Integer v = p.eval1();
          if (G.length(y) % 2) v = -v;
          acc[static_cast<std::size_t>(CC.class_of[static_cast<std::size_t>(y)])] += v;
        }
        for (int E = 0; E < R; ++E) {
          Cyclo s(0);
          for (int c = 0; c < T_.classes(); ++c)
            if (!acc[static_cast<std::size_t>(c)].is_zero())
              s += to_cyclo(acc[static_cast<std::size_t>(c)]) * T_.values[static_cast<std::size_t>(E)][static_cast<std::size_t>(c)];
          r[w * static_cast<std::size_t>(R) + static_cast<std::size_t>(E)] = s;
        }
      },
      opt_.threads);

  // Phi(z, w) != 0 only for z <=_R w: solve right-cell blocks bottom-up.
  const Partition& P = C_->partition(Side::Right);
  const int nc = P.count();
  std::vector<std::set<int>> succ(static_cast<std::size_t>(nc));
  std::vector<int> indeg(static_cast<std::size_t>(nc), 0);
  for (int w = 0; w < N; ++w)
    for (auto& [z, p] : C_->phi_column(w)) {
      int a = P.cell_of[static_cast<std::size_t>(z)], b = P.cell_of[static_cast<std::size_t>(w)];
      if (a != b && succ[static_cast<std::size_t>(a)].insert(b).second) ++indeg[static_cast<std::size_t>(b)];
    }
  std::set<int> ready;
  for (int c = 0; c < nc; ++c)
    if (!indeg[static_cast<std::size_t>(c)]) ready.insert(c);
  std::vector<int> order;
  while (!ready.empty()) {
    int c = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(c);
    for (int d : succ[static_cast<std::size_t>(c)])
      if (--indeg[static_cast<std::size_t>(d)] == 0) ready.insert(d);
  }
  if (static_cast<int>(order.size()) != nc) {
    theta_err_ = "phi is not block triangular with respect to right cells";
    return;
  }
  theta_.assign(static_cast<std::size_t>(N) * R, Cyclo(0));
  std::vector<char> done(static_cast<std::size_t>(N), 0);
  for (int c : order) {
    const auto& cell = P.cells[static_cast<std::size_t>(c)];
    const std::size_t k = cell.size();
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < k; ++i) pos[cell[i]] = i;
    Matrix<Cyclo> A(k, std::vector<Cyclo>(k, Cyclo(0)));
    Matrix<Cyclo> B(k, std::vector<Cyclo>(static_cast<std::size_t>(R)));
    for (std::size_t i = 0; i < k; ++i) {
      const int w = cell[i];
      for (int E = 0; E < R; ++E) B[i][static_cast<std::size_t>(E)] = r[static_cast<std::size_t>(w) * R + static_cast<std::size_t>(E)];
      for (auto& [z, p] : C_->phi_column(w)) {
        Cyclo v = to_cyclo(p.eval1());
        auto it = pos.find(z);
        if (it != pos.end()) {
          A[i][it->second] = v;
          continue;
        }
        if (!done[static_cast<std::size_t>(z)]) throw std::logic_error("block order violated");
        if (v.is_zero()) continue;
        for (int E = 0; E < R; ++E) {
          const Cyclo& th = theta(z, E);
          if (!th.is_zero()) B[i][static_cast<std::size_t>(E)] -= v * th;
        }
      }
    }
    Matrix<Cyclo> X;
    try {
      X = solve_linear_multi(A, B);
    } catch (const SingularMatrix&) {
      theta_err_ = "specialized phi block is singular at the right cell of " + G.word_str(cell[0]);
      theta_.clear();
      return;
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (int E = 0; E < R; ++E) theta_[static_cast<std::size_t>(cell[i]) * R + static_cast<std::size_t>(E)] = X[i][static_cast<std::size_t>(E)];
      done[static_cast<std::size_t>(cell[i])] = 1;
    }
  }
  theta_ok_ = true;

  f_.assign(static_cast<std::size_t>(R), Cyclo(0));
  parallel_for(
      static_cast<std::size_t>(R),
      [&](std::size_t E) {
        Cyclo s(0);
        for (int w = 0; w < N; ++w) {
          const Cyclo& a = theta(w, static_cast<int>(E));
          if (a.is_zero()) continue;
          s += a * theta(G.inverse(w), static_cast<int>(E));
        }
        f_[E] = (s / Cyclo(T_.dims[E])).canonical();
      },
      opt_.threads);

  // Route (ii) for every left cell.
  const Partition& L = C_->partition(Side::Left);
  cellchar_theta_.assign(static_cast<std::size_t>(L.count()), {});
  for (int i = 0; i < L.count(); ++i) {
    int d = C_->d_of(L.cells[static_cast<std::size_t>(i)][0]);
    if (d < 0) continue;
    CharVector v(static_cast<std::size_t>(R));
    bool ok = true;
    for (int E = 0; E < R && ok; ++E) {
      Cyclo x = theta(d, E) * Cyclo(static_cast<int>(C_->n(d)));
      if (!x.is_rational() || x.to_rational().get_den() != 1) {
        ok = false;
        break;
      }
      v[static_cast<std::size_t>(E)] = x.to_rational().get_num().get_si();
    }
    if (ok) cellchar_theta_[static_cast<std::size_t>(i)] = std::move(v);
  }
}

void Representations::compute_g_and_a() {
  const int N = C_->size(), R = irr();
  g_.assign(static_cast<std::size_t>(N) * R, CPoly());
  parallel_for(
      static_cast<std::size_t>(N),
      [&](std::size_t w) {
        const SparseVec& col = C_->phi_column(static_cast<int>(w));
        for (int E = 0; E < R; ++E) {
          std::vector<std::pair<int, Cyclo>> terms;
          for (auto& [z, p] : col) {
            const Cyclo& th = theta(z, E);
            if (th.is_zero()) continue;
            for (auto& [e, c] : p.terms()) terms.emplace_back(e, to_cyclo(c) * th);
          }
          g_[w * static_cast<std::size_t>(R) + static_cast<std::size_t>(E)] = CPoly::from_terms(std::move(terms));
        }
      },
      opt_.threads);
  aE_.assign(static_cast<std::size_t>(R), 0);
  for (int E = 0; E < R; ++E) {
    int best = 0;
    bool any = false;
    for (int w = 0; w < N; ++w) {
      const CPoly& p = g(w, E);
      if (p.is_zero()) continue;
      best = any ? std::max(best, -p.valuation()) : -p.valuation();
      any = true;
    }
    aE_[static_cast<std::size_t>(E)] = best;
  }
}

void Representations::compute_blocks() {
  const Partition& P = C_->partition(Side::TwoSided);
  const int R = irr();
  block_.assign(static_cast<std::size_t>(R), -1);
  for (int E = 0; E < R; ++E) {
    for (int c = 0; c < P.count(); ++c) {
      Cyclo s(0);
      for (int d : C_->D())
        if (P.cell_of[static_cast<std::size_t>(d)] == c) s += Cyclo(static_cast<int>(C_->n(d))) * theta(d, E);
      if (s.is_zero()) continue;
      block_[static_cast<std::size_t>(E)] = block_[static_cast<std::size_t>(E)] == -1 ? c : -2;
    }
  }
}

std::vector<int> Representations::block_members(int two_sided) const {
  std::vector<int> out;
  for (int E = 0; E < irr(); ++E)
    if (!block_.empty() && block_[static_cast<std::size_t>(E)] == two_sided) out.push_back(E);
  return out;
}

void Representations::compute_schur() {
  const CoxeterGroup& G = group();
  const Hecke& H = C_->hecke();
  const int N = G.size(), R = irr();
  if (N > opt_.schur_max_order) return;
  trT_.assign(static_cast<std::size_t>(N) * R, CPoly());
  // tr(c_w^dagger) = sum_y (-1)^{l(y)} bar(p_{y,w}) tr(T_y), unitriangular in y <= w.
  for (int w = 0; w < N; ++w) {
    std::vector<CPoly> acc(static_cast<std::size_t>(R));
    for (int E = 0; E < R; ++E) acc[static_cast<std::size_t>(E)] = g(w, E);
    for (auto& [y, p] : H.column(w)) {
      if (y == w) continue;
      CPoly c = to_cpoly(p.bar());
      if (G.length(y) % 2) c = -c;
      for (int E = 0; E < R; ++E) acc[static_cast<std::size_t>(E)] -= c * trT_[static_cast<std::size_t>(y) * R + static_cast<std::size_t>(E)];
    }
    // The diagonal coefficient is (-1)^{l(w)}.
    for (int E = 0; E < R; ++E)
      trT_[static_cast<std::size_t>(w) * R + static_cast<std::size_t>(E)] =
          G.length(w) % 2 ? -acc[static_cast<std::size_t>(E)] : std::move(acc[static_cast<std::size_t>(E)]);
  }
  cE_.assign(static_cast<std::size_t>(R), CPoly());
  parallel_for(
      static_cast<std::size_t>(R),
      [&](std::size_t E) {
        CPoly s;
        for (int w = 0; w < N; ++w) s += trace_T(w, static_cast<int>(E)) * trace_T(G.inverse(w), static_cast<int>(E));
        Cyclo inv = Cyclo(T_.dims[E]).inverse();
        cE_[E] = s.map_coeffs([&](const Cyclo& c) { return (c * inv).canonical(); });
      },
      opt_.threads);
  schur_ok_ = true;
}

void Representations::compute_central() {
  if (!schur_ok_) return;
  const CoxeterGroup& G = group();
  const int R = irr(), K = T_.classes();
  for (auto& row : T_.values)
    for (auto& x : row)
      if (!x.is_rational()) return;
  Matrix<RationalFn> M(static_cast<std::size_t>(R), std::vector<RationalFn>(static_cast<std::size_t>(K)));
  Matrix<RationalFn> B(static_cast<std::size_t>(R), std::vector<RationalFn>(static_cast<std::size_t>(R)));
  for (int E = 0; E < R; ++E) {
    for (int c = 0; c < K; ++c) {
      int wc = T_.class_reps[static_cast<std::size_t>(c)];
      M[static_cast<std::size_t>(E)][static_cast<std::size_t>(c)] = RationalFn(to_qpoly_checked(trace_T(wc, E).shifted(G.weight_length(wc))));
    }
    B[static_cast<std::size_t>(E)][static_cast<std::size_t>(E)] = RationalFn(to_qpoly_checked(schur(E)));
  }
  try {
    omega_ = solve_linear_multi(M, B);
  } catch (const SingularMatrix&) {
    return;
  }
  central_ok_ = true;
}

std::vector<bool> Representations::check_central_condition(const CharVector& P, const std::vector<int>& block, Ring ring, long p) const {
  std::vector<bool> out;
  if (!central_ok_) return out;
  for (int c = 0; c < T_.classes(); ++c) {
    RationalFn s(0);
    for (int E : block) {
      long long m = P[static_cast<std::size_t>(E)];
      if (!m) continue;
      s += RationalFn(mpq_class(static_cast<long>(m))) * omega(c, E) / RationalFn(to_qpoly_checked(schur(E)));
    }
    out.push_back(ring == Ring::O ? s.in_O() : s.in_Ap(p));
  }
  return out;
}

void Representations::relabel() {
  if (T_.model != "dixon") return;
  const int R = irr();
  std::map<std::pair<int, int>, int> count, seen;
  auto key = [&](int E) { return std::make_pair(T_.dims[static_cast<std::size_t>(E)], aE_.empty() ? -1 : aE_[static_cast<std::size_t>(E)]); };
  for (int E = 0; E < R; ++E) ++count[key(E)];
  for (int E = 0; E < R; ++E) {
    auto k = key(E);
    std::string l = "phi" + std::to_string(k.first) + (k.second >= 0 ? "," + std::to_string(k.second) : "");
    if (count[k] > 1) l += "#" + std::to_string(++seen[k]);
    T_.labels[static_cast<std::size_t>(E)] = l;
  }
}

Check Representations::check_routes() const {
  Check ck("cell characters by two routes");
  const CoxeterGroup& G = group();
  const Partition& L = C_->partition(Side::Left);
  if (!theta_ok_) {
    ck.fail(theta_err_);
    return ck;
  }
  for (int i = 0; i < L.count(); ++i) {
    const auto& a = cellchar_[static_cast<std::size_t>(i)];
    const auto& b = cellchar_theta_[static_cast<std::size_t>(i)];
    ck.expect(a == b, "left cell of " + G.word_str(L.cells[static_cast<std::size_t>(i)][0]) + ": " + charvector_str(T_, a) +
                          " vs " + (b.empty() ? std::string("(no d)") : charvector_str(T_, b)));
  }
  return ck;
}

Check Representations::check_tau() const {
  Check ck("sum_E theta(z,E)/f_E = tau(t_z)");
  if (!theta_ok_) {
    ck.fail(theta_err_);
    return ck;
  }
  const CoxeterGroup& G = group();
  for (int z = 0; z < C_->size(); ++z) {
    Cyclo s(0);
    for (int E = 0; E < irr(); ++E)
      if (!theta(z, E).is_zero()) s += theta(z, E) / f(E);
    Cyclo want(C_->in_D(z) ? static_cast<int>(C_->n(z)) : 0);
    ck.expect(s == want, "z = " + G.word_str(z) + ": " + s.str());
  }
  return ck;
}

Check Representations::check_positive_f() const {
  Check ck("f_E > 0");
  if (!theta_ok_) {
    ck.fail(theta_err_);
    return ck;
  }
  for (int E = 0; E < irr(); ++E) ck.expect(f(E).sign() > 0, T_.labels[static_cast<std::size_t>(E)] + ": f = " + f(E).str());
  return ck;
}

Check Representations::check_specialization() const {
  Check ck("tr(T_w,E_v) at v=1 equals tr(w,E)");
  if (!schur_ok_) {
    ck.skip("|W| above the Schur threshold");
    return ck;
  }
  const CoxeterGroup& G = group();
  const ConjClasses& CC = G.classes();
  for (int w = 0; w < G.size(); ++w)
    for (int E = 0; E < irr(); ++E)
      ck.expect(trace_T(w, E).eval1() == T_.values[static_cast<std::size_t>(E)][static_cast<std::size_t>(CC.class_of[static_cast<std::size_t>(w)])],
                "w = " + G.word_str(w) + ", E = " + T_.labels[static_cast<std::size_t>(E)]);
  return ck;
}

Check Representations::check_schur() const {
  Check ck("c_E = f_E v^(-2a_E) + higher");
  if (!schur_ok_) {
    ck.skip("|W| above the Schur threshold");
    return ck;
  }
  for (int E = 0; E < irr(); ++E) {
    const CPoly& c = schur(E);
    bool ok = !c.is_zero() && c.valuation() == -2 * a(E) && c.lowest() == f(E);
    ck.expect(ok, T_.labels[static_cast<std::size_t>(E)] + ": c_E = " + c.str());
  }
  return ck;
}

Check Representations::check_recomposition() const {
  Check ck("central character identity recomposes");
  if (!central_ok_) {
    ck.skip(schur_ok_ ? "irrational character table" : "|W| above the Schur threshold");
    return ck;
  }
  const CoxeterGroup& G = group();
  const int R = irr(), K = T_.classes();
  for (int E = 0; E < R; ++E)
    for (int E2 = 0; E2 < R; ++E2) {
      RationalFn s(0);
      for (int c = 0; c < K; ++c) {
        int wc = T_.class_reps[static_cast<std::size_t>(c)];
        s += RationalFn(to_qpoly_checked(trace_T(wc, E).shifted(G.weight_length(wc)))) * omega(c, E2);
      }
      RationalFn want = E == E2 ? RationalFn(to_qpoly_checked(schur(E))) : RationalFn(0);
      ck.expect(s == want, "E = " + T_.labels[static_cast<std::size_t>(E)] + ", E' = " + T_.labels[static_cast<std::size_t>(E2)]);
    }
  return ck;
}

Check Representations::check_omega_in_A() const {
  Check ck("omega_E(z_C) in A");
  if (!central_ok_) {
    ck.skip(schur_ok_ ? "irrational character table" : "|W| above the Schur threshold");
    return ck;
  }
  for (int c = 0; c < T_.classes(); ++c)
    for (int E = 0; E < irr(); ++E)
      ck.expect(omega(c, E).in_A(), "class " + std::to_string(c) + ", E = " + T_.labels[static_cast<std::size_t>(E)] + ": " + omega(c, E).str());
  return ck;
}

Check Representations::check_a_blocks() const {
  Check ck("a_E equals a on the two-sided cell of its block");
  if (!theta_ok_) {
    ck.fail(theta_err_);
    return ck;
  }
  const Partition& P = C_->partition(Side::TwoSided);
  for (int E = 0; E < irr(); ++E) {
    int b = block_[static_cast<std::size_t>(E)];
    if (b < 0) {
      ck.fail(T_.labels[static_cast<std::size_t>(E)] + " lies in " + (b == -1 ? "no" : "several") + " blocks");
      continue;
    }
    int az = C_->a(P.cells[static_cast<std::size_t>(b)][0]);
    ck.expect(az == a(E), T_.labels[static_cast<std::size_t>(E)] + ": a_E = " + std::to_string(a(E)) + ", a = " + std::to_string(az));
  }
  return ck;
}

Check Representations::check_regular() const {
  Check ck("sum over left cells of [E:[Gamma]] = dim E");
  for (int E = 0; E < irr(); ++E) {
    long long s = 0;
    for (auto& v : cellchar_) s += v[static_cast<std::size_t>(E)];
    ck.expect(s == T_.dims[static_cast<std::size_t>(E)], T_.labels[static_cast<std::size_t>(E)] + ": " + std::to_string(s));
  }
  return ck;
}

std::vector<Cyclo> induce_class_function(const CoxeterGroup& G, const ParabolicData& P, const CharacterTable& sub,
                                         const std::vector<Cyclo>& f) {
  const ConjClasses& CC = G.classes();
  std::vector<Cyclo> out(static_cast<std::size_t>(CC.count()), Cyclo(0));
  for (int c = 0; c < sub.classes(); ++c) {
    if (f[static_cast<std::size_t>(c)].is_zero()) continue;
    int C = CC.class_of[static_cast<std::size_t>(P.inject[static_cast<std::size_t>(sub.class_reps[static_cast<std::size_t>(c)])])];
    out[static_cast<std::size_t>(C)] += f[static_cast<std::size_t>(c)] * Cyclo(sub.class_sizes[static_cast<std::size_t>(c)]);
  }
  for (int C = 0; C < CC.count(); ++C)
    if (!out[static_cast<std::size_t>(C)].is_zero()) {
      mpq_class q(G.size(), static_cast<unsigned long>(sub.order) * static_cast<unsigned long>(CC.sizes[static_cast<std::size_t>(C)]));
      q.canonicalize();
      out[static_cast<std::size_t>(C)] *= Cyclo(q);
    }
  return out;
}

std::vector<Cyclo> restrict_class_function(const CoxeterGroup& G, const ParabolicData& P, const CharacterTable& sub,
                                           const std::vector<Cyclo>& f) {
  const ConjClasses& CC = G.classes();
  std::vector<Cyclo> out;
  for (int c = 0; c < sub.classes(); ++c)
    out.push_back(f[static_cast<std::size_t>(CC.class_of[static_cast<std::size_t>(P.inject[static_cast<std::size_t>(sub.class_reps[static_cast<std::size_t>(c)])])])]);
  return out;
}

std::string charvector_str(const CharacterTable& T, const CharVector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    os << (first ? "" : " + ");
    if (v[i] != 1) os << v[i] << "*";
    os << T.labels[i];
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace cellkit
