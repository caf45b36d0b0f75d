#include "cellkit/hecke.hpp"

#include "cellkit/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cellkit {

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  for (int i : touched_) {
    auto& p = v_[static_cast<std::size_t>(i)];
    if (!p.is_zero()) out.emplace_back(i, std::move(p));
    p = ZPoly();
    mark_[static_cast<std::size_t>(i)] = 0;
  }
  touched_.clear();
  return out;
}

void Accumulator::clear() {
  for (int i : touched_) {
    v_[static_cast<std::size_t>(i)] = ZPoly();
    mark_[static_cast<std::size_t>(i)] = 0;
  }
  touched_.clear();
}

namespace {

// Bar-invariant part: terms of nonnegative degree, mirrored.
ZPoly symmetric_nonneg(const ZPoly& r) {
  std::vector<ZPoly::Term> t;
  for (auto& [e, c] : r.terms()) {
    if (e < 0) continue;
    t.emplace_back(e, c);
    if (e > 0) t.emplace_back(-e, c);
  }
  return ZPoly::from_terms(std::move(t));
}

}  // namespace

Hecke::Hecke(std::shared_ptr<const CoxeterGroup> G, int threads) : G_(std::move(G)) { build(threads); }

void Hecke::build(int threads) {
  const int N = G_->size(), n = G_->rank();
  cols_.assign(static_cast<std::size_t>(N), {});
  mu_.assign(static_cast<std::size_t>(n), std::vector<SparseVec>(static_cast<std::size_t>(N)));
  bar_memo_.resize(static_cast<std::size_t>(N));
  cols_[0] = {{0, ZPoly(1)}};
  const auto& ls = G_->length_starts();
  for (std::size_t L = 0; L + 2 < ls.size(); ++L) {
    struct Job {
      int s, w;
      SparseVec col, mu;
    };
    std::vector<Job> jobs;
    for (int w = ls[L]; w < ls[L + 1]; ++w)
      for (int s = 0; s < n; ++s)
        if (!G_->is_left_descent(s, w)) jobs.push_back({s, w, {}, {}});
    parallel_for(
        jobs.size(),
        [&](std::size_t j) {
          Job& job = jobs[j];
          const int s = job.s, w = job.w, sw = G_->lmul(s, w);
          const int Ls = G_->weight(s);
          std::vector<ZPoly> acc(static_cast<std::size_t>(sw) + 1);
          for (auto& [x, px] : cols_[static_cast<std::size_t>(w)]) {
            int sx = G_->lmul(s, x);
            acc[static_cast<std::size_t>(sx)] += px;
            if (Ls > 0) acc[static_cast<std::size_t>(x)].add_shifted(px, sx < x ? Ls : -Ls);
          }
          for (int y = sw - 1; y >= 0; --y) {
            const ZPoly& r = acc[static_cast<std::size_t>(y)];
            if (r.is_zero() || r.degree() < 0) continue;
            ZPoly m = symmetric_nonneg(r);
            for (auto& [x, pxy] : cols_[static_cast<std::size_t>(y)]) acc[static_cast<std::size_t>(x)] -= m * pxy;
            job.mu.emplace_back(y, std::move(m));
          }
          std::reverse(job.mu.begin(), job.mu.end());
          if (acc[static_cast<std::size_t>(sw)] != ZPoly(1)) throw std::logic_error("KL recursion: leading term is not T_sw");
          for (int x = 0; x <= sw; ++x)
            if (!acc[static_cast<std::size_t>(x)].is_zero()) job.col.emplace_back(x, std::move(acc[static_cast<std::size_t>(x)]));
        },
        threads);
    for (auto& job : jobs) {
      int sw = G_->lmul(job.s, job.w);
      auto& c = cols_[static_cast<std::size_t>(sw)];
      if (c.empty()) {
        c = std::move(job.col);
      } else {
        if (c != job.col) throw std::logic_error("KL columns from different left descents disagree at " + G_->word_str(sw));
        ++cross_checks_;
      }
      mu_[static_cast<std::size_t>(job.s)][static_cast<std::size_t>(job.w)] = std::move(job.mu);
    }
  }
}

ZPoly Hecke::p(int y, int w) const {
  const auto& c = cols_[static_cast<std::size_t>(w)];
  auto it = std::lower_bound(c.begin(), c.end(), y, [](const auto& a, int x) { return a.first < x; });
  if (it != c.end() && it->first == y) return it->second;
  return ZPoly();
}

SparseVec Hecke::left_c(int s, const SparseVec& a) const {
  Accumulator acc(size());
  const int Ls = G_->weight(s);
  for (auto& [w, f] : a) {
    int sw = G_->lmul(s, w);
    if (Ls == 0) {
      acc.add(sw, f);
    } else if (sw > w) {
      acc.add(sw, f);
      for (auto& [z, m] : mu(s, w)) acc.add_product(z, m, f);
    } else {
      acc.add(w, f, Integer(1), Ls);
      acc.add(w, f, Integer(1), -Ls);
    }
  }
  return acc.take();
}

SparseVec Hecke::left_T(int s, const SparseVec& a) const {
  Accumulator acc(size());
  const int Ls = G_->weight(s);
  for (auto& [y, f] : a) {
    int sy = G_->lmul(s, y);
    acc.add(sy, f);
    if (sy < y && Ls > 0) {
      acc.add(y, f, Integer(1), Ls);
      acc.add(y, f, Integer(-1), -Ls);
    }
  }
  return acc.take();
}

SparseVec Hecke::multiply_T(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(size());
  for (auto& [x, f] : a) {
    SparseVec t = b;
    const Word& wd = G_->word(x);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) t = left_T(*it, t);
    for (auto& [z, g] : t) acc.add_product(z, f, g);
  }
  return acc.take();
}

SparseVec Hecke::to_c_basis(const SparseVec& a) const {
  std::map<int, ZPoly> rem;
  for (auto& [x, f] : a) rem[x] += f;
  SparseVec out;
  while (!rem.empty()) {
    auto it = std::prev(rem.end());
    int w = it->first;
    ZPoly f = it->second;
    rem.erase(it);
    if (f.is_zero()) continue;
    for (auto& [y, py] : column(w)) {
      if (y == w) continue;
      auto& r = rem[y];
      r -= f * py;
    }
    out.emplace_back(w, std::move(f));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SparseVec Hecke::from_c_basis(const SparseVec& a) const {
  Accumulator acc(size());
  for (auto& [w, f] : a)
    for (auto& [y, py] : column(w)) acc.add_product(y, f, py);
  return acc.take();
}

SparseVec Hecke::product_c_via_T(int x, int y) const {
  SparseVec cx = column(x), cy = column(y);
  return to_c_basis(multiply_T(cx, cy));
}

SparseVec Hecke::product_c(int x, int y) const {
  std::map<int, SparseVec> memo;
  std::function<const SparseVec&(int)> go = [&](int u) -> const SparseVec& {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    SparseVec r;
    if (u == 0) {
      r = {{y, ZPoly(1)}};
    } else {
      int s = G_->word(u)[0];
      int u1 = G_->lmul(s, u);
      r = left_c(s, go(u1));
      Accumulator acc(size());
      for (auto& [z, f] : r) acc.add(z, f);
      if (G_->weight(s) > 0)
        for (auto& [z, m] : mu(s, u1))
          for (auto& [t, g] : go(z)) acc.add_product(t, -m, g);
      r = acc.take();
    }
    return memo.emplace(u, std::move(r)).first->second;
  };
  return go(x);
}

const SparseVec& Hecke::bar_T(int y) const {
  {
    std::lock_guard<std::mutex> lk(*bar_mu_);
    if (bar_memo_[static_cast<std::size_t>(y)]) return *bar_memo_[static_cast<std::size_t>(y)];
  }
  SparseVec r;
  if (y == 0) {
    r = {{0, ZPoly(1)}};
  } else {
    int s = G_->word(y)[0];
    const SparseVec& b = bar_T(G_->lmul(s, y));
    r = left_T(s, b);
    const int Ls = G_->weight(s);
    if (Ls > 0) {
      Accumulator acc(size());
      for (auto& [z, f] : r) acc.add(z, f);
      for (auto& [z, f] : b) {
        acc.add(z, f, Integer(-1), Ls);
        acc.add(z, f, Integer(1), -Ls);
      }
      r = acc.take();
    }
  }
  std::lock_guard<std::mutex> lk(*bar_mu_);
  auto& slot = bar_memo_[static_cast<std::size_t>(y)];
  if (!slot) slot = std::make_unique<SparseVec>(std::move(r));
  return *slot;
}

bool Hecke::certify_bar(int w) const {
  Accumulator acc(size());
  for (auto& [y, py] : column(w)) {
    ZPoly b = py.bar();
    for (auto& [x, f] : bar_T(y)) acc.add_product(x, b, f);
  }
  return acc.take() == column(w);
}

std::string sparse_str(const CoxeterGroup& G, const SparseVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += "; ";
    s += G.word_str(v[i].first) + ": " + v[i].second.str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace cellkit
