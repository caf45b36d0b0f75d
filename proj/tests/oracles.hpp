#pragma once

// Brute-force reference computations used as independent oracles by the tests.

#include "cellkit/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

using Perm = std::vector<int>;

// p = s_{w0} o s_{w1} o ... with s_i the transposition (i, i+1).
inline Perm perm_of_word(int n, const cellkit::Word& w) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    for (auto& x : p)
      if (x == *it) x = *it + 1;
      else if (x == *it + 1) x = *it;
  return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

inline Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return c;
}

inline int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

inline long long involutions(int n) {
  std::vector<long long> t{1, 1};
  for (int k = 2; k <= n; ++k) t.push_back(t[static_cast<std::size_t>(k - 1)] + (k - 1) * t[static_cast<std::size_t>(k - 2)]);
  return t[static_cast<std::size_t>(n)];
}

// Robinson-Schensted insertion tableau of the sequence p(0), p(1), ...
inline std::vector<std::vector<int>> rs_insertion(const Perm& p) {
  std::vector<std::vector<int>> P;
  for (int x : p) {
    for (std::size_t r = 0;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
      if (it == P[r].end()) {
        P[r].push_back(x);
        break;
      }
      std::swap(x, *it);
    }
  }
  return P;
}

// x <= y in Bruhat order iff x is a subword product of a reduced word of y.
inline bool subword_leq(const cellkit::CoxeterGroup& G, int x, int y) {
  const cellkit::Word& w = G.word(y);
  std::size_t l = w.size();
  for (unsigned long mask = 0; mask < (1ul << l); ++mask) {
    if (static_cast<int>(__builtin_popcountl(mask)) != G.length(x)) continue;
    cellkit::Word sub;
    for (std::size_t i = 0; i < l; ++i)
      if (mask >> i & 1) sub.push_back(w[i]);
    if (G.from_word(sub) == x) return true;
  }
  return false;
}

// Classical Kazhdan-Lusztig polynomials P_{x,w}(q), equal parameters, by the standard recursion.
class ClassicalKL {
 public:
  using Poly = std::vector<long long>;  // ascending in q

  explicit ClassicalKL(const cellkit::CoxeterGroup& G) : G_(G), N_(G.size()), P_(static_cast<std::size_t>(N_) * N_) {
    for (int w = 0; w < N_; ++w) {
      if (w == 0) {
        at(0, 0) = {1};
        continue;
      }
      int s = G.word(w)[0];
      int v = G.lmul(s, w);
      std::vector<std::pair<int, long long>> mus;
      for (int z = 0; z < N_; ++z) {
        if (!G.is_left_descent(s, z) || G.length(z) >= G.length(v)) continue;
        long long m = mu(z, v);
        if (m) mus.emplace_back(z, m);
      }
      for (int x = 0; x < N_; ++x) {
        int sx = G.lmul(s, x);
        bool c = G.is_left_descent(s, x);
        Poly r;
        add(r, get(sx, v), c ? 0 : 1, 1);
        add(r, get(x, v), c ? 1 : 0, 1);
        for (auto [z, m] : mus) add(r, get(x, z), (G.length(w) - G.length(z)) / 2, -m);
        while (!r.empty() && r.back() == 0) r.pop_back();
        at(x, w) = r;
      }
    }
  }

  const Poly& get(int x, int w) const { return P_[static_cast<std::size_t>(x) * N_ + w]; }
  long long mu(int z, int v) const {
    int d = G_.length(v) - G_.length(z);
    if (d <= 0 || d % 2 == 0) return 0;
    const Poly& p = get(z, v);
    std::size_t k = static_cast<std::size_t>((d - 1) / 2);
    return k < p.size() ? p[k] : 0;
  }

 private:
  Poly& at(int x, int w) { return P_[static_cast<std::size_t>(x) * N_ + w]; }
  static void add(Poly& r, const Poly& p, int shift, long long c) {
    if (r.size() < p.size() + static_cast<std::size_t>(shift)) r.resize(p.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i + static_cast<std::size_t>(shift)] += c * p[i];
  }

  const cellkit::CoxeterGroup& G_;
  int N_;
  std::vector<Poly> P_;
};

}  // namespace oracle
