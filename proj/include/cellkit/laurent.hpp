#pragma once

#include "cellkit/integer.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cellkit {

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("leading data of the zero polynomial") {}
};

inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
inline std::string coeff_str(const Integer& a) { return a.str(); }
inline std::string coeff_str(const mpq_class& a) { return a.get_str(); }

namespace detail {
// Unqualified call so that coefficient types declared later are found by argument-dependent lookup.
template <class R>
bool coeff_zero(const R& c) {
  return is_zero(c);
}
}  // namespace detail

// Sparse Laurent polynomial in v: sorted (exponent, coefficient) pairs, no zeros.
template <class R>
class LaurentPoly {
 public:
  using Term = std::pair<int, R>;

  LaurentPoly() = default;
  LaurentPoly(int c) {
    if (c != 0) t_.emplace_back(0, R(c));
  }
  static LaurentPoly constant(const R& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const R& c, int e) {
    LaurentPoly p;
    if (!detail::coeff_zero(c)) p.t_.emplace_back(e, c);
    return p;
  }
  // v^e
  static LaurentPoly vpow(int e) { return monomial(R(1), e); }
  // Builds from unsorted terms, merging duplicates.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
      if (!p.t_.empty() && p.t_.back().first == e) p.t_.back().second += c;
      else p.t_.emplace_back(e, std::move(c));
      if (detail::coeff_zero(p.t_.back().second)) p.t_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  int degree() const {
    if (t_.empty()) throw ZeroPolynomial();
    return t_.back().first;
  }
  int valuation() const {
    if (t_.empty()) throw ZeroPolynomial();
    return t_.front().first;
  }
  const R& leading() const {
    if (t_.empty()) throw ZeroPolynomial();
    return t_.back().second;
  }
  const R& lowest() const {
    if (t_.empty()) throw ZeroPolynomial();
    return t_.front().second;
  }
  R coeff(int e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e, [](const Term& a, int x) { return a.first < x; });
    if (it != t_.end() && it->first == e) return it->second;
    return R(0);
  }
  // Value at v = 1.
  R eval1() const {
    R s(0);
    for (auto& [e, c] : t_) s += c;
    return s;
  }

  LaurentPoly bar() const {
    LaurentPoly p;
    p.t_.reserve(t_.size());
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) p.t_.emplace_back(-it->first, it->second);
    return p;
  }
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& tm : p.t_) tm.first += k;
    return p;
  }
  // Terms with exponent in [lo, hi].
  LaurentPoly slice(int lo, int hi) const {
    LaurentPoly p;
    for (auto& tm : t_)
      if (tm.first >= lo && tm.first <= hi) p.t_.push_back(tm);
    return p;
  }
  template <class F>
  auto map_coeffs(F f) const {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<std::pair<int, S>> out;
    for (auto& [e, c] : t_) out.emplace_back(e, f(c));
    return LaurentPoly<S>::from_terms(std::move(out));
  }

  // this += c * v^k * o
  void axpy(const R& c, int k, const LaurentPoly& o) {
    if (o.t_.empty() || detail::coeff_zero(c)) return;
    std::vector<Term> r;
    r.reserve(t_.size() + o.t_.size());
    auto a = t_.begin();
    auto b = o.t_.begin();
    while (a != t_.end() || b != o.t_.end()) {
      if (b == o.t_.end() || (a != t_.end() && a->first < b->first + k)) {
        r.push_back(std::move(*a++));
      } else if (a == t_.end() || a->first > b->first + k) {
        r.emplace_back(b->first + k, c * b->second);
        ++b;
      } else {
        R s = std::move(a->second);
        s += c * b->second;
        if (!detail::coeff_zero(s)) r.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    t_ = std::move(r);
  }
  void add_shifted(const LaurentPoly& o, int k) { axpy(R(1), k, o); }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    axpy(R(1), 0, o);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    axpy(R(-1), 0, o);
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& tm : p.t_) tm.second = -tm.second;
    return p;
  }
  LaurentPoly& operator*=(const R& c) {
    if (detail::coeff_zero(c)) {
      t_.clear();
      return *this;
    }
    for (auto& tm : t_) tm.second *= c;
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const R& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.t_.empty() || b.t_.empty()) return LaurentPoly();
    if (a.t_.size() == 1) {
      LaurentPoly p = b.shifted(a.t_[0].first);
      return p *= a.t_[0].second;
    }
    if (b.t_.size() == 1) {
      LaurentPoly p = a.shifted(b.t_[0].first);
      return p *= b.t_[0].second;
    }
    int lo = a.valuation() + b.valuation();
    int hi = a.degree() + b.degree();
    std::vector<R> dense(static_cast<std::size_t>(hi - lo + 1), R(0));
    for (auto& [ea, ca] : a.t_)
      for (auto& [eb, cb] : b.t_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    LaurentPoly p;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (!detail::coeff_zero(dense[i])) p.t_.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
    return p;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Canonical form "c0*v^e0 + c1*v^e1", ascending exponents; "0" for zero.
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i) s += " + ";
      s += coeff_str(t_[i].second);
      s += "*v^";
      s += std::to_string(t_[i].first);
    }
    return s;
  }

  // Inverse of str(); parse_coeff converts one coefficient token.
  static LaurentPoly parse(std::string_view s, const std::function<R(std::string_view)>& parse_coeff) {
    auto trim = [](std::string_view x) {
      while (!x.empty() && x.front() == ' ') x.remove_prefix(1);
      while (!x.empty() && x.back() == ' ') x.remove_suffix(1);
      return x;
    };
    s = trim(s);
    if (s == "0") return LaurentPoly();
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t nxt = s.find(" + ", pos);
      std::string_view tok = trim(s.substr(pos, nxt == std::string_view::npos ? std::string_view::npos : nxt - pos));
      std::size_t star = tok.rfind("*v^");
      if (star == std::string_view::npos) throw std::invalid_argument("bad Laurent term: " + std::string(tok));
      R c = parse_coeff(tok.substr(0, star));
      int e = std::stoi(std::string(tok.substr(star + 3)));
      terms.emplace_back(e, std::move(c));
      if (nxt == std::string_view::npos) break;
      pos = nxt + 3;
    }
    return from_terms(std::move(terms));
  }

 private:
  std::vector<Term> t_;
};

template <class R>
bool is_zero(const LaurentPoly<R>& p) {
  return p.is_zero();
}

using ZPoly = LaurentPoly<Integer>;
using QPoly = LaurentPoly<mpq_class>;

inline ZPoly parse_zpoly(std::string_view s) {
  return ZPoly::parse(s, [](std::string_view t) { return Integer::parse(t); });
}
inline QPoly parse_qpoly(std::string_view s) {
  return QPoly::parse(s, [](std::string_view t) { return mpq_class(std::string(t)); });
}
inline QPoly to_qpoly(const ZPoly& p) {
  return p.map_coeffs([](const Integer& c) { return mpq_class(c.to_mpz()); });
}

// Sparse Laurent polynomial in two variables v, v' with integer coefficients.
class BiLaurentPoly {
 public:
  using Key = std::pair<int, int>;
  const std::map<Key, Integer>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(int ev, int evp, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, ins] = t_.emplace(Key{ev, evp}, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  // this += f(v') * g(v)
  void add_product(const ZPoly& f_vp, const ZPoly& g_v) {
    for (auto& [ep, cp] : f_vp.terms())
      for (auto& [e, c] : g_v.terms()) add_term(e, ep, cp * c);
  }
  BiLaurentPoly& operator+=(const BiLaurentPoly& o) {
    for (auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
  }
  friend bool operator==(const BiLaurentPoly& a, const BiLaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiLaurentPoly& a, const BiLaurentPoly& b) { return !(a == b); }
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, c] : t_) {
      if (!first) s += " + ";
      first = false;
      s += c.str() + "*v^" + std::to_string(k.first) + "*w^" + std::to_string(k.second);
    }
    return s;
  }

 private:
  std::map<Key, Integer> t_;
};

}  // namespace cellkit
