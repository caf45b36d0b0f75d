#pragma once

#include <gmpxx.h>

#include <vector>

namespace cellkit::qvec {

// Dense polynomials over Q, ascending coefficients, no trailing zeros.
using QVec = std::vector<mpq_class>;

inline void trim(QVec& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline QVec mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QVec add(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline QVec sub(QVec a, const QVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline void scale(QVec& a, const mpq_class& c) {
  for (auto& x : a) x *= c;
  trim(a);
}

// Division with remainder by a nonzero polynomial.
inline void divmod(QVec a, const QVec& b, QVec& q, QVec& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t s = a.size() - b.size();
    mpq_class c = a.back() / b.back();
    q[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
    a.back() = 0;
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

// Monic gcd.
inline QVec gcd(QVec a, QVec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QVec q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) scale(a, mpq_class(1) / a.back());
  return a;
}

}  // namespace cellkit::qvec
