#pragma once

#include "cellkit/laurent.hpp"

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

namespace cellkit {

// Element of Q(v), stored as v^e * num / den with num(0) != 0, den(0) != 0,
// gcd(num, den) = 1 and den monic.
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(int a);
  RationalFn(const mpq_class& a);
  explicit RationalFn(const QPoly& p);
  explicit RationalFn(const ZPoly& p) : RationalFn(to_qpoly(p)) {}
  static RationalFn fraction(const QPoly& num, const QPoly& den);

  bool is_zero() const { return num_.empty(); }
  // Laurent polynomial if the denominator is trivial.
  bool is_laurent() const { return den_.size() == 1; }
  QPoly to_laurent() const;
  QPoly numerator() const;    // v^e * num as a Laurent polynomial
  QPoly denominator() const;  // den as a polynomial

  // Membership in O = { f/g : f in Z[v, v^-1], g in 1 + vZ[v] }.
  bool in_O() const;
  // Membership in A_p = { f/g : f, g in Z[v, v^-1], g not in pA }.
  bool in_Ap(long p) const;
  // Membership in Z[v, v^-1].
  bool in_A() const;

  RationalFn inverse() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o) { return *this *= o.inverse(); }
  RationalFn operator-() const;

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.e_ == b.e_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const RationalFn& a) { return os << a.str(); }

  // Re-reduces; a no-op on values produced by this class.
  RationalFn reduced() const;
  std::string str() const;

 private:
  void normalize();
  int e_ = 0;
  std::vector<mpq_class> num_;
  std::vector<mpq_class> den_{mpq_class(1)};
};

inline bool is_zero(const RationalFn& a) { return a.is_zero(); }
inline std::string coeff_str(const RationalFn& a) { return a.str(); }

}  // namespace cellkit
