#pragma once

#include <gmpxx.h>

#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cellkit {

// The real cyclotomic field Q(x_N), x_N = 2cos(2*pi/N), with power basis 1, x_N, ..., x_N^(d-1).
struct CycloField {
  int N = 1;
  int deg = 1;
  std::vector<mpq_class> minpoly;             // monic, size deg+1, ascending
  std::vector<std::vector<mpq_class>> high;   // x^(deg+i) in the power basis, i = 0..deg-2
  long double xval = 2.0L;
};

// Shared field registry; degree-one fields are represented by nullptr (the rationals).
std::shared_ptr<const CycloField> cyclo_field(int N);
// Minimal polynomial of x_N over Q, ascending coefficients.
std::vector<mpq_class> real_cyclotomic_minpoly(int N);

// Element of a real cyclotomic field.
class Cyclo {
 public:
  Cyclo() : c_(1) {}
  Cyclo(int a) : c_(1, mpq_class(a)) {}
  Cyclo(const mpq_class& a) : c_(1, a) {}
  // 2cos(2*pi*k/N)
  static Cyclo cos2pi(long k, int N);
  // Element of Q(x_N) from power-basis coefficients.
  static Cyclo from_coeffs(int N, std::vector<mpq_class> coeffs);

  int conductor() const { return f_ ? f_->N : 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  mpq_class to_rational() const;
  long double to_long_double() const;
  int sign() const;
  Cyclo inverse() const;
  // Same value, expressed in the smallest field Q(x_N) containing it.
  Cyclo canonical() const;
  // Same value, expressed in Q(x_M); requires conductor() | M.
  Cyclo embed(int M) const;

  std::string str() const;
  static Cyclo parse(std::string_view s);

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
  Cyclo operator-() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
  // Total order by real value.
  friend bool operator<(const Cyclo& a, const Cyclo& b) { return (a - b).sign() < 0; }
  friend std::ostream& operator<<(std::ostream& os, const Cyclo& a) { return os << a.str(); }

 private:
  void promote_to(int M);
  std::shared_ptr<const CycloField> f_;
  std::vector<mpq_class> c_;
};

inline bool is_zero(const Cyclo& a) { return a.is_zero(); }
inline std::string coeff_str(const Cyclo& a) { return a.str(); }

}  // namespace cellkit
