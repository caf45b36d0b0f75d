#include "cellkit/integer.hpp"

#include <stdexcept>

namespace cellkit {

void Integer::assign_mpz(const mpz_class& z) {
  if (z.fits_slong_p()) {
    delete big_;
    big_ = nullptr;
    small_ = z.get_si();
  } else if (big_) {
    *big_ = z;
  } else {
    big_ = new mpz_class(z);
  }
}

Integer& Integer::add_slow(const Integer& o, bool subtract) {
  mpz_class r = to_mpz();
  if (subtract) r -= o.to_mpz();
  else r += o.to_mpz();
  assign_mpz(r);
  return *this;
}

Integer& Integer::mul_slow(const Integer& o) {
  mpz_class r = to_mpz() * o.to_mpz();
  assign_mpz(r);
  return *this;
}

long long Integer::to_ll() const {
  if (big_) throw std::overflow_error("Integer does not fit in 64 bits");
  return small_;
}

int Integer::cmp(const Integer& o) const {
  if (!big_ && !o.big_) return (small_ > o.small_) - (small_ < o.small_);
  int c = ::cmp(to_mpz(), o.to_mpz());
  return (c > 0) - (c < 0);
}

Integer Integer::divexact(const Integer& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !d.big_ && !(small_ == INT64_MIN && d.small_ == -1)) return Integer(small_ / d.small_);
  mpz_class q;
  mpz_class a = to_mpz(), b = d.to_mpz();
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return Integer(q);
}

bool Integer::divisible_by(const Integer& d) const {
  if (d.is_zero()) return is_zero();
  if (!big_ && !d.big_) {
    if (d.small_ == -1) return true;
    return small_ % d.small_ == 0;
  }
  mpz_class a = to_mpz(), b = d.to_mpz();
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

std::string Integer::str() const {
  if (!big_) return std::to_string(small_);
  return big_->get_str();
}

Integer Integer::parse(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw std::invalid_argument("empty integer literal");
  if (t[0] == '+') t.erase(0, 1);
  mpz_class z;
  if (z.set_str(t, 10) != 0) throw std::invalid_argument("bad integer literal: " + std::string(s));
  return Integer(z);
}

std::size_t Integer::hash() const noexcept {
  if (!big_) return std::hash<long long>()(small_);
  std::string s = big_->get_str(16);
  return std::hash<std::string>()(s);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small_value() != INT64_MIN && b.small_value() != INT64_MIN) {
    long long x = a.small_value() < 0 ? -a.small_value() : a.small_value();
    long long y = b.small_value() < 0 ? -b.small_value() : b.small_value();
    while (y) {
      long long t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(g);
}

}  // namespace cellkit
