#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace cellkit {

// Arbitrary-precision integer. Values that fit in int64 are stored inline;
// anything larger lives in an mpz_class and is demoted again when it shrinks.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v) noexcept : small_(v) {}
  Integer(long long v) noexcept : small_(v) {}
  explicit Integer(const mpz_class& z) { assign_mpz(z); }

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = new mpz_class(*o.big_);
  }
  Integer(Integer&& o) noexcept : small_(o.small_), big_(o.big_) { o.big_ = nullptr; }
  Integer& operator=(const Integer& o) {
    if (this == &o) return *this;
    if (o.big_) {
      if (big_) *big_ = *o.big_;
      else big_ = new mpz_class(*o.big_);
    } else {
      delete big_;
      big_ = nullptr;
      small_ = o.small_;
    }
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    if (this == &o) return *this;
    delete big_;
    small_ = o.small_;
    big_ = o.big_;
    o.big_ = nullptr;
    return *this;
  }
  ~Integer() { delete big_; }

  bool is_small() const noexcept { return big_ == nullptr; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }
  // Valid only when is_small().
  long long small_value() const noexcept { return small_; }
  long long to_ll() const;
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
  double to_double() const { return big_ ? big_->get_d() : static_cast<double>(small_); }

  std::string str() const;
  static Integer parse(std::string_view s);
  std::size_t hash() const noexcept;

  Integer operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
  }
  Integer& operator+=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return add_slow(o, false);
  }
  Integer& operator-=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return add_slow(o, true);
  }
  Integer& operator*=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    return mul_slow(o);
  }
  // this += a * b
  void add_mul(const Integer& a, const Integer& b) {
    long long p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    Integer t = a;
    t *= b;
    *this += t;
  }
  // Exact division; the caller guarantees divisibility.
  Integer divexact(const Integer& d) const;
  // Floor-free truncating remainder test.
  bool divisible_by(const Integer& d) const;

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.cmp(b) == 0;
  }
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  friend bool operator<(const Integer& a, const Integer& b) { return a.cmp(b) < 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.cmp(b) > 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.cmp(b) <= 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.cmp(b) >= 0; }
  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

  int cmp(const Integer& o) const;

 private:
  void assign_mpz(const mpz_class& z);
  Integer& add_slow(const Integer& o, bool subtract);
  Integer& mul_slow(const Integer& o);

  long long small_ = 0;
  mpz_class* big_ = nullptr;
};

Integer gcd(const Integer& a, const Integer& b);

}  // namespace cellkit

template <>
struct std::hash<cellkit::Integer> {
  std::size_t operator()(const cellkit::Integer& a) const noexcept { return a.hash(); }
};
