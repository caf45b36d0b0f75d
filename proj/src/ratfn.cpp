#include "cellkit/ratfn.hpp"

#include "qvec.hpp"

#include <stdexcept>

namespace cellkit {

using qvec::QVec;

namespace {

// Dense coefficients of a Laurent polynomial and its valuation.
QVec dense_of(const QPoly& p, int& val) {
  QVec d;
  if (p.is_zero()) {
    val = 0;
    return d;
  }
  val = p.valuation();
  d.assign(static_cast<std::size_t>(p.degree() - val + 1), mpq_class(0));
  for (auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - val)] = c;
  return d;
}

QPoly laurent_of(const QVec& d, int shift) {
  std::vector<QPoly::Term> t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) t.emplace_back(static_cast<int>(i) + shift, d[i]);
  return QPoly::from_terms(std::move(t));
}

// Content (positive rational) of a nonzero polynomial: p / content is primitive in Z[v].
mpq_class content(const QVec& p) {
  mpz_class g = 0, l = 1;
  for (auto& c : p) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  mpq_class r(g, l);
  r.canonicalize();
  return r;
}

}  // namespace

RationalFn::RationalFn(int a) {
  if (a != 0) num_.assign(1, mpq_class(a));
}

RationalFn::RationalFn(const mpq_class& a) {
  if (sgn(a) != 0) num_.assign(1, a);
}

RationalFn::RationalFn(const QPoly& p) {
  num_ = dense_of(p, e_);
  normalize();
}

RationalFn RationalFn::fraction(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  RationalFn r;
  int en = 0, ed = 0;
  r.num_ = dense_of(num, en);
  r.den_ = dense_of(den, ed);
  r.e_ = en - ed;
  r.normalize();
  return r;
}

void RationalFn::normalize() {
  qvec::trim(num_);
  if (num_.empty()) {
    e_ = 0;
    den_.assign(1, mpq_class(1));
    return;
  }
  std::size_t k = 0;
  while (sgn(num_[k]) == 0) ++k;
  num_.erase(num_.begin(), num_.begin() + static_cast<long>(k));
  e_ += static_cast<int>(k);
  qvec::trim(den_);
  k = 0;
  while (sgn(den_[k]) == 0) ++k;
  den_.erase(den_.begin(), den_.begin() + static_cast<long>(k));
  e_ -= static_cast<int>(k);
  if (den_.size() > 1) {
    QVec g = qvec::gcd(num_, den_);
    if (g.size() > 1) {
      QVec q, r;
      qvec::divmod(num_, g, q, r);
      num_ = std::move(q);
      qvec::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  mpq_class lead = den_.back();
  if (lead != 1) {
    mpq_class inv = mpq_class(1) / lead;
    qvec::scale(num_, inv);
    qvec::scale(den_, inv);
  }
}

RationalFn RationalFn::reduced() const {
  RationalFn r = *this;
  r.normalize();
  return r;
}

QPoly RationalFn::to_laurent() const {
  if (!is_laurent()) throw std::domain_error("not a Laurent polynomial: " + str());
  return laurent_of(num_, e_);
}

QPoly RationalFn::numerator() const { return laurent_of(num_, e_); }
QPoly RationalFn::denominator() const { return laurent_of(den_, 0); }

bool RationalFn::in_O() const {
  if (is_zero()) return true;
  // x = c * N / D with N, D primitive in Z[v]; x in O iff D(0) = +-1 and c in Z.
  mpq_class cn = content(num_), cd = content(den_);
  mpq_class d0 = den_[0] / cd;
  if (abs(d0) != 1) return false;
  mpq_class c = cn / cd;
  return c.get_den() == 1;
}

bool RationalFn::in_Ap(long p) const {
  if (is_zero()) return true;
  mpq_class c = content(num_) / content(den_);
  c.canonicalize();
  mpz_class pz(p);
  return !mpz_divisible_p(c.get_den_mpz_t(), pz.get_mpz_t());
}

bool RationalFn::in_A() const {
  if (!is_laurent()) return false;
  for (auto& c : num_)
    if (c.get_den() != 1) return false;
  return true;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  RationalFn r;
  r.num_ = den_;
  r.den_ = num_;
  r.e_ = -e_;
  r.normalize();
  return r;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // Bring both to a common power of v, then add fractions.
  int e = std::min(e_, o.e_);
  QVec a = num_, b = o.num_;
  a.insert(a.begin(), static_cast<std::size_t>(e_ - e), mpq_class(0));
  b.insert(b.begin(), static_cast<std::size_t>(o.e_ - e), mpq_class(0));
  if (den_ == o.den_) {
    num_ = qvec::add(a, b);
  } else {
    num_ = qvec::add(qvec::mul(a, o.den_), qvec::mul(b, den_));
    den_ = qvec::mul(den_, o.den_);
  }
  e_ = e;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  num_ = qvec::mul(num_, o.num_);
  den_ = qvec::mul(den_, o.den_);
  e_ += o.e_;
  normalize();
  return *this;
}

std::string RationalFn::str() const {
  std::string n = laurent_of(num_, e_).str();
  if (den_.size() == 1) return n;
  return "(" + n + ")/(" + laurent_of(den_, 0).str() + ")";
}

}  // namespace cellkit
