#include "cellkit/cyclo.hpp"
#include "cellkit/integer.hpp"
#include "cellkit/laurent.hpp"
#include "cellkit/ratfn.hpp"
#include "cellkit/check.hpp"

#include "doctest.h"

#include <climits>
#include <cmath>
#include <numbers>

using namespace cellkit;

namespace {

ZPoly random_zpoly(Sampler& S) {
  std::vector<ZPoly::Term> t;
  int n = S.below(4);
  for (int i = 0; i < n; ++i) t.emplace_back(S.below(9) - 4, Integer(S.below(7) - 3));
  return ZPoly::from_terms(t);
}

Cyclo random_cyclo(Sampler& S, int N) {
  Cyclo x = Cyclo::cos2pi(1, N);
  Cyclo r(S.below(5) - 2), p(1);
  for (int i = 0; i < 3; ++i) {
    p *= x;
    r += p * Cyclo(S.below(5) - 2);
  }
  return r;
}

}  // namespace

TEST_SUITE("exactalg") {

TEST_CASE("integer promotes past int64 and demotes back") {
  Integer a(LLONG_MAX);
  Integer b = a + Integer(1);
  CHECK_FALSE(b.is_small());
  CHECK(b.str() == "9223372036854775808");
  Integer c = b - Integer(1);
  CHECK(c.is_small());
  CHECK(c == a);
  Integer sq = a * a;
  CHECK(sq.to_mpz() == mpz_class("85070591730234615847396907784232501249"));
  CHECK(sq.divexact(a) == a);
  CHECK(-Integer(LLONG_MIN) == Integer(mpz_class("9223372036854775808")));
  CHECK(Integer::parse("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
  CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
}

TEST_CASE("integer add_mul matches mpz arithmetic") {
  Sampler S(7);
  for (int i = 0; i < 2000; ++i) {
    long long x = (static_cast<long long>(S.below(1 << 30)) << 33) - (1LL << 62);
    long long y = S.below(1 << 20) - (1 << 19);
    long long z = (static_cast<long long>(S.below(1 << 30)) << 32);
    Integer acc(x);
    acc.add_mul(Integer(y), Integer(z));
    mpz_class ref = mpz_class(static_cast<long>(x)) + mpz_class(static_cast<long>(y)) * mpz_class(static_cast<long>(z));
    CHECK(acc.to_mpz() == ref);
  }
}

TEST_CASE("laurent arithmetic") {
  ZPoly v = ZPoly::vpow(1), vi = ZPoly::vpow(-1);
  ZPoly s = v + vi;
  ZPoly sq = s * s;
  CHECK(sq.str() == "1*v^-2 + 2*v^0 + 1*v^2");
  CHECK(sq.bar() == sq);
  CHECK((v - vi).bar() == -(v - vi));
  CHECK(parse_zpoly(sq.str()) == sq);
  CHECK(parse_zpoly("0").is_zero());
  CHECK(sq.eval1() == Integer(4));
  CHECK_THROWS_AS(ZPoly().degree(), ZeroPolynomial);
}

TEST_CASE("laurent ring axioms on random polynomials") {
  Sampler S(kDefaultSeed);
  for (int i = 0; i < 500; ++i) {
    ZPoly a = random_zpoly(S), b = random_zpoly(S), c = random_zpoly(S);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a * b == b * a);
    CHECK(parse_zpoly(a.str()) == a);
  }
}

TEST_CASE("real cyclotomic fields against floating point") {
  for (int N : {5, 7, 8, 10, 12, 16}) {
    for (long k = 0; k < N; ++k) {
      Cyclo c = Cyclo::cos2pi(k, N);
      long double ref = 2 * std::cos(2 * std::numbers::pi_v<long double> * k / N);
      CHECK(std::fabs(static_cast<double>(c.to_long_double() - ref)) < 1e-12);
    }
  }
  Cyclo x5 = Cyclo::cos2pi(1, 5);
  CHECK(x5 * x5 + x5 - Cyclo(1) == Cyclo(0));
  Cyclo x8 = Cyclo::cos2pi(1, 8);
  CHECK(x8 * x8 == Cyclo(2));
  CHECK(Cyclo::cos2pi(1, 6) == Cyclo(1));
  CHECK(Cyclo::cos2pi(1, 4).is_zero());
  CHECK(Cyclo::cos2pi(2, 10).canonical().conductor() == 5);
  CHECK(x5.sign() > 0);
  CHECK(Cyclo::cos2pi(2, 5).sign() < 0);
}

TEST_CASE("cyclotomic field axioms and round trips") {
  Sampler S(11);
  for (int N : {5, 7, 8, 12}) {
    for (int i = 0; i < 100; ++i) {
      Cyclo a = random_cyclo(S, N), b = random_cyclo(S, N);
      CHECK(Cyclo::parse(a.str()) == a);
      CHECK((a + b) - b == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(1));
      double fa = static_cast<double>(a.to_long_double()), fb = static_cast<double>(b.to_long_double());
      CHECK(std::fabs(static_cast<double>((a * b).to_long_double()) - fa * fb) < 1e-9);
      if (std::fabs(fa - fb) > 1e-9) CHECK((a < b) == (fa < fb));
    }
  }
  CHECK((Cyclo::cos2pi(1, 5) + Cyclo::cos2pi(1, 8)).conductor() == 40);
}

TEST_CASE("rational functions") {
  QPoly one = QPoly::constant(mpq_class(1));
  QPoly v = QPoly::vpow(1);
  RationalFn a = RationalFn::fraction(one + v, one - v * v);
  RationalFn b = RationalFn::fraction(one, one - v);
  CHECK(a == b);
  CHECK(a.in_O());
  CHECK_FALSE(a.is_laurent());
  RationalFn c = RationalFn::fraction(one, QPoly::constant(mpq_class(2)) + v);
  CHECK_FALSE(c.in_O());
  CHECK(c.in_Ap(2));
  CHECK(c.in_Ap(3));
  RationalFn d(QPoly::vpow(-3));
  CHECK(d.in_O());
  CHECK(d.in_A());
  CHECK(d * d.inverse() == RationalFn(1));
  CHECK((a - b).is_zero());
  RationalFn e = RationalFn::fraction(QPoly::constant(mpq_class(1, 2)), one);
  CHECK_FALSE(e.in_A());
  CHECK_FALSE(e.in_Ap(2));
  CHECK(e.in_Ap(3));
}

}  // TEST_SUITE
