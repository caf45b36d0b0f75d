#include "cellkit/cyclo.hpp"

#include "qvec.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cellkit {

namespace {

using qvec::QVec;
using qvec::trim;

// Cyclotomic polynomial Phi_N over Z, memoized.
const QVec& cyclotomic_poly(int N) {
  static std::map<int, QVec> memo;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lk(mu);
  auto it = memo.find(N);
  if (it != memo.end()) return it->second;
  QVec p(static_cast<std::size_t>(N) + 1, mpq_class(0));
  p[0] = -1;
  p[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    QVec q, r;
    qvec::divmod(p, cyclotomic_poly(d), q, r);
    p = q;
  }
  return memo.emplace(N, p).first->second;
}

// 2cos(k t) as a polynomial in 2cos(t).
QVec chebyshev_c(int k) {
  QVec c0{mpq_class(2)}, c1{mpq_class(0), mpq_class(1)};
  if (k == 0) return c0;
  for (int i = 2; i <= k; ++i) {
    QVec c2 = qvec::sub(qvec::mul(QVec{mpq_class(0), mpq_class(1)}, c1), c0);
    c0 = std::move(c1);
    c1 = std::move(c2);
  }
  return c1;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

std::vector<mpq_class> real_cyclotomic_minpoly(int N) {
  if (N < 1) throw std::invalid_argument("conductor must be positive");
  if (N == 1) return {mpq_class(-2), mpq_class(1)};
  if (N == 2) return {mpq_class(2), mpq_class(1)};
  const QVec& phi = cyclotomic_poly(N);
  int h = static_cast<int>(phi.size() - 1) / 2;
  QVec r{phi[static_cast<std::size_t>(h)]};
  for (int k = 1; k <= h; ++k) {
    QVec ck = chebyshev_c(k);
    for (auto& c : ck) c *= phi[static_cast<std::size_t>(h + k)];
    if (r.size() < ck.size()) r.resize(ck.size(), mpq_class(0));
    for (std::size_t i = 0; i < ck.size(); ++i) r[i] += ck[i];
  }
  trim(r);
  return r;
}

std::shared_ptr<const CycloField> cyclo_field(int N) {
  static std::map<int, std::shared_ptr<const CycloField>> reg;
  {
    std::lock_guard<std::mutex> lk(registry_mutex());
    auto it = reg.find(N);
    if (it != reg.end()) return it->second;
  }
  QVec mp = real_cyclotomic_minpoly(N);
  std::shared_ptr<const CycloField> out;
  if (mp.size() > 2) {
    auto f = std::make_shared<CycloField>();
    f->N = N;
    f->deg = static_cast<int>(mp.size()) - 1;
    f->minpoly = mp;
    f->xval = 2.0L * std::cos(2.0L * 3.141592653589793238462643383279502884L / N);
    QVec cur(static_cast<std::size_t>(f->deg), mpq_class(0));
    for (int i = 0; i < f->deg; ++i) cur[static_cast<std::size_t>(i)] = -mp[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < f->deg; ++i) {
      f->high.push_back(cur);
      QVec nxt(static_cast<std::size_t>(f->deg), mpq_class(0));
      mpq_class top = cur.back();
      for (int j = f->deg - 1; j >= 1; --j) nxt[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
      for (int j = 0; j < f->deg; ++j) nxt[static_cast<std::size_t>(j)] -= top * mp[static_cast<std::size_t>(j)];
      cur = std::move(nxt);
    }
    out = f;
  }
  std::lock_guard<std::mutex> lk(registry_mutex());
  return reg.emplace(N, out).first->second;
}

Cyclo Cyclo::from_coeffs(int N, std::vector<mpq_class> coeffs) {
  Cyclo r;
  r.f_ = cyclo_field(N);
  if (!r.f_) {
    // Degree-one field: evaluate at the rational generator.
    mpq_class x = N == 1 ? 2 : N == 2 ? -2 : N == 3 ? -1 : N == 4 ? 0 : 1;
    mpq_class s = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
    r.c_.assign(1, s);
    return r;
  }
  // Reduce an arbitrary-degree polynomial in x_N modulo the minimal polynomial.
  QVec q, rem;
  trim(coeffs);
  qvec::divmod(coeffs, r.f_->minpoly, q, rem);
  rem.resize(static_cast<std::size_t>(r.f_->deg), mpq_class(0));
  r.c_ = std::move(rem);
  return r;
}

Cyclo Cyclo::cos2pi(long k, int N) {
  long kk = ((k % N) + N) % N;
  if (kk > N / 2) kk = N - kk;
  return from_coeffs(N, chebyshev_c(static_cast<int>(kk)));
}

bool Cyclo::is_zero() const {
  for (auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

mpq_class Cyclo::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is irrational: " + str());
  return c_[0];
}

long double Cyclo::to_long_double() const {
  long double x = f_ ? f_->xval : 0.0L;
  long double s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + static_cast<long double>(it->get_d());
  return s;
}

int Cyclo::sign() const {
  if (is_zero()) return 0;
  if (!f_) return sgn(c_[0]);
  long double x = f_->xval, s = 0, bound = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    s = s * x + static_cast<long double>(it->get_d());
    bound = bound * std::fabs(x) + std::fabs(static_cast<long double>(it->get_d()));
  }
  if (std::fabs(s) > 1e-12L * (bound + 1)) return s > 0 ? 1 : -1;
  // Nonzero but numerically close to zero: re-evaluate at increasing precision.
  for (mpfr_prec_t prec = 256; prec <= 65536; prec *= 2) {
    mpfr_t xv, acc, t, pi;
    mpfr_inits2(prec, xv, acc, t, pi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_ui(xv, pi, 2, MPFR_RNDN);
    mpfr_div_si(xv, xv, f_->N, MPFR_RNDN);
    mpfr_cos(xv, xv, MPFR_RNDN);
    mpfr_mul_ui(xv, xv, 2, MPFR_RNDN);
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      mpfr_mul(acc, acc, xv, MPFR_RNDN);
      mpfr_set_q(t, it->get_mpq_t(), MPFR_RNDN);
      mpfr_add(acc, acc, t, MPFR_RNDN);
    }
    long exp2 = 0;
    double mant = mpfr_get_d_2exp(&exp2, acc, MPFR_RNDN);
    int sg = mpfr_sgn(acc);
    mpfr_clears(xv, acc, t, pi, static_cast<mpfr_ptr>(nullptr));
    if (sg != 0 && mant != 0 && exp2 > -static_cast<long>(prec) / 2) return sg;
  }
  throw std::runtime_error("cyclotomic sign undecided");
}

Cyclo Cyclo::embed(int M) const {
  Cyclo r = *this;
  r.promote_to(M);
  return r;
}

void Cyclo::promote_to(int M) {
  int N = conductor();
  if (N == M) return;
  auto g = cyclo_field(M);
  if (!g) {
    if (f_) throw std::logic_error("cannot embed into a smaller field");
    return;
  }
  if (f_ && M % N != 0) throw std::logic_error("field embedding requires divisibility");
  if (!f_) {
    QVec c(static_cast<std::size_t>(g->deg), mpq_class(0));
    c[0] = c_[0];
    f_ = g;
    c_ = std::move(c);
    return;
  }
  static std::map<std::pair<int, int>, Cyclo> gen_cache;
  static std::mutex mu;
  Cyclo img;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = gen_cache.find({N, M});
    if (it == gen_cache.end()) it = gen_cache.emplace(std::make_pair(N, M), cos2pi(M / N, M)).first;
    img = it->second;
  }
  Cyclo acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= img;
    acc += Cyclo(*it);
  }
  acc.promote_to(M);
  *this = std::move(acc);
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (!o.f_) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (f_ != o.f_) {
    int M = std::lcm(conductor(), o.conductor());
    promote_to(M);
    if (f_ != o.f_) return *this += o.embed(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (!o.f_) {
    for (auto& c : c_) c *= o.c_[0];
    return *this;
  }
  if (!f_) {
    mpq_class s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    return *this;
  }
  if (f_ != o.f_) {
    int M = std::lcm(conductor(), o.conductor());
    promote_to(M);
    if (f_ != o.f_) return *this *= o.embed(M);
  }
  const int d = f_->deg;
  QVec prod(static_cast<std::size_t>(2 * d - 1), mpq_class(0));
  for (int i = 0; i < d; ++i) {
    if (sgn(c_[static_cast<std::size_t>(i)]) == 0) continue;
    for (int j = 0; j < d; ++j)
      prod[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
  }
  QVec r(prod.begin(), prod.begin() + d);
  for (int k = d; k < 2 * d - 1; ++k) {
    const mpq_class& a = prod[static_cast<std::size_t>(k)];
    if (sgn(a) == 0) continue;
    const QVec& h = f_->high[static_cast<std::size_t>(k - d)];
    for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] += a * h[static_cast<std::size_t>(j)];
  }
  c_ = std::move(r);
  return *this;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!f_) return Cyclo(mpq_class(1) / c_[0]);
  // Extended Euclid: find s with s*a = 1 mod minpoly.
  QVec r0 = f_->minpoly, r1 = c_;
  trim(r1);
  QVec s0{}, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QVec q, r;
    qvec::divmod(r0, r1, q, r);
    QVec s2 = qvec::sub(s0, qvec::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  mpq_class c = mpq_class(1) / r1[0];
  for (auto& x : s1) x *= c;
  return from_coeffs(f_->N, s1);
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.f_ == b.f_) return a.c_ == b.c_;
  return (a - b).is_zero();
}

Cyclo Cyclo::canonical() const {
  if (!f_) return *this;
  if (is_rational()) return Cyclo(c_[0]);
  const int M = f_->N, dM = f_->deg;
  for (int N = 3; N < M; ++N) {
    if (M % N) continue;
    auto g = cyclo_field(N);
    if (!g || g->deg > dM) continue;
    // Solve sum_j a_j * embed(x_N^j) = this over Q.
    const int dN = g->deg;
    std::vector<QVec> cols;
    for (int j = 0; j < dN; ++j) {
      QVec e(static_cast<std::size_t>(dN), mpq_class(0));
      e[static_cast<std::size_t>(j)] = 1;
      cols.push_back(from_coeffs(N, e).embed(M).c_);
    }
    std::vector<QVec> rows(static_cast<std::size_t>(dM), QVec(static_cast<std::size_t>(dN) + 1));
    for (int i = 0; i < dM; ++i) {
      for (int j = 0; j < dN; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(dN)] = c_[static_cast<std::size_t>(i)];
    }
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < dN && r < dM; ++c) {
      int p = -1;
      for (int i = r; i < dM; ++i)
        if (sgn(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
          p = i;
          break;
        }
      if (p < 0) continue;
      std::swap(rows[static_cast<std::size_t>(p)], rows[static_cast<std::size_t>(r)]);
      mpq_class inv = mpq_class(1) / rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      for (auto& x : rows[static_cast<std::size_t>(r)]) x *= inv;
      for (int i = 0; i < dM; ++i) {
        if (i == r || sgn(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) == 0) continue;
        mpq_class f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        for (int j = 0; j <= dN; ++j)
          rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
      piv.push_back(c);
      ++r;
    }
    bool ok = true;
    for (int i = r; i < dM; ++i)
      if (sgn(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(dN)]) != 0) ok = false;
    if (!ok) continue;
    QVec sol(static_cast<std::size_t>(dN), mpq_class(0));
    for (int i = 0; i < r; ++i) sol[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(dN)];
    return from_coeffs(N, sol);
  }
  return *this;
}

std::string Cyclo::str() const {
  Cyclo c = canonical();
  if (!c.f_) return c.c_[0].get_str();
  std::string s = "cyc(" + std::to_string(c.f_->N) + ";";
  for (std::size_t i = 0; i < c.c_.size(); ++i) {
    if (i) s += ",";
    s += c.c_[i].get_str();
  }
  return s + ")";
}

Cyclo Cyclo::parse(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.rfind("cyc(", 0) != 0) return Cyclo(mpq_class(std::string(s)));
  if (s.back() != ')') throw std::invalid_argument("bad cyclotomic literal");
  std::string body(s.substr(4, s.size() - 5));
  auto semi = body.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("bad cyclotomic literal");
  int N = std::stoi(body.substr(0, semi));
  QVec c;
  std::size_t pos = semi + 1;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    c.emplace_back(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (auto& x : c) x.canonicalize();
  return from_coeffs(N, c);
}

}  // namespace cellkit
