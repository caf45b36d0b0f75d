#include "cellkit/coxeter.hpp"

#include "cellkit/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cellkit {

std::string CoxeterSystem::name() const {
  std::string w;
  for (std::size_t i = 0; i < weights.size(); ++i) w += (i ? "," : "") + std::to_string(weights[i]);
  if (family == "I2") return "I2(" + std::to_string(param) + ")[" + w + "]";
  if (family == "H3" || family == "F4") return family + "[" + w + "]";
  if (family == "sub") return "W(" + key() + ")";
  return family + std::to_string(param) + "[" + w + "]";
}

std::string CoxeterSystem::key() const {
  std::ostringstream os;
  for (auto& row : matrix) {
    for (int x : row) os << x << '.';
    os << '/';
  }
  os << '|';
  for (int w : weights) os << w << '.';
  return os.str();
}

long long classical_order(const std::string& family, int p) {
  auto fact = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  if (family == "A") return fact(p + 1);
  if (family == "B") return (1LL << p) * fact(p);
  if (family == "D") return (1LL << p) * fact(p);  // extended group B_p
  if (family == "I2") return 2LL * p;
  if (family == "H3") return 120;
  if (family == "F4") return 1152;
  throw UnsupportedType("unknown family " + family);
}

namespace {

std::vector<std::vector<int>> chain(int n, const std::vector<int>& bonds) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = bonds[static_cast<std::size_t>(i)];
    m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = bonds[static_cast<std::size_t>(i)];
  }
  return m;
}

void validate(const CoxeterSystem& s) {
  int n = s.n();
  if (static_cast<int>(s.matrix.size()) != n || static_cast<int>(s.weights.size()) != n)
    throw std::invalid_argument("Coxeter matrix, labels and weights disagree in size");
  if (n > 30) throw UnsupportedType("too many generators");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(s.matrix[static_cast<std::size_t>(i)].size()) != n) throw std::invalid_argument("Coxeter matrix not square");
    if (s.weights[static_cast<std::size_t>(i)] < 0) throw WeightConflict("negative weight");
    for (int j = 0; j < n; ++j) {
      int m = s.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (m != s.matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) throw std::invalid_argument("Coxeter matrix not symmetric");
      if (i == j && m != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
      if (i != j && m < 2) throw std::invalid_argument("Coxeter matrix off-diagonal must be >= 2");
      if (i != j && m % 2 == 1 && s.weights[static_cast<std::size_t>(i)] != s.weights[static_cast<std::size_t>(j)])
        throw WeightConflict("odd bond between " + s.labels[static_cast<std::size_t>(i)] + " and " +
                             s.labels[static_cast<std::size_t>(j)] + " forces equal weights");
    }
  }
}

}  // namespace

CoxeterSystem raw_system(std::vector<std::vector<int>> matrix, std::vector<int> weights,
                         std::vector<std::string> labels) {
  CoxeterSystem s;
  s.family = "sub";
  s.rank = static_cast<int>(matrix.size());
  s.param = s.rank;
  if (labels.empty())
    for (int i = 0; i < s.rank; ++i) labels.push_back("s" + std::to_string(i + 1));
  s.labels = std::move(labels);
  s.matrix = std::move(matrix);
  s.weights = std::move(weights);
  validate(s);
  return s;
}

CoxeterSystem native_d(int m, int weight) {
  std::vector<std::vector<int>> mat(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 2));
  std::vector<std::string> labels{"u"};
  for (int i = 1; i < m; ++i) labels.push_back("s" + std::to_string(i));
  for (int i = 0; i < m; ++i) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  auto join = [&](int a, int b) {
    mat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 3;
    mat[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 3;
  };
  if (m >= 3) join(0, 2);
  for (int i = 1; i + 1 < m; ++i) join(i, i + 1);
  CoxeterSystem s = raw_system(mat, std::vector<int>(static_cast<std::size_t>(m), weight), labels);
  s.family = "Dnative";
  s.param = m;
  return s;
}

CoxeterSystem build_system(const std::string& family, int p, std::vector<int> weights) {
  CoxeterSystem s;
  s.family = family;
  s.param = p;
  auto need = [&](int n) {
    if (weights.empty()) weights.assign(static_cast<std::size_t>(n), 1);
    if (weights.size() == 1 && n > 1) weights.assign(static_cast<std::size_t>(n), weights[0]);
    if (static_cast<int>(weights.size()) < n) throw std::invalid_argument("too few weights for " + family);
    weights.resize(static_cast<std::size_t>(n));
  };
  if (family == "A") {
    if (p < 1 || p > 4) throw UnsupportedType("type A supported for ranks 1..4");
    need(p);
    s.matrix = chain(p, std::vector<int>(static_cast<std::size_t>(std::max(p - 1, 0)), 3));
    for (int i = 1; i <= p; ++i) s.labels.push_back("s" + std::to_string(i));
  } else if (family == "B" || family == "D") {
    int lo = family == "B" ? 2 : 3;
    if (p < lo || p > 4) throw UnsupportedType("type " + family + " supported for ranks " + std::to_string(lo) + "..4");
    if (family == "D") {
      std::vector<int> w{0};
      if (weights.empty()) weights.assign(1, 1);
      if (weights.size() == 1) w.resize(static_cast<std::size_t>(p), weights[0]);
      else if (static_cast<int>(weights.size()) == p - 1) w.insert(w.end(), weights.begin(), weights.end());
      else if (static_cast<int>(weights.size()) >= p && weights[0] == 0) w = weights;
      else throw std::invalid_argument("type D weights must be the s_i weights (omega has weight 0)");
      weights = w;
    }
    need(p);
    std::vector<int> bonds(static_cast<std::size_t>(p - 1), 3);
    bonds[0] = 4;
    s.matrix = chain(p, bonds);
    s.labels.push_back(family == "B" ? "t" : "w");
    for (int i = 1; i < p; ++i) s.labels.push_back("s" + std::to_string(i));
  } else if (family == "I2") {
    if (p < 3) throw UnsupportedType("I2(m) requires m >= 3");
    need(2);
    s.matrix = chain(2, {p});
    s.labels = {"s1", "s2"};
  } else if (family == "H3") {
    need(3);
    s.matrix = chain(3, {5, 3});
    s.labels = {"s1", "s2", "s3"};
  } else if (family == "F4") {
    need(4);
    s.matrix = chain(4, {3, 4, 3});
    s.labels = {"s1", "s2", "s3", "s4"};
  } else {
    throw UnsupportedType("unsupported family " + family);
  }
  s.rank = static_cast<int>(s.labels.size());
  s.weights = weights;
  validate(s);
  return s;
}

namespace {

// Arithmetic in Z[x_N] with integer coefficient vectors of length deg.
struct RealCycloRing {
  int N = 1, deg = 1;
  std::vector<std::vector<long long>> high;
  long double xval = 0;

  std::vector<long long> mul(const std::vector<long long>& a, const std::vector<long long>& b) const {
    std::vector<long long> p(static_cast<std::size_t>(2 * deg - 1), 0);
    for (int i = 0; i < deg; ++i) {
      if (!a[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < deg; ++j) p[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    std::vector<long long> r(p.begin(), p.begin() + deg);
    for (int k = deg; k < 2 * deg - 1; ++k)
      for (int j = 0; j < deg; ++j) r[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(k)] * high[static_cast<std::size_t>(k - deg)][static_cast<std::size_t>(j)];
    return r;
  }
  long double value(const long long* a) const {
    long double s = 0;
    for (int i = deg - 1; i >= 0; --i) s = s * xval + static_cast<long double>(a[i]);
    return s;
  }
};

std::vector<long long> to_int_vec(const Cyclo& c, int deg) {
  std::vector<long long> r(static_cast<std::size_t>(deg), 0);
  const auto& cf = c.coeffs();
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (cf[i].get_den() != 1) throw std::logic_error("non-integral Cartan entry");
    r[i] = cf[i].get_num().get_si();
  }
  return r;
}

struct VecHash {
  std::size_t operator()(const std::vector<long long>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterSystem sys, int cap) : sys_(std::move(sys)), n_(sys_.n()) {
  // Ring containing every 2 + 2cos(2pi/m).
  int N = 1;
  for (auto& row : sys_.matrix)
    for (int m : row)
      if (m >= 5 && m != 6) N = std::lcm(N, m);
  RealCycloRing ring;
  ring.N = N;
  auto field = cyclo_field(N);
  if (field) {
    ring.deg = field->deg;
    ring.xval = field->xval;
    for (auto& h : field->high) ring.high.push_back(to_int_vec(Cyclo::from_coeffs(N, h), ring.deg));
  }
  const int d = ring.deg;
  // Cartan entries A[s][t] as ring elements.
  std::vector<std::vector<std::vector<long long>>> A(static_cast<std::size_t>(n_));
  for (int s = 0; s < n_; ++s) {
    for (int t = 0; t < n_; ++t) {
      int m = sys_.matrix[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      Cyclo v(0);
      if (s == t) v = Cyclo(2);
      else if (m >= 3) v = s < t ? Cyclo(-1) : -(Cyclo(2) + Cyclo::cos2pi(1, m));
      Cyclo e = field ? v.embed(N) : Cyclo(v.to_rational());
      A[static_cast<std::size_t>(s)].push_back(to_int_vec(e, d));
    }
  }
  // Element w is stored as the weight coordinates of w(rho); s acts by c_t -= c_s * A[s][t].
  auto act = [&](int s, const std::vector<long long>& c) {
    std::vector<long long> r = c;
    std::vector<long long> cs(c.begin() + s * d, c.begin() + (s + 1) * d);
    for (int t = 0; t < n_; ++t) {
      std::vector<long long> p = ring.mul(cs, A[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]);
      for (int k = 0; k < d; ++k) r[static_cast<std::size_t>(t * d + k)] -= p[static_cast<std::size_t>(k)];
    }
    return r;
  };
  auto coord_sign = [&](const std::vector<long long>& c, int s) {
    long double v = ring.value(c.data() + s * d);
    return v > 0 ? 1 : -1;
  };

  std::vector<long long> rho(static_cast<std::size_t>(n_ * d), 0);
  for (int s = 0; s < n_; ++s) rho[static_cast<std::size_t>(s * d)] = 1;

  std::vector<std::vector<long long>> vecs{rho};
  std::unordered_map<std::vector<long long>, int, VecHash> index{{rho, 0}};
  std::vector<int> layer{0};
  words_.push_back({});
  len_.push_back(0);
  lstart_.push_back(0);
  int L = 0;
  while (!layer.empty()) {
    std::vector<std::vector<long long>> nxt;
    std::unordered_map<std::vector<long long>, int, VecHash> seen;
    for (int w : layer) {
      for (int s = 0; s < n_; ++s) {
        if (coord_sign(vecs[static_cast<std::size_t>(w)], s) < 0) continue;
        auto v = act(s, vecs[static_cast<std::size_t>(w)]);
        if (!seen.count(v)) {
          seen.emplace(v, static_cast<int>(nxt.size()));
          nxt.push_back(std::move(v));
        }
      }
    }
    if (nxt.empty()) break;
    ++L;
    // Canonical word: smallest left descent followed by the canonical word of s*w.
    std::vector<std::pair<Word, std::vector<long long>>> items;
    for (auto& v : nxt) {
      int s0 = 0;
      while (coord_sign(v, s0) > 0) ++s0;
      auto sv = act(s0, v);
      Word wd{s0};
      const Word& rest = words_[static_cast<std::size_t>(index.at(sv))];
      wd.insert(wd.end(), rest.begin(), rest.end());
      items.emplace_back(std::move(wd), std::move(v));
    }
    std::sort(items.begin(), items.end(), [](auto& a, auto& b) { return a.first < b.first; });
    lstart_.push_back(static_cast<int>(vecs.size()));
    layer.clear();
    for (auto& [wd, v] : items) {
      int id = static_cast<int>(vecs.size());
      if (id >= cap) throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      index.emplace(v, id);
      vecs.push_back(std::move(v));
      words_.push_back(std::move(wd));
      len_.push_back(L);
      layer.push_back(id);
    }
  }
  size_ = static_cast<int>(vecs.size());
  lstart_.push_back(size_);

  lmul_.assign(static_cast<std::size_t>(n_) * size_, -1);
  ldesc_.assign(static_cast<std::size_t>(size_), 0);
  for (int w = 0; w < size_; ++w) {
    for (int s = 0; s < n_; ++s) {
      lmul_[static_cast<std::size_t>(s) * size_ + w] = index.at(act(s, vecs[static_cast<std::size_t>(w)]));
      if (coord_sign(vecs[static_cast<std::size_t>(w)], s) < 0) ldesc_[static_cast<std::size_t>(w)] |= 1u << s;
    }
  }
  inv_.assign(static_cast<std::size_t>(size_), 0);
  for (int w = 0; w < size_; ++w) {
    int x = 0;
    for (int s : words_[static_cast<std::size_t>(w)]) x = lmul(s, x);
    inv_[static_cast<std::size_t>(w)] = x;
  }
  rmul_.assign(static_cast<std::size_t>(n_) * size_, -1);
  rdesc_.assign(static_cast<std::size_t>(size_), 0);
  for (int w = 0; w < size_; ++w) {
    for (int s = 0; s < n_; ++s) rmul_[static_cast<std::size_t>(s) * size_ + w] = inverse(lmul(s, inverse(w)));
    rdesc_[static_cast<std::size_t>(w)] = ldesc_[static_cast<std::size_t>(inverse(w))];
  }
  wlen_.assign(static_cast<std::size_t>(size_), 0);
  for (int w = 1; w < size_; ++w) {
    const Word& wd = words_[static_cast<std::size_t>(w)];
    int rest = lmul(wd[0], w);
    wlen_[static_cast<std::size_t>(w)] = wlen_[static_cast<std::size_t>(rest)] + weight(wd[0]);
  }
}

std::string CoxeterGroup::word_str(int w) const {
  const Word& wd = word(w);
  if (wd.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < wd.size(); ++i) {
    if (i) s += "*";
    s += sys_.labels[static_cast<std::size_t>(wd[i])];
  }
  return s;
}

int CoxeterGroup::multiply(int a, int b) const {
  const Word& wa = word(a);
  int x = b;
  for (auto it = wa.rbegin(); it != wa.rend(); ++it) x = lmul(*it, x);
  return x;
}

int CoxeterGroup::from_word(const Word& w) const {
  int x = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 0 || *it >= n_) throw std::out_of_range("generator index out of range");
    x = lmul(*it, x);
  }
  return x;
}

void CoxeterGroup::build_bruhat() const {
  std::lock_guard<std::mutex> lk(*lazy_mu_);
  if (!below_.empty()) return;
  const std::size_t words64 = (static_cast<std::size_t>(size_) + 63) / 64;
  std::vector<std::vector<uint64_t>> b(static_cast<std::size_t>(size_), std::vector<uint64_t>(words64, 0));
  b[0][0] = 1;
  for (int w = 1; w < size_; ++w) {
    int s = word(w)[0];
    int sw = lmul(s, w);
    auto& bw = b[static_cast<std::size_t>(w)];
    bw = b[static_cast<std::size_t>(sw)];
    const auto& bsw = b[static_cast<std::size_t>(sw)];
    for (std::size_t k = 0; k < words64; ++k) {
      uint64_t m = bsw[k];
      while (m) {
        int bit = __builtin_ctzll(m);
        m &= m - 1;
        int x = static_cast<int>(k * 64) + bit;
        int sx = lmul(s, x);
        bw[static_cast<std::size_t>(sx) / 64] |= 1ULL << (sx % 64);
      }
    }
  }
  below_ = std::move(b);
}

bool CoxeterGroup::bruhat_leq(int x, int y) const {
  if (length(x) > length(y)) return false;
  build_bruhat();
  return (below_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x) / 64] >> (x % 64)) & 1ULL;
}

ParabolicData CoxeterGroup::parabolic(const std::vector<int>& I) const {
  ParabolicData P;
  P.I = I;
  std::vector<std::vector<int>> m;
  std::vector<int> w;
  std::vector<std::string> lab;
  for (int a : I) {
    std::vector<int> row;
    for (int b : I) row.push_back(sys_.matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    m.push_back(row);
    w.push_back(weight(a));
    lab.push_back(sys_.labels[static_cast<std::size_t>(a)]);
  }
  P.sub = std::make_shared<CoxeterGroup>(raw_system(m, w, lab));
  for (int u = 0; u < P.sub->size(); ++u) {
    Word wd;
    for (int j : P.sub->word(u)) wd.push_back(I[static_cast<std::size_t>(j)]);
    P.inject.push_back(from_word(wd));
  }
  uint32_t mask = 0;
  for (int a : I) mask |= 1u << a;
  for (int x = 0; x < size_; ++x) {
    if (!(right_descents(x) & mask)) P.left_reps.push_back(x);
    if (!(left_descents(x) & mask)) P.right_reps.push_back(x);
  }
  return P;
}

const ConjClasses& CoxeterGroup::classes() const {
  std::lock_guard<std::mutex> lk(*lazy_mu_);
  if (classes_) return *classes_;
  auto C = std::make_shared<ConjClasses>();
  C->class_of.assign(static_cast<std::size_t>(size_), -1);
  for (int w = 0; w < size_; ++w) {
    if (C->class_of[static_cast<std::size_t>(w)] >= 0) continue;
    int id = C->count();
    std::vector<int> orbit{w};
    C->class_of[static_cast<std::size_t>(w)] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int s = 0; s < n_; ++s) {
        int y = rmul(lmul(s, orbit[i]), s);
        if (C->class_of[static_cast<std::size_t>(y)] < 0) {
          C->class_of[static_cast<std::size_t>(y)] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    C->sizes.push_back(static_cast<int>(orbit.size()));
    C->reps.push_back(orbit.front());  // indices are ordered by length first
    C->members.push_back(std::move(orbit));
  }
  classes_ = C;
  return *classes_;
}

}  // namespace cellkit
