#include "cellkit/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cellkit {

namespace {

using i64 = long long;

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}
i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> fac;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : fac)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

using ModMat = std::vector<std::vector<i64>>;

// Row-reduced basis of the null space of M (d x d) over F_p.
std::vector<std::vector<i64>> nullspace(ModMat M, i64 p) {
  const std::size_t n = M.size();
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t q = r;
    while (q < n && M[q][c] == 0) ++q;
    if (q == n) continue;
    std::swap(M[q], M[r]);
    i64 inv = invmod(M[r][c], p);
    for (auto& x : M[r]) x = x * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || M[i][c] == 0) continue;
      i64 f = M[i][c];
      for (std::size_t j = 0; j < n; ++j) M[i][j] = ((M[i][j] - f * M[r][j]) % p + p) % p;
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_piv(n, 0);
  for (int c : pivcol) is_piv[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<i64>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<i64> v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[static_cast<std::size_t>(pivcol[i])] = (p - M[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Subspace of F_p^r given by row basis in reduced echelon form.
struct Subspace {
  std::vector<std::vector<i64>> rows;
  std::vector<int> piv;
};

Subspace echelon(std::vector<std::vector<i64>> rows, i64 p) {
  Subspace S;
  const std::size_t r = rows.empty() ? 0 : rows[0].size();
  std::size_t k = 0;
  for (std::size_t c = 0; c < r && k < rows.size(); ++c) {
    std::size_t q = k;
    while (q < rows.size() && rows[q][c] == 0) ++q;
    if (q == rows.size()) continue;
    std::swap(rows[q], rows[k]);
    i64 inv = invmod(rows[k][c], p);
    for (auto& x : rows[k]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == k || rows[i][c] == 0) continue;
      i64 f = rows[i][c];
      for (std::size_t j = 0; j < r; ++j) rows[i][j] = ((rows[i][j] - f * rows[k][j]) % p + p) % p;
    }
    S.piv.push_back(static_cast<int>(c));
    ++k;
  }
  rows.resize(k);
  S.rows = std::move(rows);
  return S;
}

bool cyclo_less(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = (a[i] - b[i]).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

// Beta-set rim hook removal: all (partition, sign) obtained by removing an l-hook.
std::vector<std::pair<Partition1, int>> remove_hooks(const Partition1& lam, int l) {
  const int L = static_cast<int>(lam.size());
  std::vector<int> beta(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (L - 1 - i);
  std::vector<std::pair<Partition1, int>> out;
  for (int i = 0; i < L; ++i) {
    int b = beta[static_cast<std::size_t>(i)], nb = b - l;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > nb && c < b) ++between;
    std::vector<int> nbeta = beta;
    nbeta[static_cast<std::size_t>(i)] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    Partition1 mu;
    for (int j = 0; j < L; ++j) {
      int part = nbeta[static_cast<std::size_t>(j)] - (L - 1 - j);
      if (part > 0) mu.push_back(part);
    }
    out.emplace_back(std::move(mu), between % 2 ? -1 : 1);
  }
  return out;
}

long long mn_rec(const Partition1& lam, const std::vector<int>& cyc, std::size_t k, std::map<std::pair<Partition1, std::size_t>, long long>& memo) {
  if (k == cyc.size()) return lam.empty() ? 1 : 0;
  auto key = std::make_pair(lam, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long s = 0;
  for (auto& [mu, sg] : remove_hooks(lam, cyc[k])) s += sg * mn_rec(mu, cyc, k + 1, memo);
  memo.emplace(key, s);
  return s;
}

long long mnb_rec(const BiPartition& ab, const std::vector<std::pair<int, int>>& cyc, std::size_t k,
                  std::map<std::pair<BiPartition, std::size_t>, long long>& memo) {
  if (k == cyc.size()) return ab.first.empty() && ab.second.empty() ? 1 : 0;
  auto key = std::make_pair(ab, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long s = 0;
  const auto [l, eps] = cyc[k];
  for (auto& [mu, sg] : remove_hooks(ab.first, l)) s += sg * mnb_rec({mu, ab.second}, cyc, k + 1, memo);
  for (auto& [mu, sg] : remove_hooks(ab.second, l)) s += eps * sg * mnb_rec({ab.first, mu}, cyc, k + 1, memo);
  memo.emplace(key, s);
  return s;
}

void gen_partitions(int n, int maxp, Partition1& cur, std::vector<Partition1>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Signed permutation of {1..n} for an element of B_n (generator 0 = t, generator i = s_i).
std::vector<int> signed_perm(const CoxeterGroup& G, int w, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  const Word& wd = G.word(w);
  // w(i) = s_{a1}(...(s_{ak}(i))): apply letters from the right.
  for (int i = 0; i < n; ++i) {
    int x = i + 1;
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
      int s = *it;
      int ax = std::abs(x), sg = x < 0 ? -1 : 1;
      if (s == 0) {
        if (ax == 1) sg = -sg;
      } else if (ax == s) {
        ax = s + 1;
      } else if (ax == s + 1) {
        ax = s;
      }
      x = sg * ax;
    }
    img[static_cast<std::size_t>(i)] = x;
  }
  return img;
}

std::vector<int> perm_a(const CoxeterGroup& G, int w, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  const Word& wd = G.word(w);
  for (int i = 0; i < n; ++i) {
    int x = i;
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
      if (x == *it) x = *it + 1;
      else if (x == *it + 1) x = *it;
    }
    img[static_cast<std::size_t>(i)] = x;
  }
  return img;
}

std::vector<int> cycle_type(const std::vector<int>& img) {
  const std::size_t n = img.size();
  std::vector<char> seen(n, 0);
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      ++len;
      j = static_cast<std::size_t>(img[j]);
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<std::pair<int, int>> signed_cycle_type(const std::vector<int>& img) {
  const std::size_t n = img.size();
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, sg = 1;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      ++len;
      int x = img[j];
      if (x < 0) sg = -sg;
      j = static_cast<std::size_t>(std::abs(x) - 1);
    }
    out.emplace_back(len, sg);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

CharacterTable empty_table(const CoxeterGroup& G) {
  CharacterTable T;
  const ConjClasses& C = G.classes();
  T.order = G.size();
  T.class_sizes = C.sizes;
  T.class_reps = C.reps;
  for (int rep : C.reps) T.class_signs.push_back(G.length(rep) % 2 ? -1 : 1);
  return T;
}

void finish_rows(CharacterTable& T) {
  T.dims.clear();
  for (auto& row : T.values) T.dims.push_back(static_cast<int>(row[0].to_rational().get_num().get_si()));
}

CharacterTable model_a(const CoxeterGroup& G, int n) {
  CharacterTable T = empty_table(G);
  T.model = "A";
  std::vector<std::vector<int>> ct;
  for (int rep : T.class_reps) ct.push_back(cycle_type(perm_a(G, rep, n)));
  for (auto& lam : partitions(n)) {
    std::vector<Cyclo> row;
    for (auto& c : ct) row.emplace_back(static_cast<int>(mn_character(lam, c)));
    T.labels.push_back(partition_str(lam));
    T.values.push_back(std::move(row));
  }
  finish_rows(T);
  return T;
}

CharacterTable model_b(const CoxeterGroup& G, int n) {
  CharacterTable T = empty_table(G);
  T.model = "B";
  std::vector<std::vector<std::pair<int, int>>> ct;
  for (int rep : T.class_reps) ct.push_back(signed_cycle_type(signed_perm(G, rep, n)));
  for (auto& ab : bipartitions(n)) {
    std::vector<Cyclo> row;
    for (auto& c : ct) row.emplace_back(static_cast<int>(mn_character_b(ab, c)));
    T.labels.push_back(bipartition_str(ab));
    T.values.push_back(std::move(row));
  }
  finish_rows(T);
  return T;
}

CharacterTable model_i2(const CoxeterGroup& G, int m) {
  CharacterTable T = empty_table(G);
  T.model = "I2";
  struct Info {
    int parity, n1, n2;
    int rot;
  };
  std::vector<Info> info;
  for (int rep : T.class_reps) {
    const Word& wd = G.word(rep);
    int n1 = 0, n2 = 0;
    for (int s : wd) (s == 0 ? n1 : n2)++;
    int len = static_cast<int>(wd.size());
    info.push_back({len % 2, n1, n2, len / 2});
  }
  auto add = [&](const std::string& label, auto fn) {
    std::vector<Cyclo> row;
    for (auto& in : info) row.push_back(fn(in));
    T.labels.push_back(label);
    T.values.push_back(std::move(row));
  };
  add("1", [](const Info&) { return Cyclo(1); });
  add("sgn", [](const Info& in) { return Cyclo(in.parity ? -1 : 1); });
  if (m % 2 == 0) {
    add("sgn1", [](const Info& in) { return Cyclo(in.n2 % 2 ? -1 : 1); });
    add("sgn2", [](const Info& in) { return Cyclo(in.n1 % 2 ? -1 : 1); });
  }
  for (int j = 1; 2 * j < m; ++j)
    add("rho" + std::to_string(j), [&](const Info& in) { return in.parity ? Cyclo(0) : Cyclo::cos2pi(static_cast<long>(j) * in.rot, m).canonical(); });
  finish_rows(T);
  return T;
}

}  // namespace

std::vector<Partition1> partitions(int n) {
  std::vector<Partition1> out;
  Partition1 cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<BiPartition> bipartitions(int n) {
  std::vector<BiPartition> out;
  for (int k = n; k >= 0; --k)
    for (auto& a : partitions(k))
      for (auto& b : partitions(n - k)) out.emplace_back(a, b);
  return out;
}

std::string partition_str(const Partition1& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string bipartition_str(const BiPartition& p) { return "(" + partition_str(p.first) + "," + partition_str(p.second) + ")"; }

long long mn_character(const Partition1& lambda, const std::vector<int>& cycles) {
  std::map<std::pair<Partition1, std::size_t>, long long> memo;
  return mn_rec(lambda, cycles, 0, memo);
}

long long mn_character_b(const BiPartition& ab, const std::vector<std::pair<int, int>>& cycles) {
  std::map<std::pair<BiPartition, std::size_t>, long long> memo;
  return mnb_rec(ab, cycles, 0, memo);
}

int CharacterTable::index(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

int CharacterTable::trivial() const {
  for (int i = 0; i < size(); ++i) {
    bool ok = true;
    for (auto& x : values[static_cast<std::size_t>(i)]) ok = ok && x == Cyclo(1);
    if (ok) return i;
  }
  throw std::logic_error("no trivial character");
}

int CharacterTable::sign() const {
  for (int i = 0; i < size(); ++i) {
    bool ok = true;
    for (int c = 0; c < classes() && ok; ++c) ok = values[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == Cyclo(class_signs[static_cast<std::size_t>(c)]);
    if (ok) return i;
  }
  throw std::logic_error("no sign character");
}

std::vector<int> CharacterTable::sign_twist() const {
  std::vector<int> out(static_cast<std::size_t>(size()), -1);
  for (int i = 0; i < size(); ++i) {
    std::vector<Cyclo> tw = values[static_cast<std::size_t>(i)];
    for (int c = 0; c < classes(); ++c) tw[static_cast<std::size_t>(c)] *= Cyclo(class_signs[static_cast<std::size_t>(c)]);
    for (int j = 0; j < size(); ++j)
      if (values[static_cast<std::size_t>(j)] == tw) out[static_cast<std::size_t>(i)] = j;
    if (out[static_cast<std::size_t>(i)] < 0) throw std::logic_error("sign twist not in table");
  }
  return out;
}

CharVector CharacterTable::decompose(const std::vector<Cyclo>& f) const {
  CharVector out(static_cast<std::size_t>(size()));
  for (int e = 0; e < size(); ++e) {
    Cyclo s(0);
    for (int c = 0; c < classes(); ++c) {
      const Cyclo& fc = f[static_cast<std::size_t>(c)];
      if (fc.is_zero()) continue;
      s += fc * values[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)] * Cyclo(class_sizes[static_cast<std::size_t>(c)]);
    }
    s /= Cyclo(order);
    if (!s.is_rational()) throw std::logic_error("class function is not a character");
    mpq_class q = s.to_rational();
    if (q.get_den() != 1) throw std::logic_error("class function is not a character");
    out[static_cast<std::size_t>(e)] = q.get_num().get_si();
  }
  return out;
}

std::vector<Cyclo> CharacterTable::class_function(const CharVector& v) const {
  std::vector<Cyclo> f(static_cast<std::size_t>(classes()), Cyclo(0));
  for (int e = 0; e < size(); ++e) {
    long long m = v[static_cast<std::size_t>(e)];
    if (!m) continue;
    for (int c = 0; c < classes(); ++c) f[static_cast<std::size_t>(c)] += Cyclo(static_cast<int>(m)) * values[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)];
  }
  return f;
}

bool CharacterTable::orthogonal() const {
  for (int a = 0; a < size(); ++a)
    for (int b = a; b < size(); ++b) {
      Cyclo s(0);
      for (int c = 0; c < classes(); ++c)
        s += values[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] * values[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] *
             Cyclo(class_sizes[static_cast<std::size_t>(c)]);
      if (s != Cyclo(a == b ? order : 0)) return false;
    }
  return true;
}

CharacterTable dixon_table(const CoxeterGroup& G) {
  CharacterTable T = empty_table(G);
  T.model = "dixon";
  const ConjClasses& C = G.classes();
  const int r = C.count();
  const int N = G.size();
  if (r == 1) {
    T.labels = {"d1_1"};
    T.values = {{Cyclo(1)}};
    T.dims = {1};
    return T;
  }
  std::vector<int> ord(static_cast<std::size_t>(r));
  std::vector<std::vector<int>> pw(static_cast<std::size_t>(r));
  long long E = 1;
  for (int j = 0; j < r; ++j) {
    int g = C.reps[static_cast<std::size_t>(j)];
    std::vector<int> cls{C.class_of[0]};
    int x = g;
    while (x != 0) {
      cls.push_back(C.class_of[static_cast<std::size_t>(x)]);
      x = G.multiply(x, g);
    }
    ord[static_cast<std::size_t>(j)] = static_cast<int>(cls.size());
    pw[static_cast<std::size_t>(j)] = cls;
    E = std::lcm(E, static_cast<long long>(cls.size()));
    if (C.class_of[static_cast<std::size_t>(G.inverse(g))] != j) throw std::logic_error("class not closed under inversion");
  }
  // a[j][k][l] = #{x in C_j : x^-1 z_l in C_k}
  std::vector<i64> a(static_cast<std::size_t>(r) * r * r, 0);
  auto A = [&](int j, int k, int l) -> i64& { return a[(static_cast<std::size_t>(j) * r + k) * r + l]; };
  for (int l = 0; l < r; ++l) {
    int z = C.reps[static_cast<std::size_t>(l)];
    for (int x = 0; x < N; ++x) A(C.class_of[static_cast<std::size_t>(x)], C.class_of[static_cast<std::size_t>(G.multiply(G.inverse(x), z))], l)++;
  }
  const int id = C.class_of[0];
  int maxclass = *std::max_element(C.sizes.begin(), C.sizes.end());
  i64 bound = std::max<i64>(2 * maxclass, 2 * static_cast<i64>(std::sqrt(static_cast<double>(N))) + 2);
  i64 p = (bound / E + 1) * E + 1;
  for (int attempt = 0; attempt < 20; ++attempt, p += E) {
    while (!is_prime(p)) p += E;
    std::vector<Subspace> spaces;
    {
      std::vector<std::vector<i64>> I(static_cast<std::size_t>(r), std::vector<i64>(static_cast<std::size_t>(r), 0));
      for (int i = 0; i < r; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
      spaces.push_back(echelon(I, p));
    }
    bool fail = false;
    for (int j = 0; j < r && !fail; ++j) {
      if (j == id) continue;
      std::vector<Subspace> next;
      for (auto& V : spaces) {
        const std::size_t d = V.rows.size();
        if (d == 1) {
          next.push_back(V);
          continue;
        }
        // R[:,i] = coordinates of M_j b_i in the basis.
        ModMat R(d, std::vector<i64>(d, 0));
        std::vector<std::vector<i64>> img(d, std::vector<i64>(static_cast<std::size_t>(r), 0));
        for (std::size_t i = 0; i < d; ++i) {
          for (int k = 0; k < r; ++k) {
            i64 s = 0;
            for (int l = 0; l < r; ++l) s += A(j, k, l) % p * V.rows[i][static_cast<std::size_t>(l)] % p;
            img[i][static_cast<std::size_t>(k)] = s % p;
          }
          for (std::size_t t = 0; t < d; ++t) R[t][i] = img[i][static_cast<std::size_t>(V.piv[t])];
        }
        std::size_t total = 0;
        for (i64 lam = 0; lam < p; ++lam) {
          ModMat Rl = R;
          for (std::size_t t = 0; t < d; ++t) Rl[t][t] = ((Rl[t][t] - lam) % p + p) % p;
          auto ns = nullspace(Rl, p);
          if (ns.empty()) continue;
          std::vector<std::vector<i64>> rows;
          for (auto& c : ns) {
            std::vector<i64> v(static_cast<std::size_t>(r), 0);
            for (std::size_t t = 0; t < d; ++t)
              for (int k = 0; k < r; ++k) v[static_cast<std::size_t>(k)] = (v[static_cast<std::size_t>(k)] + c[t] * V.rows[t][static_cast<std::size_t>(k)]) % p;
            rows.push_back(std::move(v));
          }
          total += rows.size();
          next.push_back(echelon(rows, p));
          if (total == d) break;
        }
        if (total != d) fail = true;
      }
      spaces = std::move(next);
    }
    if (fail) continue;
    for (auto& V : spaces)
      if (V.rows.size() != 1) fail = true;
    if (fail || static_cast<int>(spaces.size()) != r) continue;

    i64 zetaE = powmod(primitive_root(p), (p - 1) / E, p);
    std::vector<std::vector<Cyclo>> rows;
    for (auto& V : spaces) {
      std::vector<i64> w = V.rows[0];
      if (w[static_cast<std::size_t>(id)] == 0) {
        fail = true;
        break;
      }
      i64 inv0 = invmod(w[static_cast<std::size_t>(id)], p);
      for (auto& x : w) x = x * inv0 % p;
      i64 S = 0;
      for (int k = 0; k < r; ++k) S = (S + w[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(k)] % p * invmod(C.sizes[static_cast<std::size_t>(k)], p)) % p;
      if (S == 0) {
        fail = true;
        break;
      }
      i64 d2 = static_cast<i64>(N) % p * invmod(S, p) % p;
      i64 dim = -1;
      for (i64 d = 1; d * d <= N; ++d)
        if (d * d % p == d2) dim = d;
      if (dim < 0) {
        fail = true;
        break;
      }
      std::vector<i64> chi(static_cast<std::size_t>(r));
      for (int k = 0; k < r; ++k) chi[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k)] * dim % p * invmod(C.sizes[static_cast<std::size_t>(k)], p) % p;
      std::vector<Cyclo> row;
      for (int k = 0; k < r && !fail; ++k) {
        const int o = ord[static_cast<std::size_t>(k)];
        i64 zo = powmod(zetaE, E / o, p);
        i64 io = invmod(o, p);
        Cyclo val(0);
        i64 total = 0;
        for (int e = 0; e < o; ++e) {
          i64 s = 0;
          for (int l = 0; l < o; ++l) s = (s + chi[static_cast<std::size_t>(pw[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)])] * powmod(zo, (static_cast<i64>(o) - e) % o * l, p)) % p;
          i64 m = s * io % p;
          if (m > dim) {
            fail = true;
            break;
          }
          total += m;
          if (m) val += Cyclo(static_cast<int>(m)) * Cyclo::cos2pi(e, o);
        }
        if (total != dim) fail = true;
        row.push_back((val * Cyclo(mpq_class(1, 2))).canonical());
      }
      if (fail) break;
      rows.push_back(std::move(row));
    }
    if (fail) continue;
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      int dx = static_cast<int>(x[0].to_rational().get_num().get_si()), dy = static_cast<int>(y[0].to_rational().get_num().get_si());
      if (dx != dy) return dx < dy;
      return cyclo_less(x, y);
    });
    T.values = std::move(rows);
    finish_rows(T);
    std::map<int, int> seen;
    for (int d : T.dims) T.labels.push_back("d" + std::to_string(d) + "_" + std::to_string(++seen[d]));
    if (!T.orthogonal()) continue;
    return T;
  }
  throw SplittingFailure("class-algebra splitting failed for every tried prime");
}

CharacterTable character_table(const CoxeterGroup& G) {
  const CoxeterSystem& S = G.system();
  if (S.family == "A") return model_a(G, S.param + 1);
  if (S.family == "B" || S.family == "D") return model_b(G, S.param);
  if (S.family == "I2") return model_i2(G, S.param);
  return dixon_table(G);
}

std::vector<int> match_tables(const CharacterTable& a, const CharacterTable& b) {
  if (a.size() != b.size() || a.classes() != b.classes()) return {};
  std::vector<int> perm(static_cast<std::size_t>(a.size()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.size()), 0);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if (a.values[static_cast<std::size_t>(i)] == b.values[static_cast<std::size_t>(j)]) {
        perm[static_cast<std::size_t>(i)] = j;
        used[static_cast<std::size_t>(j)] = 1;
        break;
      }
    }
    if (perm[static_cast<std::size_t>(i)] < 0) return {};
  }
  return perm;
}

std::vector<Cyclo> reflection_character(const CoxeterGroup& G) {
  const int n = G.rank();
  const auto& M = G.system().matrix;
  // s acts by e_t -> e_t + 2cos(pi/m_st) e_s, so e_s -> -e_s.
  std::vector<std::vector<std::vector<Cyclo>>> gen(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    auto& A = gen[static_cast<std::size_t>(s)];
    A.assign(static_cast<std::size_t>(n), std::vector<Cyclo>(static_cast<std::size_t>(n)));
    for (int t = 0; t < n; ++t) A[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = Cyclo(1);
    for (int t = 0; t < n; ++t) {
      int m = s == t ? 1 : M[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      A[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] += Cyclo::cos2pi(1, 2 * m);
    }
  }
  const ConjClasses& C = G.classes();
  std::vector<Cyclo> out;
  for (int rep : C.reps) {
    std::vector<std::vector<Cyclo>> X(static_cast<std::size_t>(n), std::vector<Cyclo>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) X[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Cyclo(1);
    for (int s : G.word(rep)) {
      const auto& A = gen[static_cast<std::size_t>(s)];
      std::vector<std::vector<Cyclo>> Y(static_cast<std::size_t>(n), std::vector<Cyclo>(static_cast<std::size_t>(n)));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          const Cyclo& x = X[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
          if (x.is_zero()) continue;
          for (int j = 0; j < n; ++j) {
            const Cyclo& a = A[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            if (!a.is_zero()) Y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += x * a;
          }
        }
      X = std::move(Y);
    }
    Cyclo tr;
    for (int i = 0; i < n; ++i) tr += X[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    out.push_back(tr.canonical());
  }
  return out;
}

namespace {

std::vector<Cyclo> square_character(const CoxeterGroup& G, const std::vector<Cyclo>& chi, int sign) {
  const ConjClasses& C = G.classes();
  std::vector<Cyclo> out;
  for (std::size_t k = 0; k < C.reps.size(); ++k) {
    int w2 = G.multiply(C.reps[k], C.reps[k]);
    const Cyclo& c2 = chi[static_cast<std::size_t>(C.class_of[static_cast<std::size_t>(w2)])];
    Cyclo v = chi[k] * chi[k];
    v = sign > 0 ? v + c2 : v - c2;
    out.push_back((v * Cyclo(mpq_class(1, 2))).canonical());
  }
  return out;
}

}  // namespace

std::vector<Cyclo> sym2_character(const CoxeterGroup& G, const std::vector<Cyclo>& chi) { return square_character(G, chi, 1); }
std::vector<Cyclo> ext2_character(const CoxeterGroup& G, const std::vector<Cyclo>& chi) { return square_character(G, chi, -1); }

}  // namespace cellkit
