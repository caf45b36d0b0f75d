#include "cellkit/bsymbols.hpp"

#include "cellkit/constructible.hpp"
#include "cellkit/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace cellkit {

namespace {

bool increasing_in(const std::vector<int>& row, int hi) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 1 || row[i] > hi) return false;
    if (i && row[i] <= row[i - 1]) return false;
  }
  return true;
}

int triangle(int x) { return x * (x + 1) / 2; }

Partition1 shifted_partition(const std::vector<int>& row) {
  Partition1 p;
  for (std::size_t i = row.size(); i-- > 0;) {
    int part = row[i] - static_cast<int>(i) - 1;
    if (part > 0) p.push_back(part);
  }
  return p;
}

}  // namespace

bool Symbol::valid() const {
  return k >= 0 && r >= 0 && static_cast<int>(beta.size()) == k + r && static_cast<int>(gamma.size()) == k &&
         increasing_in(beta, n + 1) && increasing_in(gamma, n + 1);
}

std::string Symbol::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? " " : "") << beta[i];
  os << " | ";
  for (std::size_t i = 0; i < gamma.size(); ++i) os << (i ? " " : "") << gamma[i];
  os << ")";
  return os.str();
}

Symbol base_symbol(int n, int k, int r) {
  Symbol S;
  S.n = n;
  S.k = k;
  S.r = r;
  for (int i = 1; i <= k + r; ++i) S.beta.push_back(i);
  for (int i = 1; i <= k; ++i) S.gamma.push_back(i);
  if (!S.valid()) throw std::invalid_argument("no base symbol for these parameters");
  return S;
}

int principal_degree(const Symbol& S) {
  int d = 0;
  for (int b : S.beta) d += b;
  for (int g : S.gamma) d += g;
  return d - triangle(S.k) - triangle(S.k + S.r);
}

bool is_standard(const Symbol& S) {
  for (int i = 0; i < S.k; ++i)
    if (S.beta[static_cast<std::size_t>(i)] > S.gamma[static_cast<std::size_t>(i)]) return false;
  return true;
}

std::vector<Symbol> branch(const Symbol& S) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < S.beta.size(); ++i) {
    Symbol T = S;
    ++T.beta[i];
    if (T.valid()) out.push_back(T);
  }
  for (std::size_t i = 0; i < S.gamma.size(); ++i) {
    Symbol T = S;
    ++T.gamma[i];
    if (T.valid()) out.push_back(T);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool admissible(int n, int k, int r, int d) { return k >= d && r >= 0 && n >= d - 1 + k + r; }

std::map<Symbol, long long> path_counts(int n, int k, int r, int d) {
  std::map<Symbol, long long> level{{base_symbol(n, k, r), 1}};
  for (int step = 0; step < d; ++step) {
    std::map<Symbol, long long> next;
    for (auto& [S, c] : level)
      for (auto& T : branch(S)) next[T] += c;
    level = std::move(next);
  }
  return level;
}

std::vector<Symbol> symbols(int n, int k, int r, int d) {
  // Every symbol of degree d is reached from the base symbol by raising entries, so the
  // support of the path counts is all of Sy(n,k,r,d).
  std::vector<Symbol> out;
  for (auto& [S, c] : path_counts(n, k, r, d)) out.push_back(S);
  return out;
}

std::vector<Symbol> standard_symbols(int n, int k, int r, int d) {
  std::vector<Symbol> out;
  for (auto& S : symbols(n, k, r, d))
    if (is_standard(S)) out.push_back(S);
  return out;
}

BiPartition symbol_bipartition(const Symbol& S) { return {shifted_partition(S.beta), shifted_partition(S.gamma)}; }

CoxeterSystem b_system(int m, int r) {
  if (m == 0) return raw_system({}, {}, {});
  if (m == 1) return raw_system({{1}}, {r}, {"t"});
  std::vector<int> w(static_cast<std::size_t>(m), 1);
  w[0] = r;
  return build_system("B", m, w);
}

RegularExpansion regular_expansion(int m, int r) {
  RegularExpansion out;
  out.m = m;
  out.r = r;
  auto A = analyze(b_system(m, r));
  auto con = constructible_set(*A);
  const CharacterTable& T = A->T();
  for (auto& e : con->entries) out.con.push_back(e.v);
  for (int d : T.dims) out.dims.push_back(d);
  Matrix<mpq_class> M(static_cast<std::size_t>(T.size()), std::vector<mpq_class>(out.con.size()));
  std::vector<mpq_class> b(static_cast<std::size_t>(T.size()));
  for (int E = 0; E < T.size(); ++E) {
    b[static_cast<std::size_t>(E)] = T.dims[static_cast<std::size_t>(E)];
    for (std::size_t P = 0; P < out.con.size(); ++P) M[static_cast<std::size_t>(E)][P] = mpq_class(static_cast<long>(out.con[P][static_cast<std::size_t>(E)]));
  }
  auto x = solve_any(M, b);
  if (!x) {
    out.witness = "dimension vector is not in the rational span of Con(W)";
    return out;
  }
  out.coeff = *x;
  // Residual check, independent of the elimination.
  for (int E = 0; E < T.size(); ++E) {
    mpq_class s = 0;
    for (std::size_t P = 0; P < out.con.size(); ++P) s += out.coeff[P] * M[static_cast<std::size_t>(E)][P];
    if (s != b[static_cast<std::size_t>(E)]) {
      out.witness = "nonzero residual at " + T.labels[static_cast<std::size_t>(E)];
      return out;
    }
  }
  out.solvable = true;
  return out;
}

}  // namespace cellkit
