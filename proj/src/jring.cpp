#include "cellkit/jring.hpp"

#include "cellkit/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace cellkit {

JRing::JRing(std::shared_ptr<const CellData> cells) : C_(std::move(cells)) {}

JElement JRing::multiply(const JElement& a, const JElement& b) const {
  const CoxeterGroup& G = C_->group();
  JElement out;
  for (auto& [x, ax] : a)
    for (auto& [y, by] : b)
      for (auto& [z, g] : C_->gamma_row(x, y)) out[G.inverse(z)] += ax * by * g;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

JElement JRing::identity() const {
  JElement e;
  for (int d : C_->D()) e[d] = C_->n(d);
  return e;
}

std::vector<JElement> JRing::block_idempotents() const {
  const Partition& P = C_->partition(Side::TwoSided);
  std::vector<JElement> out(static_cast<std::size_t>(P.count()));
  for (int d : C_->D()) out[static_cast<std::size_t>(P.cell_of[static_cast<std::size_t>(d)])][d] = C_->n(d);
  return out;
}

long long JRing::tau(const JElement& a) const {
  long long s = 0;
  for (auto& [z, c] : a)
    if (C_->in_D(z)) s += c * C_->n(z);
  return s;
}

std::vector<std::vector<long long>> JRing::cell_jmodule(const std::vector<int>& cell, int w) const {
  const CoxeterGroup& G = C_->group();
  const std::size_t k = cell.size();
  std::vector<std::vector<long long>> M(k, std::vector<long long>(k, 0));
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[cell[i]] = i;
  for (std::size_t j = 0; j < k; ++j)
    for (auto& [z, g] : C_->gamma_row(w, cell[j])) {
      auto it = pos.find(G.inverse(z));
      if (it != pos.end()) M[it->second][j] += g;
    }
  return M;
}

PhiDeterminant JRing::phi_determinant(int max_order) const {
  PhiDeterminant out;
  const int N = size();
  if (N > max_order) return out;
  bool have = true;
  for (int w = 0; w < N && have; ++w) have = !C_->phi_column(w).empty();
  if (!have) return out;
  out.checked = true;
  out.block_triangular = true;
  for (int w = 0; w < N; ++w)
    for (auto& [z, p] : C_->phi_column(w))
      if (!C_->leq(Side::Right, z, w)) out.block_triangular = false;
  const Partition& R = C_->partition(Side::Right);
  ZPoly det(1);
  for (auto& cell : R.cells) {
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < cell.size(); ++i) pos[cell[i]] = i;
    Matrix<ZPoly> B(cell.size(), std::vector<ZPoly>(cell.size()));
    for (std::size_t j = 0; j < cell.size(); ++j)
      for (auto& [z, p] : C_->phi_column(cell[j])) {
        auto it = pos.find(z);
        if (it != pos.end()) B[it->second][j] = p;
      }
    det *= laurent_det(B);
  }
  out.det = det;
  for (int w = 0; w < N; ++w) out.e += C_->a(w);
  if (!det.is_zero()) {
    ZPoly s = det.shifted(out.e);
    Integer lo = s.lowest();
    out.unit_form = s.valuation() == 0 && (lo == Integer(1) || lo == Integer(-1));
  }
  return out;
}

namespace {

std::string pair_str(const CoxeterGroup& G, int x, int y) { return "(" + G.word_str(x) + ", " + G.word_str(y) + ")"; }

}  // namespace

std::string jelement_str(const CoxeterGroup& G, const JElement& a) {
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : a) {
    os << (first ? "" : " + ") << c << "*t[" << G.word_str(w) << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

Check JRing::check_identity() const {
  Check ck("J identity");
  const CoxeterGroup& G = C_->group();
  JElement one = identity();
  for (int w = 0; w < size(); ++w) {
    JElement tw = basis(w);
    ck.expect(multiply(one, tw) == tw, "1_J t_w != t_w for w = " + G.word_str(w));
    ck.expect(multiply(tw, one) == tw, "t_w 1_J != t_w for w = " + G.word_str(w));
  }
  return ck;
}

Check JRing::check_blocks() const {
  Check ck("J block idempotents");
  const CoxeterGroup& G = C_->group();
  auto tc = block_idempotents();
  JElement sum;
  for (std::size_t i = 0; i < tc.size(); ++i) {
    for (auto& [w, c] : tc[i]) sum[w] += c;
    for (std::size_t j = 0; j < tc.size(); ++j) {
      JElement p = multiply(tc[i], tc[j]);
      ck.expect(i == j ? p == tc[i] : p.empty(), "t_c t_c' wrong for cells " + std::to_string(i) + "," + std::to_string(j));
    }
    for (int w = 0; w < size(); ++w)
      ck.expect(multiply(tc[i], basis(w)) == multiply(basis(w), tc[i]), "t_c not central at w = " + G.word_str(w));
  }
  ck.expect(sum == identity(), "1_J != sum of t_c");
  return ck;
}

Check JRing::check_tau(int exhaustive_order, long long samples, uint64_t seed) const {
  Check ck("tau(t_x t_y) = delta");
  const CoxeterGroup& G = C_->group();
  auto one = [&](int x, int y) {
    long long t = tau(multiply(x, y));
    ck.expect(t == (G.multiply(x, y) == 0 ? 1 : 0), "tau(t_x t_y) = " + std::to_string(t) + " at " + pair_str(G, x, y));
  };
  const int N = size();
  if (N <= exhaustive_order) {
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) one(x, y);
  } else {
    Sampler rng(seed);
    for (long long i = 0; i < samples; ++i) {
      int x = rng.below(N), y = rng.below(2) ? G.inverse(x) : rng.below(N);
      one(x, y);
    }
    ck.sampled(seed, samples);
  }
  return ck;
}

Check JRing::check_cell_units() const {
  Check ck("n_d t_w t_d = t_w");
  const CoxeterGroup& G = C_->group();
  const Partition& L = C_->partition(Side::Left);
  for (auto& cell : L.cells) {
    int d = C_->d_of(cell[0]);
    if (d < 0) {
      ck.fail("left cell of " + G.word_str(cell[0]) + " has no unique element of D");
      continue;
    }
    for (int w : cell) {
      JElement p = multiply(w, d);
      for (auto& [z, c] : p) c *= C_->n(d);
      ck.expect(p == basis(w), "n_d t_w t_d != t_w at " + pair_str(G, w, d));
    }
  }
  return ck;
}

Check JRing::check_associativity(long long samples, uint64_t seed) const {
  Check ck("J associativity");
  const CoxeterGroup& G = C_->group();
  Sampler rng(seed);
  const int N = size();
  const Partition& L = C_->partition(Side::Left);
  for (long long i = 0; i < samples; ++i) {
    // Bias towards nonzero products: y in the left cell of x^-1, z in the left cell of y^-1.
    int x = rng.below(N);
    auto& cy = L.cells[static_cast<std::size_t>(L.cell_of[static_cast<std::size_t>(G.inverse(x))])];
    int y = cy[static_cast<std::size_t>(rng.below(static_cast<int>(cy.size())))];
    auto& cz = L.cells[static_cast<std::size_t>(L.cell_of[static_cast<std::size_t>(G.inverse(y))])];
    int z = cz[static_cast<std::size_t>(rng.below(static_cast<int>(cz.size())))];
    JElement l = multiply(multiply(x, y), basis(z));
    JElement r = multiply(basis(x), multiply(y, z));
    ck.expect(l == r, "(t_x t_y) t_z != t_x (t_y t_z) at x=" + G.word_str(x) + " y=" + G.word_str(y) + " z=" + G.word_str(z));
  }
  ck.sampled(seed, samples);
  return ck;
}

Check JRing::check_left_criterion(int exhaustive_order, long long samples, uint64_t seed) const {
  Check ck("x ~L y iff t_x t_{y^-1} != 0");
  const CoxeterGroup& G = C_->group();
  const Partition& L = C_->partition(Side::Left);
  auto one = [&](int x, int y) {
    bool same = L.cell_of[static_cast<std::size_t>(x)] == L.cell_of[static_cast<std::size_t>(y)];
    bool nz = !multiply(x, G.inverse(y)).empty();
    ck.expect(same == nz, "criterion differs at " + pair_str(G, x, y));
  };
  const int N = size();
  if (N <= exhaustive_order) {
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y) one(x, y);
  } else {
    Sampler rng(seed);
    for (long long i = 0; i < samples; ++i) {
      int x = rng.below(N);
      int y;
      if (rng.below(2)) {
        auto& c = L.cells[static_cast<std::size_t>(L.cell_of[static_cast<std::size_t>(x)])];
        y = c[static_cast<std::size_t>(rng.below(static_cast<int>(c.size())))];
      } else {
        y = rng.below(N);
      }
      one(x, y);
    }
    ck.sampled(seed, samples);
  }
  return ck;
}

}  // namespace cellkit
