#pragma once

#include "cellkit/coxeter.hpp"
#include "cellkit/laurent.hpp"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace cellkit {

// Sparse vector over Z[v, v^-1] indexed by group elements, sorted by index.
using SparseVec = std::vector<std::pair<int, ZPoly>>;

// Dense accumulator for sparse vectors with a touched-index list.
class Accumulator {
 public:
  explicit Accumulator(int n) : v_(static_cast<std::size_t>(n)), mark_(static_cast<std::size_t>(n), 0) {}
  void add(int i, const ZPoly& p, const Integer& c = Integer(1), int shift = 0) {
    if (p.is_zero()) return;
    touch(i);
    v_[static_cast<std::size_t>(i)].axpy(c, shift, p);
  }
  void add_product(int i, const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    touch(i);
    v_[static_cast<std::size_t>(i)] += a * b;
  }
  ZPoly& at(int i) {
    touch(i);
    return v_[static_cast<std::size_t>(i)];
  }
  // Extracts nonzero entries sorted by index and resets.
  SparseVec take();
  void clear();

 private:
  void touch(int i) {
    if (!mark_[static_cast<std::size_t>(i)]) {
      mark_[static_cast<std::size_t>(i)] = 1;
      touched_.push_back(i);
    }
  }
  std::vector<ZPoly> v_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

// Iwahori-Hecke algebra with its Kazhdan-Lusztig basis.
class Hecke {
 public:
  // Builds the full p-table; threads = 0 uses the hardware concurrency.
  explicit Hecke(std::shared_ptr<const CoxeterGroup> G, int threads = 0);

  const CoxeterGroup& group() const { return *G_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return G_; }
  int size() const { return G_->size(); }

  // p_{y,w}, zero unless y <= w; p_{w,w} = 1.
  ZPoly p(int y, int w) const;
  // Column of w: (y, p_{y,w}) sorted by y, including (w, 1).
  const SparseVec& column(int w) const { return cols_[static_cast<std::size_t>(w)]; }
  // For s w > w: c_s c_w = c_{sw} + sum mu[s][w] (z, m) m c_z.
  const SparseVec& mu(int s, int w) const { return mu_[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)]; }
  // Number of times a column was produced twice (from different left descents) and agreed.
  long long cross_checks() const { return cross_checks_; }

  // v_s^{+1} or v_s^{-1} as Laurent monomials.
  ZPoly vs(int s) const { return ZPoly::vpow(G_->weight(s)); }
  ZPoly vs_inv(int s) const { return ZPoly::vpow(-G_->weight(s)); }

  // c_s * (sum a_w c_w) in the c-basis.
  SparseVec left_c(int s, const SparseVec& a) const;
  // T-basis product.
  SparseVec multiply_T(const SparseVec& a, const SparseVec& b) const;
  // T_s * a in the T-basis.
  SparseVec left_T(int s, const SparseVec& a) const;
  // Change of basis between T and c.
  SparseVec to_c_basis(const SparseVec& a) const;
  SparseVec from_c_basis(const SparseVec& a) const;
  // c_x c_y in the c-basis computed through the T-basis (independent route).
  SparseVec product_c_via_T(int x, int y) const;
  // c_x c_y in the c-basis by left multiplications with generators.
  SparseVec product_c(int x, int y) const;

  // Bar invariance of c_w checked in the T-basis; returns false on failure.
  bool certify_bar(int w) const;
  // bar(T_y) in the T-basis (memoized).
  const SparseVec& bar_T(int y) const;

 private:
  void build(int threads);
  std::shared_ptr<const CoxeterGroup> G_;
  std::vector<SparseVec> cols_;
  std::vector<std::vector<SparseVec>> mu_;
  long long cross_checks_ = 0;
  mutable std::vector<std::unique_ptr<SparseVec>> bar_memo_;
  mutable std::shared_ptr<std::mutex> bar_mu_ = std::make_shared<std::mutex>();
};

// Canonical rendering of a sparse vector with element words.
std::string sparse_str(const CoxeterGroup& G, const SparseVec& v);

}  // namespace cellkit
