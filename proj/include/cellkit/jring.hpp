#pragma once

#include "cellkit/cells.hpp"
#include "cellkit/check.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace cellkit {

struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of J in the basis {t_w}.
using JElement = std::map<int, long long>;

struct PhiDeterminant {
  bool checked = false;
  bool block_triangular = false;
  bool unit_form = false;  // +-v^e det in 1 + vZ[v] with e = sum of a(w)
  ZPoly det;
  int e = 0;
};

class JRing {
 public:
  explicit JRing(std::shared_ptr<const CellData> cells);

  const CellData& cells() const { return *C_; }
  int size() const { return C_->size(); }

  static JElement basis(int w) { return {{w, 1}}; }
  // t_x t_y = sum_z gamma_{x,y,z} t_{z^-1}.
  JElement multiply(const JElement& a, const JElement& b) const;
  JElement multiply(int x, int y) const { return multiply(basis(x), basis(y)); }
  // 1_J = sum over D of n_d t_d.
  JElement identity() const;
  // t_c per two-sided cell, indexed like partition(Side::TwoSided).
  std::vector<JElement> block_idempotents() const;
  // tau(t_z) = n_z for z in D, else 0.
  long long tau(const JElement& a) const;
  // Matrix of t_w on span{t_y : y in cell}: [i][j] = coefficient of t_{cell[i]} in t_w t_{cell[j]}.
  std::vector<std::vector<long long>> cell_jmodule(const std::vector<int>& cell, int w) const;

  // Exact determinant of phi (block by block over right cells) when |W| <= max_order.
  PhiDeterminant phi_determinant(int max_order = 200) const;

  // Structural checks; exhaustive up to exhaustive_order, otherwise sampled.
  Check check_identity() const;
  Check check_blocks() const;
  Check check_tau(int exhaustive_order = 48, long long samples = 20000, uint64_t seed = kDefaultSeed) const;
  Check check_cell_units() const;  // n_d t_w t_d = t_w for w in the left cell of d
  Check check_associativity(long long samples = 1000, uint64_t seed = kDefaultSeed) const;
  Check check_left_criterion(int exhaustive_order = 48, long long samples = 20000, uint64_t seed = kDefaultSeed) const;

 private:
  std::shared_ptr<const CellData> C_;
};

std::string jelement_str(const CoxeterGroup& G, const JElement& a);

}  // namespace cellkit
