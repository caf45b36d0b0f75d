#pragma once

#include "cellkit/hecke.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace cellkit {

enum class Side { Left, Right, TwoSided };

struct Partition {
  std::vector<int> cell_of;
  std::vector<std::vector<int>> cells;  // each sorted; cells ordered by smallest element
  int count() const { return static_cast<int>(cells.size()); }
};

// Left cell module over a set Gamma of elements: the quotient of the left ideal
// spanned by {c_z : z <=_L Gamma} by the lower ideal. For Gamma = W this is H itself.
class CellModule {
 public:
  CellModule(const Hecke& H, std::vector<int> elements);
  const std::vector<int>& elements() const { return elems_; }
  int dim() const { return static_cast<int>(elems_.size()); }
  int local(int w) const;
  // c_s acting on local coordinates.
  SparseVec act(int s, const SparseVec& a) const;
  // For the local basis vector of y, calls fn(x, c_x c_y projected) for all x in index order.
  void products(int y, const std::function<void(int, const SparseVec&)>& fn) const;

 private:
  const Hecke* H_;
  std::vector<int> elems_;
  std::vector<int> loc_;
  std::vector<std::vector<SparseVec>> rho_;  // rho_[s][j]: c_s c_{elems_[j]} restricted
};

// Delta(z) when p_{e,z} = 0 (possible only with zero weights); n(z) is then 0.
inline constexpr int kInfiniteDelta = 1 << 30;

struct CellOptions {
  int full_threshold = 128;  // full h-table (exhaustive a-function) up to this order
  int threads = 0;
};

class CellData {
 public:
  CellData(std::shared_ptr<const Hecke> H, CellOptions opt = {});

  const Hecke& hecke() const { return *H_; }
  const CoxeterGroup& group() const { return H_->group(); }
  int size() const { return N_; }
  bool full() const { return full_; }

  const Partition& partition(Side s) const;
  // Elementary left edges: y <-_L w for y in edges_L(w).
  const std::vector<std::vector<int>>& left_edges() const { return ledges_; }
  // Preorders (reflexive transitive closures).
  bool leq(Side s, int y, int w) const;

  int a(int z) const { return a_[static_cast<std::size_t>(z)]; }
  int delta(int z) const { return delta_[static_cast<std::size_t>(z)]; }
  long long n(int z) const { return n_[static_cast<std::size_t>(z)]; }
  bool in_D(int z) const { return isD_[static_cast<std::size_t>(z)]; }
  const std::vector<int>& D() const { return D_; }
  // Element of D in the left cell of z (-1 if none or several).
  int d_of(int z) const { return dz_[static_cast<std::size_t>(z)]; }
  // n_d for d ~_L z^{-1}.
  long long nhat(int z) const;

  // gamma_{x,y,z}.
  long long gamma(int x, int y, int z) const;
  // Nonzero (z, gamma_{x,y,z}).
  const std::vector<std::pair<int, long long>>& gamma_row(int x, int y) const;
  const std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>>& gamma_table() const { return gamma_; }

  // Column w of phi: (z, nhat_z h_{w,d_z,z}).
  const SparseVec& phi_column(int w) const { return phi_[static_cast<std::size_t>(w)]; }

  // Full mode only: h_{x,y,*} as (z, h).
  const SparseVec& h_row(int x, int y) const;
  ZPoly h(int x, int y, int z) const;

 private:
  void build_edges();
  void build_partitions();
  void compute_delta();
  void compute_a_gamma();
  void compute_phi();
  void build_reach(Side s) const;

  std::shared_ptr<const Hecke> H_;
  CellOptions opt_;
  int N_ = 0;
  bool full_ = false;
  std::vector<std::vector<int>> ledges_;
  Partition part_[3];
  std::vector<int> a_, delta_, dz_, D_;
  std::vector<long long> n_;
  std::vector<char> isD_;
  std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>> gamma_;
  std::vector<SparseVec> phi_;
  std::vector<SparseVec> hfull_;
  mutable std::vector<std::vector<uint64_t>> reach_[3];
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

// Strongly connected components of a digraph, ordered by smallest member.
Partition scc_partition(const std::vector<std::vector<int>>& adj);

}  // namespace cellkit
