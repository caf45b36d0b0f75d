#pragma once

#include "cellkit/cells.hpp"
#include "cellkit/chartable.hpp"
#include "cellkit/check.hpp"
#include "cellkit/ratfn.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cellkit {

struct SingularSpecialization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using CPoly = LaurentPoly<Cyclo>;

struct RepOptions {
  int schur_max_order = 200;  // tr(T_w, E_v), c_E and central characters up to this order
  int threads = 0;
};

enum class Ring { O, Ap };

// Representation-theoretic data attached to the cells of (W, L).
class Representations {
 public:
  Representations(std::shared_ptr<const CellData> cells, RepOptions opt = {});

  const CellData& cells() const { return *C_; }
  const CoxeterGroup& group() const { return C_->group(); }
  // Labels of generic tables carry the a-invariant: "phi<dim>,<a>" plus "#k" on ties.
  const CharacterTable& table() const { return T_; }
  int irr() const { return T_.size(); }

  // theta(z, E) = tr(t_z, E_spade); unavailable if the specialized phi is singular.
  bool has_theta() const { return theta_ok_; }
  const std::string& theta_error() const { return theta_err_; }
  const Cyclo& theta(int z, int E) const { return theta_[static_cast<std::size_t>(z) * irr() + E]; }

  const Cyclo& f(int E) const { return f_[static_cast<std::size_t>(E)]; }
  int a(int E) const { return aE_[static_cast<std::size_t>(E)]; }
  // g_w(E) = tr(c_w^dagger, E_v).
  const CPoly& g(int w, int E) const { return g_[static_cast<std::size_t>(w) * irr() + E]; }

  // Left-cell characters indexed like partition(Side::Left).
  // Route (i): v = 1 specialization of the c^dagger action on [Gamma].
  const std::vector<CharVector>& cell_characters() const { return cellchar_; }
  // Route (ii): n_d theta(d, E) with d the element of D in the cell (empty if none).
  const std::vector<CharVector>& cell_characters_theta() const { return cellchar_theta_; }
  // Character of the module spanned by c^dagger_y (y in elems), for elems a union of left cells.
  CharVector module_character(const std::vector<int>& elems) const;

  // Two-sided cell index of the block of E (-1 if t_c E vanishes for every c, -2 if several).
  const std::vector<int>& block_of() const { return block_; }
  std::vector<int> block_members(int two_sided) const;

  bool has_schur() const { return schur_ok_; }
  const CPoly& trace_T(int w, int E) const { return trT_[static_cast<std::size_t>(w) * irr() + E]; }
  const CPoly& schur(int E) const { return cE_[static_cast<std::size_t>(E)]; }

  // omega_E(z_C) as [class][E]; requires a rational table and has_schur().
  bool has_central() const { return central_ok_; }
  const RationalFn& omega(int C, int E) const { return omega_[static_cast<std::size_t>(C)][static_cast<std::size_t>(E)]; }
  // sum over E in block of (1/c_E) [E:P] omega_E(z_C) lies in R, per class C.
  std::vector<bool> check_central_condition(const CharVector& P, const std::vector<int>& block, Ring ring, long p = 2) const;

  // Internal consistency checks.
  Check check_routes() const;      // route (i) == route (ii)
  Check check_tau() const;         // sum_E theta(z,E)/f_E = tau(t_z)
  Check check_positive_f() const;  // f_E > 0
  Check check_specialization() const;  // tr(T_w, E_v)|_{v=1} = tr(w, E)
  Check check_schur() const;       // c_E = f_E v^{-2a_E} + higher
  Check check_recomposition() const;  // identity (c) recomposes to c_E delta
  Check check_omega_in_A() const;
  Check check_a_blocks() const;    // a_E = a(z) on the two-sided cell of the block
  Check check_regular() const;     // sum over left cells of [E:[Gamma]] = dim E

 private:
  void compute_cell_characters();
  void compute_theta();
  void compute_g_and_a();
  void compute_blocks();
  void compute_schur();
  void compute_central();
  void relabel();
  CharVector character_of_module(const CellModule& M) const;

  std::shared_ptr<const CellData> C_;
  RepOptions opt_;
  CharacterTable T_;
  bool theta_ok_ = false, schur_ok_ = false, central_ok_ = false;
  std::string theta_err_;
  std::vector<Cyclo> theta_, f_;
  std::vector<int> aE_, block_;
  std::vector<CPoly> g_, trT_, cE_;
  std::vector<CharVector> cellchar_, cellchar_theta_;
  std::vector<std::vector<RationalFn>> omega_;
};

// Frobenius induction of a class function of W_I (by the fusion of classes) to W.
std::vector<Cyclo> induce_class_function(const CoxeterGroup& G, const ParabolicData& P, const CharacterTable& sub,
                                         const std::vector<Cyclo>& f);
// Restriction of a class function of W to W_I.
std::vector<Cyclo> restrict_class_function(const CoxeterGroup& G, const ParabolicData& P, const CharacterTable& sub,
                                           const std::vector<Cyclo>& f);

std::string charvector_str(const CharacterTable& T, const CharVector& v);

}  // namespace cellkit
