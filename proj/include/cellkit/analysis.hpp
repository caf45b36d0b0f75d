#pragma once

#include "cellkit/cells.hpp"
#include "cellkit/jring.hpp"
#include "cellkit/wrep.hpp"

#include <memory>
#include <string>

namespace cellkit {

struct AnalysisOptions {
  int threads = 0;
  int full_threshold = 128;
  int schur_max_order = 200;
};

// Full pipeline for one system: group, KL data, cells, J and representations.
struct Analysis {
  CoxeterSystem sys;
  std::shared_ptr<const CoxeterGroup> group;
  std::shared_ptr<const Hecke> hecke;
  std::shared_ptr<const CellData> cells;
  std::shared_ptr<const Representations> reps;
  std::shared_ptr<const JRing> jring;
  double seconds = 0;  // wall time of the build, never serialized into reports

  const CoxeterGroup& G() const { return *group; }
  const CellData& C() const { return *cells; }
  const Representations& R() const { return *reps; }
  const CharacterTable& T() const { return reps->table(); }
};

// Memoized by family, labels, Coxeter matrix and weights; safe to call from several threads.
std::shared_ptr<const Analysis> analyze(const CoxeterSystem& sys, const AnalysisOptions& opt = {});
// Analysis of W_I whose element indices agree with P.sub.
std::shared_ptr<const Analysis> analyze_parabolic(const ParabolicData& P, const AnalysisOptions& opt = {});
void clear_analysis_cache();
// Memo key used by analyze().
std::string analysis_key(const CoxeterSystem& sys);

// All subsets of {0..n-1} other than the full set, by decreasing size then lexicographically.
std::vector<std::vector<int>> proper_subsets(int n);
std::string subset_str(const CoxeterSystem& sys, const std::vector<int>& I);

}  // namespace cellkit
