#include "cellkit/analysis.hpp"

#include "memo.hpp"

#include <algorithm>
#include <chrono>

namespace cellkit {

namespace {

KeyedMemo<Analysis> memo;

std::shared_ptr<const Analysis> build(const CoxeterSystem& sys, const AnalysisOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto A = std::make_shared<Analysis>();
  A->sys = sys;
  A->group = std::make_shared<const CoxeterGroup>(sys);
  A->hecke = std::make_shared<const Hecke>(A->group, opt.threads);
  CellOptions co;
  co.full_threshold = opt.full_threshold;
  co.threads = opt.threads;
  A->cells = std::make_shared<const CellData>(A->hecke, co);
  RepOptions ro;
  ro.schur_max_order = opt.schur_max_order;
  ro.threads = opt.threads;
  A->reps = std::make_shared<const Representations>(A->cells, ro);
  A->jring = std::make_shared<const JRing>(A->cells);
  A->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return A;
}

}  // namespace

std::string analysis_key(const CoxeterSystem& sys) {
  // Family and labels are part of the key: they select the table model and the printed names.
  std::string key = sys.family + "#" + std::to_string(sys.param) + "#";
  for (auto& l : sys.labels) key += l + ",";
  return key + "#" + sys.key();
}

std::shared_ptr<const Analysis> analyze(const CoxeterSystem& sys, const AnalysisOptions& opt) {
  return memo.get(analysis_key(sys), [&] { return build(sys, opt); });
}

std::shared_ptr<const Analysis> analyze_parabolic(const ParabolicData& P, const AnalysisOptions& opt) {
  return analyze(P.sub->system(), opt);
}

void clear_analysis_cache() { memo.clear(); }

std::vector<std::vector<int>> proper_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (uint32_t m = 0; m + 1 < (1u << n); ++m) {
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1u) I.push_back(i);
    out.push_back(I);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

std::string subset_str(const CoxeterSystem& sys, const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + sys.labels[static_cast<std::size_t>(I[i])];
  return s + "}";
}

}  // namespace cellkit
