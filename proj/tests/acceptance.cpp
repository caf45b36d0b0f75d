// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.

#include "cellkit/analysis.hpp"
#include "cellkit/bsymbols.hpp"
#include "cellkit/constructible.hpp"
#include "cellkit/parallel.hpp"
#include "cellkit/report.hpp"
#include "cellkit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace cellkit;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 10) failures.push_back(why);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FixtureTable fixture(const std::string& name) {
  return parse_fixture(read_file(std::string(CELLKIT_FIXTURE_DIR) + "/" + name + ".json"));
}

std::string weights_str(const std::vector<int>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

// ---- criterion 1: dihedral cells against the published lists ----

// k alternating factors starting with s_first: 1_k for first = 0, 2_k for first = 1.
Word alternating(int first, int k) {
  Word w;
  for (int i = 0; i < k; ++i) w.push_back((first + i) % 2);
  return w;
}

struct ExpectedCell {
  std::vector<Word> words;
  std::string rep;  // "1", "sgn", "sgn1", "sgn2", "tau", "sgn1+tau", "sgn2+tau"
};

// Lists for m odd, m even with a = b, and m even with b > a; a > b swaps the generators.
std::vector<ExpectedCell> expected_dihedral(int m, int a, int b) {
  bool swap = a > b;
  int one = swap ? 1 : 0, two = swap ? 0 : 1;
  auto seq = [&](int start_first, int k0, int k1) {
    // start_first selects 1_k0 (0) or 2_k0 (1); the first index alternates between 2 and 1.
    std::vector<Word> out;
    int first = start_first;
    for (int k = k0; k <= k1; ++k) {
      out.push_back(alternating(first == 0 ? one : two, k));
      first = 1 - first;
    }
    return out;
  };
  std::vector<ExpectedCell> cells;
  cells.push_back({{Word{}}, "1"});
  cells.push_back({{alternating(two, m)}, "sgn"});
  if (m % 2 == 1) {
    cells.push_back({seq(1, 1, m - 1), "tau"});
    cells.push_back({seq(0, 1, m - 1), "tau"});
  } else if (a == b) {
    cells.push_back({seq(1, 1, m - 1), "sgn1+tau"});
    cells.push_back({seq(0, 1, m - 1), "sgn2+tau"});
  } else {
    std::string s_one = swap ? "sgn1" : "sgn2", s_two = swap ? "sgn2" : "sgn1";
    cells.push_back({{alternating(one, 1)}, s_one});
    cells.push_back({{alternating(two, m - 1)}, s_two});
    cells.push_back({seq(1, 1, m - 2), "tau"});
    cells.push_back({seq(1, 2, m - 1), "tau"});
  }
  return cells;
}

// Irreducibles picked out by their values on s1 and s2, independent of the table's labels.
CharVector dihedral_rep(const Analysis& A, const std::string& name) {
  const CharacterTable& T = A.T();
  const CoxeterGroup& G = A.G();
  const ConjClasses& cl = G.classes();
  int c1 = cl.class_of[static_cast<std::size_t>(G.from_word({0}))];
  int c2 = cl.class_of[static_cast<std::size_t>(G.from_word({1}))];
  CharVector v(static_cast<std::size_t>(T.size()), 0);
  auto add_linear = [&](int e1, int e2) {
    for (int E = 0; E < T.size(); ++E)
      if (T.dims[static_cast<std::size_t>(E)] == 1 && T.values[static_cast<std::size_t>(E)][static_cast<std::size_t>(c1)] == Cyclo(e1) &&
          T.values[static_cast<std::size_t>(E)][static_cast<std::size_t>(c2)] == Cyclo(e2))
        v[static_cast<std::size_t>(E)] += 1;
  };
  auto add_tau = [&] {
    for (int E = 0; E < T.size(); ++E)
      if (T.dims[static_cast<std::size_t>(E)] == 2) v[static_cast<std::size_t>(E)] += 1;
  };
  if (name == "1") add_linear(1, 1);
  if (name == "sgn") add_linear(-1, -1);
  // s2 acts as -1 in sgn1 and s1 acts as -1 in sgn2.
  if (name == "sgn1" || name == "sgn1+tau") add_linear(1, -1);
  if (name == "sgn2" || name == "sgn2+tau") add_linear(-1, 1);
  if (name.find("tau") != std::string::npos) add_tau();
  return v;
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  int systems = 0;
  for (int m = 3; m <= 8; ++m) {
    std::vector<std::pair<int, int>> ws{{1, 1}};
    if (m % 2 == 0) ws.insert(ws.end(), {{1, 2}, {2, 1}, {2, 5}});
    for (auto [a, b] : ws) {
      ++systems;
      clear_analysis_cache();
      auto t0 = Clock::now();
      auto A = analyze(build_system("I2", m, {a, b}));
      auto verdict = verify_conjecture(*A);
      const auto& L = A->C().partition(Side::Left);
      double secs = since(t0);
      worst = std::max(worst, secs);
      std::string name = "I2(" + std::to_string(m) + ")[" + std::to_string(a) + "," + std::to_string(b) + "]";
      if (secs >= 1.0) o.fail(name + " took " + std::to_string(secs) + " s");
      std::set<std::pair<std::vector<int>, CharVector>> got, want;
      for (int i = 0; i < L.count(); ++i)
        got.insert({L.cells[static_cast<std::size_t>(i)], A->R().cell_characters()[static_cast<std::size_t>(i)]});
      for (auto& e : expected_dihedral(m, a, b)) {
        std::vector<int> elems;
        for (auto& w : e.words) elems.push_back(A->G().from_word(w));
        std::sort(elems.begin(), elems.end());
        want.insert({elems, dihedral_rep(*A, e.rep)});
      }
      if (got != want) o.fail(name + ": cells or representations differ from the published list");
      if (verdict.check.status != Status::Pass) o.fail(name + ": left cells != Con(W)");
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d systems, slowest %.3f s (limit 1 s)", systems, worst);
  o.detail = buf;
  return o;
}

// ---- criterion 2: F4 table ----

std::map<std::string, long long> nonzero(const std::map<std::string, long long>& m) {
  std::map<std::string, long long> out;
  for (auto& [k, v] : m)
    if (v) out[k] = v;
  return out;
}

Outcome criterion2() {
  Outcome o;
  auto t0 = Clock::now();
  F4Table t = f4_table(*analyze(build_system("F4", 4, {1})));
  FixtureTable fx = fixture("f4-table1");
  std::set<std::map<std::string, long long>> got, want;
  for (auto& c : t.columns) got.insert(nonzero(c));
  for (auto& [name, c] : fx.columns) want.insert(nonzero(c));
  if (t.columns.size() != fx.columns.size()) o.fail("computed " + std::to_string(t.columns.size()) + " columns, table has " + std::to_string(fx.columns.size()));
  if (got != want) o.fail("column sets differ");
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    std::string name = "P" + std::to_string(i + 1);
    if (fx.columns.count(name) && nonzero(fx.columns.at(name)) != nonzero(t.columns[i])) o.fail(name + " out of order");
  }
  for (auto& label : fx.rows) {
    if (!t.f.count(label)) o.fail("no f-value for " + label);
    else if (t.f.at(label) != fx.f.at(label)) o.fail("f(" + label + ") = " + t.f.at(label).str() + ", table " + fx.f.at(label).str());
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu columns, 11 f-values, %.1f s (limit 600 s)", t.columns.size(), since(t0));
  o.detail = buf;
  if (since(t0) > 600) o.fail("too slow");
  return o;
}

// ---- criterion 3: diamond sums on the fixture tables ----

Outcome criterion3() {
  Outcome o;
  auto t0 = Clock::now();
  int cols = 0;
  for (const char* name : {"f4-table1", "e6", "e7"}) {
    FixtureTable fx = fixture(name);
    for (auto& [c, m] : fx.columns) {
      ++cols;
      DiamondResult d = check_diamond(fx.f, m);
      if (!d.holds) o.fail(std::string(name) + " " + c + ": " + d.witness);
    }
  }
  if (cols != 11) o.fail("expected 11 columns (5 + 3 + 3), found " + std::to_string(cols));
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d columns, sum exactly 1, %.3f s (limit 1 s)", cols, since(t0));
  o.detail = buf;
  if (since(t0) >= 1.0) o.fail("too slow");
  return o;
}

// ---- criteria 4-8 share one catalog run ----

bool in_criterion4(const CatalogEntry& e) {
  if (e.family == "A") return e.param <= 3;
  if (e.family == "B") return e.weights.size() >= 2 && e.weights[1] == 1 && e.weights[0] <= 3;
  return e.family == "I2" || e.family == "H3";
}

Outcome criterion4(const std::vector<CatalogEntry>& cat, const AggregateReport& agg) {
  Outcome o;
  int systems = 0;
  long long p15_sampled = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (!in_criterion4(cat[i])) continue;
    ++systems;
    const auto& r = agg.systems[i];
    for (int p = 1; p <= 15; ++p) {
      const Check* c = r.find("P" + std::to_string(p));
      if (!c) o.fail(r.system + ": P" + std::to_string(p) + " missing");
      else if (c->status != Status::Pass) o.fail(r.system + ": P" + std::to_string(p) + " " + c->witness);
    }
    const Check* c15 = r.find("P15");
    long long order = classical_order(cat[i].family, cat[i].param);
    if (c15 && order > 48) {
      if (c15->scope != "sampled(seed=49374,count=100000)") o.fail(r.system + ": P15 scope " + c15->scope);
      ++p15_sampled;
    }
    if (c15 && order <= 48 && c15->scope != "exhaustive") o.fail(r.system + ": P15 not exhaustive");
  }
  o.detail = std::to_string(systems) + " systems, P15 sampled 10^5 times (seed 0xC0DE) on " + std::to_string(p15_sampled);
  return o;
}

Outcome named_check_everywhere(const AggregateReport& agg, const std::vector<std::string>& names, const std::string& what) {
  Outcome o;
  long long cases = 0;
  for (auto& r : agg.systems)
    for (auto& n : names) {
      const Check* c = r.find(n);
      if (!c) o.fail(r.system + ": " + n + " missing");
      else {
        cases += c->cases;
        if (c->status != Status::Pass) o.fail(r.system + ": " + n + " " + c->witness);
      }
    }
  o.detail = std::to_string(agg.systems.size()) + " systems, " + std::to_string(cases) + " " + what;
  return o;
}

Outcome criterion7(const std::vector<CatalogEntry>& cat, const AggregateReport& agg) {
  Outcome o;
  int systems = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& r = agg.systems[i];
    const Check* c = r.find("left cells = Con(W)");
    ++systems;
    if (!c || c->status != Status::Pass) o.fail(r.system + ": " + (c ? c->witness : "missing"));
    if (cat[i].family == "D") {
      for (const char* n : {"typeD: conjecture for W1", "typeD: cell splitting", "typeD: restriction"}) {
        const Check* d = r.find(n);
        if (!d || d->status != Status::Pass) o.fail(r.system + ": " + n);
      }
    }
  }
  // B3 with L(t) = 4, L(s) = 3: all f_E = 1 and every left cell irreducible.
  auto A = analyze(build_system("B", 3, {4, 3, 3}));
  for (int E = 0; E < A->T().size(); ++E)
    if (A->R().f(E) != Cyclo(1)) o.fail("B3[4,3,3]: f(" + A->T().labels[static_cast<std::size_t>(E)] + ") != 1");
  for (auto& v : A->R().cell_characters()) {
    long long total = 0;
    for (long long m : v) total += m;
    if (total != 1) o.fail("B3[4,3,3]: reducible left cell " + charvector_str(A->T(), v));
  }
  std::set<std::string> f4;
  for (auto& e : cat)
    if (e.family == "F4") f4.insert(weights_str(e.weights));
  for (const char* w : {"1,1,1,1", "1,1,2,2", "2,2,3,3", "1,1,3,3"})
    if (!f4.count(w)) o.fail(std::string("F4 weights ") + w + " not in the catalog");
  o.detail = std::to_string(systems) + " systems incl. F4 L0-L3, B3[4,3,3], D3/D4 with L(omega)=0";
  return o;
}

// ---- criterion 9: symbols ----

Outcome criterion9() {
  Outcome o;
  long long order = 1;
  int triples = 0;
  for (int d = 1; d <= 5; ++d) {
    order *= 2 * d;
    for (int r = 0; r <= 3; ++r)
      for (int k = d; k <= d + 1; ++k)
        for (int n = d - 1 + k + r; n <= d + k + r; ++n) {
          ++triples;
          long long s = 0;
          for (auto& [S, c] : path_counts(n, k, r, d)) s += c * c;
          if (s != order)
            o.fail("sum of squares " + std::to_string(s) + " at (n,k,r,d)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                   std::to_string(r) + "," + std::to_string(d) + ")");
        }
  }
  int con_checks = 0;
  for (int d = 1; d <= 4; ++d)
    for (int r = 0; r <= 3; ++r) {
      ++con_checks;
      std::size_t ssy = standard_symbols(d - 1 + d + r, d, r, d).size();
      int con = constructible_set(*analyze(b_system(d, r)))->size();
      if (static_cast<int>(ssy) != con)
        o.fail("|SSy| = " + std::to_string(ssy) + " but |Con| = " + std::to_string(con) + " for d=" + std::to_string(d) + " r=" + std::to_string(r));
    }
  int solved = 0;
  for (auto [m, r] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}}) {
    RegularExpansion X = regular_expansion(m, r);
    if (!X.solvable) o.fail("regular expansion unsolvable for m=" + std::to_string(m) + " r=" + std::to_string(r) + ": " + X.witness);
    else ++solved;
  }
  o.detail = std::to_string(triples) + " (n,k,r,d) triples, " + std::to_string(con_checks) + " |SSy|=|Con| pairs, " +
             std::to_string(solved) + "/8 expansions solved";
  return o;
}

// ---- criterion 10: determinism ----

Outcome criterion10() {
  Outcome o;
  std::vector<CoxeterSystem> systems{build_system("I2", 6, {1, 2}), build_system("B", 3, {2, 1, 1}), build_system("H3", 3, {1}),
                                     build_system("D", 4, {1})};
  int compared = 0;
  for (auto& sys : systems) {
    std::string c[2], v[2];
    for (int run = 0; run < 2; ++run) {
      clear_analysis_cache();
      set_default_threads(run == 0 ? 1 : 0);
      auto A = analyze(sys);
      c[run] = compute_json(*A);
      VerifyOptions opt;
      opt.p15_samples = 5000;
      v[run] = verification_json(verify_system(sys, opt));
    }
    set_default_threads(0);
    compared += 2;
    if (c[0] != c[1]) o.fail(sys.name() + ": compute JSON differs between runs");
    if (v[0] != v[1]) o.fail(sys.name() + ": verification JSON differs between runs");
  }
  std::string b0 = bsymbols_json(5, 3, 1, 3), b1 = bsymbols_json(5, 3, 1, 3);
  ++compared;
  if (b0 != b1) o.fail("bsymbols JSON differs between runs");
  o.detail = std::to_string(compared) + " reports byte-identical across runs (1 thread vs all threads)";
  return o;
}

void print(int n, const std::string& title, const Outcome& o, double secs) {
  std::printf("criterion %2d: %s  %s: %s [%.1f s]\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str(), secs);
  for (auto& f : o.failures) std::printf("              %s\n", f.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  bool all = true;
  auto step = [&](int n, const std::string& title, const std::function<Outcome()>& fn) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    print(n, title, o, since(t0));
  };

  step(1, "I2(m) left cells and representations", criterion1);
  step(2, "F4 induced columns and f-values", criterion2);
  step(3, "diamond condition on F4, E6, E7 columns", criterion3);

  auto cat = default_catalog();
  auto t0 = Clock::now();
  AggregateReport agg = run_catalog(cat);
  std::printf("catalog: %zu systems verified in %.1f s\n", cat.size(), since(t0));

  step(4, "P1-P15", [&] { return criterion4(cat, agg); });
  step(5, "per-cell degree identity", [&] { return named_check_everywhere(agg, {"cell-degree-sum"}, "cells"); });
  step(6, "rank of left-cell character vectors", [&] { return named_check_everywhere(agg, {"cell-vector-rank"}, "rank checks"); });
  step(7, "left cells = Con(W)", [&] { return criterion7(cat, agg); });
  step(8, "induction and restriction laws", [&] {
    return named_check_everywhere(agg, {"restriction-law", "induction-law", "truncated-induction-law", "bijection-law"}, "cases");
  });
  step(9, "type B symbols", criterion9);
  step(10, "deterministic JSON", criterion10);

  std::printf("overall: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
