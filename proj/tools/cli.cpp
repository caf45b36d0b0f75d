#include "cli.hpp"

#include "cellkit/bsymbols.hpp"
#include "cellkit/cache.hpp"
#include "cellkit/constructible.hpp"
#include "cellkit/report.hpp"
#include "cellkit/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef CELLKIT_FIXTURE_DIR
#define CELLKIT_FIXTURE_DIR "fixtures"
#endif

namespace cellkit::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (auto& tok : split(s, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw UsageError(what + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw std::runtime_error("cannot write " + path);
}

std::string fixture_dir() {
  const char* env = std::getenv("CELLKIT_FIXTURE_DIR");
  return env ? std::string(env) : std::string(CELLKIT_FIXTURE_DIR);
}

std::string fixture_path(const std::string& name) {
  if (std::filesystem::exists(name)) return name;
  auto p = std::filesystem::path(fixture_dir()) / (name + ".json");
  if (std::filesystem::exists(p)) return p.string();
  p = std::filesystem::path(fixture_dir()) / name;
  if (std::filesystem::exists(p)) return p.string();
  throw UsageError("unknown fixture " + name);
}

struct SystemFlags {
  std::string type;
  int rank = 0;
  int m = 0;
  std::string weights;

  void add(CLI::App* app) {
    app->add_option("--type", type, "A, B, D, I2, H3 or F4");
    app->add_option("--rank", rank, "rank for A, B, D");
    app->add_option("--m", m, "m for I2");
    app->add_option("--weights", weights, "comma-separated weights, one per generator (one value is broadcast)");
  }

  CoxeterSystem build() const {
    std::string t = type;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (t.empty()) throw UsageError("--type is required");
    int p = rank;
    if (t == "I2") {
      if (m <= 0) throw UsageError("I2 needs --m");
      p = m;
    } else if (t == "H3" || t == "F4") {
      p = t == "H3" ? 3 : 4;
    } else if (p <= 0) {
      throw UsageError("type " + t + " needs --rank");
    }
    try {
      return build_system(t, p, parse_ints(weights, "--weights"));
    } catch (const UsageError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

int cmd_compute(const SystemFlags& sf, const std::string& out_path, const std::string& cache_flag, bool no_cache, bool verbose,
                int threads, std::ostream& out, std::ostream& err) {
  CoxeterSystem sys = sf.build();
  DiskCache cache(no_cache ? std::string() : DiskCache::resolve_dir(cache_flag));
  const std::string key = cache_key(sys);
  std::string warning;
  auto hit = cache.load(key, &warning);
  if (!warning.empty()) err << "warning: " << warning << "\n";
  std::string text;
  if (hit) {
    text = *hit;
    if (verbose) err << "cache hit " << cache.path(key) << "\n";
  } else {
    AnalysisOptions opt;
    opt.threads = threads;
    text = compute_json(*analyze(sys, opt));
    cache.store(key, text);
    if (verbose) err << "cache miss " << sys.name() << "\n";
  }
  emit(text, out_path, out);
  return kExitPass;
}

int cmd_verify(const SystemFlags& sf, const std::string& catalog, const std::string& props, uint64_t seed, long long samples,
               bool conjecture_only, int threads, const std::string& out_path, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.seed = seed;
  if (samples > 0) opt.p15_samples = samples;
  opt.properties = parse_ints(props, "--properties");
  for (int p : opt.properties)
    if (p < 1 || p > 15) throw UsageError("--properties: P" + std::to_string(p) + " does not exist");
  opt.analysis.threads = threads;
  if (conjecture_only) {
    opt.run_properties = opt.run_identities = opt.run_ind_res = opt.run_internal = false;
  }
  std::vector<CatalogEntry> entries;
  if (!catalog.empty()) {
    if (!sf.type.empty()) throw UsageError("give either --catalog or --type");
    entries = catalog == "default" ? default_catalog() : parse_catalog(read_file(catalog));
  } else {
    CoxeterSystem sys = sf.build();
    CatalogEntry e;
    e.family = sys.family;
    e.param = sys.param;
    e.weights = sys.weights;
    entries.push_back(e);
  }
  AggregateReport agg = run_catalog(entries, opt);
  emit(verification_json(agg), out_path, out);
  for (auto& r : agg.systems)
    for (auto& c : r.checks)
      if (!c.ok()) err << r.system << ": " << c.name << " failed: " << c.witness << "\n";
  return agg.ok() ? kExitPass : kExitFail;
}

int cmd_diamond(const std::string& fixture, const std::vector<std::string>& columns, const std::string& f_inline,
                const std::string& m_inline, std::ostream& out) {
  FixtureTable t;
  if (!fixture.empty()) {
    t = parse_fixture(read_file(fixture_path(fixture)));
  } else {
    if (f_inline.empty() || m_inline.empty()) throw UsageError("give --fixture or both --f and --mult");
    t.name = "inline";
    auto pairs = [](const std::string& s, const std::string& what) {
      std::vector<std::pair<std::string, std::string>> out;
      for (auto& tok : split(s, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError(what + ": expected label=value, got '" + tok + "'");
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
      }
      return out;
    };
    for (auto& [label, v] : pairs(f_inline, "--f")) {
      try {
        t.f[label] = Cyclo::parse(v);
      } catch (const std::exception&) {
        throw UsageError("--f: '" + v + "' is not an exact number");
      }
    }
    for (auto& [label, v] : pairs(m_inline, "--mult")) t.columns["inline"][label] = parse_ints(v, "--mult")[0];
  }
  std::vector<std::string> cols = columns;
  if (cols.empty())
    for (auto& [name, c] : t.columns) cols.push_back(name);
  for (auto& c : cols)
    if (c.empty() || !t.columns.count(c)) throw UsageError("fixture " + t.name + " has no column '" + c + "'");
  std::string text = diamond_json(t, cols);
  out << text;
  return text.find("\"all_hold\": true") != std::string::npos ? kExitPass : kExitFail;
}

int cmd_bsymbols(int d, int r, int n, int k, const std::string& out_path, std::ostream& out) {
  if (d < 0 || r < 0) throw UsageError("--d and --r must be nonnegative");
  if (k < 0) k = d;
  if (n < 0) n = d - 1 + k + r;
  if (!admissible(n, k, r, d)) throw UsageError("(n,k,r,d) is not admissible: need k >= d and n >= d-1+k+r");
  emit(bsymbols_json(n, k, r, d), out_path, out);
  return kExitPass;
}

std::map<std::string, long long> nonzero(const std::map<std::string, long long>& m) {
  std::map<std::string, long long> out;
  for (auto& [k, v] : m)
    if (v) out[k] = v;
  return out;
}

int cmd_f4table(const std::string& out_path, int threads, std::ostream& out, std::ostream& err) {
  AnalysisOptions opt;
  opt.threads = threads;
  F4Table t = f4_table(*analyze(build_system("F4", 4, {1}), opt));
  emit(f4_table_json(t), out_path, out);
  FixtureTable fx = parse_fixture(read_file(fixture_path("f4-table1")));
  bool same = t.columns.size() == fx.columns.size();
  for (std::size_t i = 0; same && i < t.columns.size(); ++i) {
    auto it = fx.columns.find("P" + std::to_string(i + 1));
    same = it != fx.columns.end() && nonzero(it->second) == nonzero(t.columns[i]);
  }
  for (auto& [label, f] : fx.f) same = same && t.f.count(label) && t.f.at(label) == f;
  if (!same) err << "computed table differs from fixture f4-table1\n";
  return same ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cellkit: cells, constructible characters and conjecture checks for finite Coxeter groups"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0: hardware concurrency)");

  auto* compute = app.add_subcommand("compute", "cells, characters and constructible characters as JSON");
  SystemFlags csys;
  csys.add(compute);
  std::string c_out, c_cache;
  bool c_nocache = false, c_verbose = false;
  compute->add_option("--out", c_out, "output file (default stdout)");
  compute->add_option("--cache-dir", c_cache, "cache directory (default $CELLKIT_CACHE_DIR)");
  compute->add_flag("--no-cache", c_nocache, "ignore the cache");
  compute->add_flag("--verbose", c_verbose, "report cache hits on stderr");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  SystemFlags vsys;
  vsys.add(verify);
  std::string v_catalog, v_props, v_out;
  uint64_t v_seed = kDefaultSeed;
  long long v_samples = 0;
  bool v_conj = false;
  verify->add_option("--catalog", v_catalog, "catalog JSON file, or 'default'");
  verify->add_option("--properties", v_props, "comma-separated subset of 1..15");
  verify->add_option("--seed", v_seed, "sampling seed");
  verify->add_option("--samples", v_samples, "P15 sample count above the exhaustive threshold");
  verify->add_flag("--conjecture", v_conj, "only the left cells = Con(W) verdict");
  verify->add_option("--out", v_out, "output file (default stdout)");

  auto* diamond = app.add_subcommand("diamond", "sum of m_E / f_E over a family, per column");
  std::string d_fixture, d_f, d_m;
  std::vector<std::string> d_cols;
  diamond->add_option("--fixture", d_fixture, "fixture name (f4-table1, e6, e7) or path");
  diamond->add_option("--column", d_cols, "column name (repeatable; default all)");
  diamond->add_option("--f", d_f, "inline f-values, label=value,...");
  diamond->add_option("--mult", d_m, "inline multiplicities, label=n,...");

  auto* bsym = app.add_subcommand("bsymbols", "symbols of degree d and the regular expansion for B_d");
  int b_d = 2, b_r = 1, b_n = -1, b_k = -1;
  std::string b_out;
  bsym->add_option("--d", b_d, "degree (rank of B_d)");
  bsym->add_option("--r", b_r, "weight of t");
  bsym->add_option("--n", b_n, "symbol bound n (default minimal)");
  bsym->add_option("--k", b_k, "symbol length k (default d)");
  bsym->add_option("--out", b_out, "output file (default stdout)");

  auto* f4 = app.add_subcommand("f4-table", "cuspidal family of F4 from induction of Con(B3), compared with the fixture");
  std::string f_out;
  f4->add_option("--out", f_out, "output file (default stdout)");

  auto* cat = app.add_subcommand("catalog", "print the default catalog");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(csys, c_out, c_cache, c_nocache, c_verbose, threads, out, err);
    if (*verify) return cmd_verify(vsys, v_catalog, v_props, v_seed, v_samples, v_conj, threads, v_out, out, err);
    if (*diamond) return cmd_diamond(d_fixture, d_cols, d_f, d_m, out);
    if (*bsym) return cmd_bsymbols(b_d, b_r, b_n, b_k, b_out, out);
    if (*f4) return cmd_f4table(f_out, threads, out, err);
    if (*cat) {
      out << catalog_json(default_catalog());
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogParseError& e) {
    err << "catalog error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cellkit::cli
