#include "cellkit/report.hpp"

#include "cellkit/bsymbols.hpp"

#include "json.hpp"

namespace cellkit {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json charvector_json(const CharacterTable& T, const CharVector& v) {
  json o = json::object();
  for (int E = 0; E < T.size(); ++E)
    if (v[static_cast<std::size_t>(E)]) o[T.labels[static_cast<std::size_t>(E)]] = v[static_cast<std::size_t>(E)];
  return o;
}

json check_json(const Check& c) {
  json o{{"name", c.name}, {"status", status_str(c.status)}, {"scope", c.scope}, {"cases", c.cases}};
  if (!c.witness.empty()) o["witness"] = c.witness;
  if (!c.note.empty()) o["note"] = c.note;
  return o;
}

json report_json(const VerificationReport& r) {
  json checks = json::array(), findings = json::array();
  for (auto& c : r.checks) checks.push_back(check_json(c));
  for (auto& c : r.findings) findings.push_back(check_json(c));
  return {{"system", r.system}, {"ok", r.ok()}, {"checks", checks}, {"findings", findings}};
}

std::vector<std::string> words(const CoxeterGroup& G, const std::vector<int>& elems) {
  std::vector<std::string> out;
  for (int w : elems) out.push_back(G.word_str(w));
  return out;
}

}  // namespace

std::string compute_json(const Analysis& A) {
  const CoxeterGroup& G = A.G();
  const CellData& C = A.C();
  const Representations& R = A.R();
  const CharacterTable& T = A.T();
  json out;
  out["system"] = {{"name", A.sys.name()},     {"family", A.sys.family}, {"param", A.sys.param},
                   {"labels", A.sys.labels},   {"weights", A.sys.weights}, {"coxeter_matrix", A.sys.matrix},
                   {"order", G.size()}};

  auto fam = families(A);
  auto cusp = cuspidal_families(A);
  json irr = json::array();
  for (int E = 0; E < T.size(); ++E)
    irr.push_back({{"label", T.labels[static_cast<std::size_t>(E)]},
                   {"dim", T.dims[static_cast<std::size_t>(E)]},
                   {"a", R.a(E)},
                   {"f", R.f(E).str()},
                   {"family", fam->family_of[static_cast<std::size_t>(E)]}});
  out["irreducibles"] = irr;

  auto con = constructible_set(A);
  auto verdict = verify_conjecture(A);
  const Partition& L = C.partition(Side::Left);
  json cells = json::array();
  for (int i = 0; i < L.count(); ++i) {
    const auto& cell = L.cells[static_cast<std::size_t>(i)];
    int d = C.d_of(cell[0]);
    cells.push_back({{"elements", words(G, cell)},
                     {"size", cell.size()},
                     {"a", C.a(cell[0])},
                     {"distinguished", d >= 0 ? json(G.word_str(d)) : json(nullptr)},
                     {"character", charvector_json(T, R.cell_characters()[static_cast<std::size_t>(i)])},
                     {"constructible", verdict.cell_match[static_cast<std::size_t>(i)]}});
  }
  out["left_cells"] = cells;

  const Partition& LR = C.partition(Side::TwoSided);
  json two = json::array();
  for (int c = 0; c < LR.count(); ++c) {
    const auto& cell = LR.cells[static_cast<std::size_t>(c)];
    std::vector<int> lefts;
    for (int i = 0; i < L.count(); ++i)
      if (LR.cell_of[static_cast<std::size_t>(L.cells[static_cast<std::size_t>(i)][0])] == c) lefts.push_back(i);
    std::vector<std::string> reps;
    for (int E : R.block_members(c)) reps.push_back(T.labels[static_cast<std::size_t>(E)]);
    two.push_back({{"size", cell.size()}, {"a", C.a(cell[0])}, {"left_cells", lefts}, {"irreducibles", reps}});
  }
  out["two_sided_cells"] = two;

  json cols = json::array();
  for (auto& e : con->entries)
    cols.push_back({{"character", charvector_json(T, e.v)}, {"a", e.a}, {"provenance", e.provenance}});
  out["constructible"] = {{"rows", T.labels}, {"columns", cols}, {"matrix", decomposition_matrix(A)}};

  json fams = json::array();
  for (int k = 0; k < fam->count(); ++k) {
    const Family& F = fam->families[static_cast<std::size_t>(k)];
    std::vector<std::string> members;
    for (int E : F.members) members.push_back(T.labels[static_cast<std::size_t>(E)]);
    json o{{"members", members}, {"a", F.a}, {"two_sided_cell", F.two_sided}, {"cuspidal", cusp[static_cast<std::size_t>(k)].cuspidal}};
    if (!cusp[static_cast<std::size_t>(k)].witness.empty()) o["bijection_witness"] = cusp[static_cast<std::size_t>(k)].witness;
    fams.push_back(o);
  }
  out["families"] = fams;
  out["conjecture"] = check_json(verdict.check);
  return dump(out);
}

std::string verification_json(const AggregateReport& agg) {
  json systems = json::array();
  for (auto& r : agg.systems) systems.push_back(report_json(r));
  return dump({{"ok", agg.ok()}, {"systems", systems}});
}

std::string verification_json(const VerificationReport& rep) {
  AggregateReport agg;
  agg.systems.push_back(rep);
  return verification_json(agg);
}

std::string bsymbols_json(int n, int k, int r, int d) {
  json out;
  out["parameters"] = {{"n", n}, {"k", k}, {"r", r}, {"d", d}, {"admissible", admissible(n, k, r, d)}};
  auto paths = path_counts(n, k, r, d);
  json syms = json::array();
  long long squares = 0, standard = 0;
  for (auto& [S, c] : paths) {
    squares += c * c;
    if (is_standard(S)) ++standard;
    syms.push_back({{"symbol", S.str()},
                    {"degree", principal_degree(S)},
                    {"standard", is_standard(S)},
                    {"paths", c},
                    {"bipartition", bipartition_str(symbol_bipartition(S))}});
  }
  out["symbols"] = syms;
  out["sum_of_squared_paths"] = squares;
  out["standard_count"] = standard;
  RegularExpansion X = regular_expansion(d, r);
  json coeffs = json::array();
  for (auto& q : X.coeff) coeffs.push_back(q.get_str());
  auto A = analyze(b_system(d, r));
  json con = json::array();
  for (auto& v : X.con) con.push_back(charvector_json(A->T(), v));
  out["regular_expansion"] = {{"m", d}, {"r", r}, {"solvable", X.solvable}, {"constructible", con}, {"coefficients", coeffs}};
  if (!X.witness.empty()) out["regular_expansion"]["witness"] = X.witness;
  out["constructible_count"] = X.con.size();
  return dump(out);
}

FixtureTable parse_fixture(const std::string& text) {
  FixtureTable t;
  json j;
  try {
    j = json::parse(text);
    t.name = j.at("name").get<std::string>();
    t.provenance = j.value("provenance", std::string());
    t.rows = j.at("rows").get<std::vector<std::string>>();
    for (auto& [label, v] : j.at("f").items()) {
      Cyclo f = v.is_string() ? Cyclo::parse(v.get<std::string>()) : Cyclo(v.get<long>());
      t.f[label] = f;
    }
    for (auto& [col, m] : j.at("columns").items())
      for (auto& [label, n] : m.items()) t.columns[col][label] = n.get<long long>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed fixture: ") + e.what());
  }
  return t;
}

std::string diamond_json(const FixtureTable& t, const std::vector<std::string>& columns) {
  json res = json::object();
  bool all = true;
  for (auto& c : columns) {
    auto it = t.columns.find(c);
    if (it == t.columns.end()) throw std::invalid_argument("fixture " + t.name + " has no column " + c);
    DiamondResult d = check_diamond(t.f, it->second);
    all = all && d.holds;
    json o{{"holds", d.holds}, {"sum", d.sum.str()}};
    if (!d.witness.empty()) o["witness"] = d.witness;
    res[c] = o;
  }
  return dump({{"fixture", t.name}, {"columns", res}, {"all_hold", all}});
}

std::string f4_table_json(const F4Table& t) {
  json f = json::object();
  for (auto& [k, v] : t.f) f[k] = v.str();
  json cols = json::array();
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    cols.push_back({{"name", "P" + std::to_string(i + 1)}, {"entries", t.columns[i]}, {"sources", t.sources[i]}});
  return dump({{"rows", t.rows}, {"f", f}, {"columns", cols}});
}

}  // namespace cellkit
