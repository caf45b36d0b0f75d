#include "cellkit/cells.hpp"

#include "cellkit/parallel.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace cellkit {

Partition scc_partition(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), comp(static_cast<std::size_t>(n), -1);
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  struct Frame {
    int v;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& out = adj[static_cast<std::size_t>(f.v)];
      if (f.next < out.size()) {
        int w = out[f.next++];
        if (index[static_cast<std::size_t>(w)] < 0) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          stack.push_back(w);
          on[static_cast<std::size_t>(w)] = 1;
          call.push_back({w, 0});
        } else if (on[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      int v = f.v;
      call.pop_back();
      if (!call.empty())
        low[static_cast<std::size_t>(call.back().v)] = std::min(low[static_cast<std::size_t>(call.back().v)], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = ncomp;
        } while (w != v);
        ++ncomp;
      }
    }
  }
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(ncomp));
  for (int v = 0; v < n; ++v) cells[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Partition p;
  p.cell_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int v : cells[c]) p.cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  p.cells = std::move(cells);
  return p;
}

CellModule::CellModule(const Hecke& H, std::vector<int> elements) : H_(&H), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  loc_.assign(static_cast<std::size_t>(H.size()), -1);
  for (std::size_t j = 0; j < elems_.size(); ++j) loc_[static_cast<std::size_t>(elems_[j])] = static_cast<int>(j);
  const int n = H.group().rank();
  rho_.assign(static_cast<std::size_t>(n), std::vector<SparseVec>(elems_.size()));
  for (int s = 0; s < n; ++s)
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      SparseVec full = H.left_c(s, {{elems_[j], ZPoly(1)}});
      SparseVec& r = rho_[static_cast<std::size_t>(s)][j];
      for (auto& [z, f] : full) {
        int i = loc_[static_cast<std::size_t>(z)];
        if (i >= 0) r.emplace_back(i, std::move(f));
      }
    }
}

int CellModule::local(int w) const { return loc_[static_cast<std::size_t>(w)]; }

SparseVec CellModule::act(int s, const SparseVec& a) const {
  Accumulator acc(dim());
  for (auto& [j, f] : a)
    for (auto& [i, g] : rho_[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]) acc.add_product(i, f, g);
  return acc.take();
}

void CellModule::products(int y, const std::function<void(int, const SparseVec&)>& fn) const {
  const CoxeterGroup& G = H_->group();
  const int N = G.size();
  const int ly = local(y);
  if (ly < 0) throw std::invalid_argument("element outside the cell module");
  std::vector<SparseVec> X(static_cast<std::size_t>(N));
  X[0] = {{ly, ZPoly(1)}};
  fn(0, X[0]);
  Accumulator acc(dim());
  for (int x = 1; x < N; ++x) {
    const int s = G.word(x)[0];
    const int x1 = G.lmul(s, x);
    SparseVec r = act(s, X[static_cast<std::size_t>(x1)]);
    const auto& mu = H_->mu(s, x1);
    if (!mu.empty()) {
      for (auto& [i, f] : r) acc.add(i, f);
      for (auto& [u, m] : mu)
        for (auto& [i, g] : X[static_cast<std::size_t>(u)]) acc.add_product(i, -m, g);
      r = acc.take();
    }
    X[static_cast<std::size_t>(x)] = std::move(r);
    fn(x, X[static_cast<std::size_t>(x)]);
  }
}

CellData::CellData(std::shared_ptr<const Hecke> H, CellOptions opt) : H_(std::move(H)), opt_(opt) {
  N_ = H_->size();
  full_ = N_ <= opt_.full_threshold;
  build_edges();
  build_partitions();
  compute_delta();
  compute_a_gamma();
  compute_phi();
}

void CellData::build_edges() {
  const CoxeterGroup& G = group();
  ledges_.assign(static_cast<std::size_t>(N_), {});
  for (int w = 0; w < N_; ++w) {
    auto& e = ledges_[static_cast<std::size_t>(w)];
    for (int s = 0; s < G.rank(); ++s) {
      int sw = G.lmul(s, w);
      if (G.weight(s) == 0) {
        e.push_back(sw);
      } else if (sw > w) {
        e.push_back(sw);
        for (auto& [z, m] : H_->mu(s, w)) e.push_back(z);
      }
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
}

void CellData::build_partitions() {
  const CoxeterGroup& G = group();
  std::vector<std::vector<int>> radj(static_cast<std::size_t>(N_)), both(static_cast<std::size_t>(N_));
  for (int w = 0; w < N_; ++w)
    for (int y : ledges_[static_cast<std::size_t>(w)]) radj[static_cast<std::size_t>(G.inverse(w))].push_back(G.inverse(y));
  for (int w = 0; w < N_; ++w) {
    auto& b = both[static_cast<std::size_t>(w)];
    b = ledges_[static_cast<std::size_t>(w)];
    b.insert(b.end(), radj[static_cast<std::size_t>(w)].begin(), radj[static_cast<std::size_t>(w)].end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  part_[0] = scc_partition(ledges_);
  part_[1] = scc_partition(radj);
  part_[2] = scc_partition(both);
}

const Partition& CellData::partition(Side s) const { return part_[static_cast<int>(s)]; }

void CellData::build_reach(Side side) const {
  const int k = static_cast<int>(side);
  const CoxeterGroup& G = group();
  const Partition& P = part_[k];
  const int C = P.count();
  const std::size_t words = (static_cast<std::size_t>(C) + 63) / 64;
  std::vector<std::vector<int>> cadj(static_cast<std::size_t>(C));
  auto add_edge = [&](int w, int y) {
    int a = P.cell_of[static_cast<std::size_t>(w)], b = P.cell_of[static_cast<std::size_t>(y)];
    if (a != b) cadj[static_cast<std::size_t>(a)].push_back(b);
  };
  for (int w = 0; w < N_; ++w)
    for (int y : ledges_[static_cast<std::size_t>(w)]) {
      if (side != Side::Right) add_edge(w, y);
      if (side != Side::Left) add_edge(G.inverse(w), G.inverse(y));
    }
  std::vector<std::vector<uint64_t>> reach(static_cast<std::size_t>(C));
  std::vector<char> state(static_cast<std::size_t>(C), 0);
  std::function<void(int)> visit = [&](int c) {
    state[static_cast<std::size_t>(c)] = 1;
    auto& r = reach[static_cast<std::size_t>(c)];
    r.assign(words, 0);
    r[static_cast<std::size_t>(c) / 64] |= uint64_t(1) << (c % 64);
    for (int d : cadj[static_cast<std::size_t>(c)]) {
      if (!state[static_cast<std::size_t>(d)]) visit(d);
      const auto& rd = reach[static_cast<std::size_t>(d)];
      for (std::size_t i = 0; i < words; ++i) r[i] |= rd[i];
    }
  };
  for (int c = 0; c < C; ++c)
    if (!state[static_cast<std::size_t>(c)]) visit(c);
  reach_[k] = std::move(reach);
}

bool CellData::leq(Side side, int y, int w) const {
  const int k = static_cast<int>(side);
  {
    std::lock_guard<std::mutex> lk(*mu_);
    if (reach_[k].empty()) build_reach(side);
  }
  const Partition& P = part_[k];
  int cy = P.cell_of[static_cast<std::size_t>(y)], cw = P.cell_of[static_cast<std::size_t>(w)];
  return (reach_[k][static_cast<std::size_t>(cw)][static_cast<std::size_t>(cy) / 64] >> (cy % 64)) & 1u;
}

void CellData::compute_delta() {
  delta_.assign(static_cast<std::size_t>(N_), 0);
  n_.assign(static_cast<std::size_t>(N_), 0);
  for (int z = 0; z < N_; ++z) {
    const auto& col = H_->column(z);
    if (col.empty() || col.front().first != 0) {
      // p_{e,z} = 0 only happens with zero weights; such z is never in D.
      delta_[static_cast<std::size_t>(z)] = kInfiniteDelta;
      continue;
    }
    const ZPoly& p = col.front().second;
    delta_[static_cast<std::size_t>(z)] = -p.degree();
    n_[static_cast<std::size_t>(z)] = p.leading().to_ll();
  }
}

void CellData::compute_a_gamma() {
  const CoxeterGroup& G = group();
  std::vector<std::vector<int>> mods;
  if (full_) {
    std::vector<int> all(static_cast<std::size_t>(N_));
    for (int i = 0; i < N_; ++i) all[static_cast<std::size_t>(i)] = i;
    mods.push_back(std::move(all));
    hfull_.assign(static_cast<std::size_t>(N_) * static_cast<std::size_t>(N_), {});
  } else {
    mods = part_[0].cells;
  }
  std::vector<std::unique_ptr<CellModule>> cm(mods.size());
  parallel_for(mods.size(), [&](std::size_t i) { cm[i] = std::make_unique<CellModule>(*H_, mods[i]); }, opt_.threads);

  struct Cand {
    int x, y;
    long long c;
  };
  struct Top {
    int deg = INT_MIN;
    std::vector<Cand> at;
  };
  struct Job {
    std::size_t mod;
    int y;
    std::vector<Top> top;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (int y : mods[i]) jobs.push_back({i, y, {}});

  auto record = [](std::vector<Top>& top, int z, int x, int y, const ZPoly& f) {
    Top& t = top[static_cast<std::size_t>(z)];
    int d = f.degree();
    if (d < t.deg) return;
    if (d > t.deg) {
      t.deg = d;
      t.at.clear();
    }
    t.at.push_back({x, y, f.leading().to_ll()});
  };

  parallel_for(
      jobs.size(),
      [&](std::size_t j) {
        Job& job = jobs[j];
        const CellModule& M = *cm[job.mod];
        job.top.assign(static_cast<std::size_t>(M.dim()), {});
        M.products(job.y, [&](int x, const SparseVec& v) {
          for (auto& [i, f] : v) record(job.top, i, x, job.y, f);
          if (full_) hfull_[static_cast<std::size_t>(x) * static_cast<std::size_t>(N_) + static_cast<std::size_t>(job.y)] = v;
        });
      },
      opt_.threads);

  a_.assign(static_cast<std::size_t>(N_), INT_MIN);
  std::vector<std::vector<Cand>> best(static_cast<std::size_t>(N_));
  for (auto& job : jobs) {
    const auto& elems = mods[job.mod];
    for (std::size_t i = 0; i < job.top.size(); ++i) {
      Top& t = job.top[i];
      if (t.deg == INT_MIN) continue;
      int z = elems[i];
      int& az = a_[static_cast<std::size_t>(z)];
      if (t.deg > az) {
        az = t.deg;
        best[static_cast<std::size_t>(z)].clear();
      }
      if (t.deg == az) {
        auto& b = best[static_cast<std::size_t>(z)];
        b.insert(b.end(), t.at.begin(), t.at.end());
      }
    }
  }
  for (int z = 0; z < N_; ++z) {
    if (a_[static_cast<std::size_t>(z)] == INT_MIN) throw std::logic_error("no product reaches " + G.word_str(z));
    int zi = G.inverse(z);
    for (auto& c : best[static_cast<std::size_t>(z)]) gamma_[{c.x, c.y}].emplace_back(zi, c.c);
  }
  for (auto& [k, row] : gamma_) std::sort(row.begin(), row.end());

  isD_.assign(static_cast<std::size_t>(N_), 0);
  D_.clear();
  for (int z = 0; z < N_; ++z)
    if (a_[static_cast<std::size_t>(z)] == delta_[static_cast<std::size_t>(z)]) {
      isD_[static_cast<std::size_t>(z)] = 1;
      D_.push_back(z);
    }
  dz_.assign(static_cast<std::size_t>(N_), -1);
  for (const auto& cell : part_[0].cells) {
    int d = -1, cnt = 0;
    for (int z : cell)
      if (isD_[static_cast<std::size_t>(z)]) {
        d = z;
        ++cnt;
      }
    if (cnt == 1)
      for (int z : cell) dz_[static_cast<std::size_t>(z)] = d;
  }
}

long long CellData::nhat(int z) const {
  int d = dz_[static_cast<std::size_t>(group().inverse(z))];
  if (d < 0) throw std::logic_error("no distinguished involution in the left cell of z^-1");
  return n_[static_cast<std::size_t>(d)];
}

void CellData::compute_phi() {
  phi_.assign(static_cast<std::size_t>(N_), {});
  for (int z = 0; z < N_; ++z)
    if (dz_[static_cast<std::size_t>(z)] < 0 || dz_[static_cast<std::size_t>(group().inverse(z))] < 0) return;
  if (full_) {
    for (int w = 0; w < N_; ++w) {
      auto& col = phi_[static_cast<std::size_t>(w)];
      for (int z = 0; z < N_; ++z) {
        ZPoly f = h(w, dz_[static_cast<std::size_t>(z)], z);
        if (!f.is_zero()) col.emplace_back(z, f * Integer(nhat(z)));
      }
    }
    return;
  }
  const auto& cells = part_[0].cells;
  std::vector<SparseVec> per(cells.size() * static_cast<std::size_t>(N_));
  parallel_for(
      cells.size(),
      [&](std::size_t c) {
        CellModule M(*H_, cells[c]);
        int d = dz_[static_cast<std::size_t>(cells[c].front())];
        M.products(d, [&](int w, const SparseVec& v) {
          SparseVec& out = per[c * static_cast<std::size_t>(N_) + static_cast<std::size_t>(w)];
          for (auto& [i, f] : v) {
            int z = M.elements()[static_cast<std::size_t>(i)];
            out.emplace_back(z, f * Integer(nhat(z)));
          }
        });
      },
      opt_.threads);
  for (int w = 0; w < N_; ++w) {
    auto& col = phi_[static_cast<std::size_t>(w)];
    for (std::size_t c = 0; c < cells.size(); ++c) {
      auto& src = per[c * static_cast<std::size_t>(N_) + static_cast<std::size_t>(w)];
      col.insert(col.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

long long CellData::gamma(int x, int y, int z) const {
  auto it = gamma_.find({x, y});
  if (it == gamma_.end()) return 0;
  auto jt = std::lower_bound(it->second.begin(), it->second.end(), z, [](const auto& a, int v) { return a.first < v; });
  if (jt != it->second.end() && jt->first == z) return jt->second;
  return 0;
}

const std::vector<std::pair<int, long long>>& CellData::gamma_row(int x, int y) const {
  static const std::vector<std::pair<int, long long>> empty;
  auto it = gamma_.find({x, y});
  return it == gamma_.end() ? empty : it->second;
}

const SparseVec& CellData::h_row(int x, int y) const {
  if (!full_) throw std::logic_error("h-table is only stored in full mode");
  return hfull_[static_cast<std::size_t>(x) * static_cast<std::size_t>(N_) + static_cast<std::size_t>(y)];
}

ZPoly CellData::h(int x, int y, int z) const {
  const SparseVec& r = h_row(x, y);
  auto it = std::lower_bound(r.begin(), r.end(), z, [](const auto& a, int v) { return a.first < v; });
  if (it != r.end() && it->first == z) return it->second;
  return ZPoly();
}

}  // namespace cellkit
