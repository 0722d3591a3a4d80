#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hexwalk/domain.hpp"
#include "hexwalk/winding.hpp"

namespace hexwalk {

struct EnumOptions {
  int threads = 1;
  std::uint64_t budget = 0;  // cap on visited walks, 0 = unlimited
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
};

namespace detail {

// Shared between all tasks of one enumeration.
struct BudgetGate {
  std::uint64_t cap = 0;
  std::atomic<std::uint64_t> used{0};
  void charge() {
    if (cap == 0) return;
    if (used.fetch_add(1, std::memory_order_relaxed) + 1 > cap)
      throw BudgetExceeded();
  }
};

// Depth at which enumeration trees are cut into independent prefix jobs.
inline constexpr int kSplitDepth = 7;

// Evaluates job(0), ..., job(n-1) on up to `threads` workers and returns the
// results indexed by job. The index order is what makes parallel runs
// reproduce serial output byte for byte.
template <class Acc, class Job>
std::vector<std::optional<Acc>> map_jobs(std::size_t n, int threads, Job&& job) {
  std::vector<std::optional<Acc>> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i].emplace(job(i));
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i].emplace(job(i));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// Depth-first expansion of the walks that enter a domain through its start
// edge: the first vertex is outside, every later vertex inside, vertices
// distinct, no backtracks. on_saw(verts, rev_exp, wind) fires once per such
// SAW, where rev_exp is the direction exponent of the final edge oriented
// against the walk. on_exit(verts, edge, away_exp, wind) fires once per weak
// SAW obtained by appending one border-crossing step (the start edge alone
// counts as such a walk). Children expand in the fixed neighbour order, so
// a fixed-depth prefix split reproduces the serial visit sequence.
template <class OnSaw, class OnExit>
class WalkDfs {
 public:
  WalkDfs(const Domain& d, int max_len, OnSaw& on_saw, OnExit& on_exit,
          BudgetGate* gate)
      : dom_(d), max_len_(max_len), on_saw_(on_saw), on_exit_(on_exit),
        gate_(gate) {
    if (max_len < 1) throw std::invalid_argument("walk dfs: max_len must be >= 1");
  }

  void run() {
    start();
    descend(dom_.entry, dom_.source, step_exponent(dom_.source, dom_.entry), 0, 1);
  }

  // Shallow phase: handles everything above `split_depth` edges and returns
  // the positions at exactly that depth for later continuation.
  std::vector<Walk> run_collect(int split_depth) {
    std::vector<Walk> prefixes;
    split_ = split_depth;
    prefixes_ = &prefixes;
    run();
    split_ = -1;
    prefixes_ = nullptr;
    return prefixes;
  }

  // Continues below one collected prefix.
  void run_from(const Walk& prefix) {
    verts_ = prefix;
    visited_.clear();
    for (std::size_t i = 1; i < prefix.size(); ++i) visited_.insert(prefix[i]);
    const Vertex prev = prefix[prefix.size() - 2];
    descend(prefix.back(), prev, step_exponent(prev, prefix.back()),
            winding(prefix), static_cast<int>(prefix.size()) - 1);
  }

 private:
  void start() {
    verts_ = {dom_.source, dom_.entry};
    visited_.clear();
    visited_.insert(dom_.entry);
    if (gate_) gate_->charge();
    on_exit_(verts_, dom_.start, direction_exponent(dom_.start, dom_.entry), 0);
  }

  void descend(Vertex cur, Vertex prev, int last_exp, long long wind, int n) {
    if (n == split_) {
      prefixes_->push_back(verts_);
      return;
    }
    if (gate_) gate_->charge();
    on_saw_(verts_, (last_exp + 3) % 6, wind);
    for (Vertex u : neighbors(cur)) {
      if (u == prev) continue;
      const int e_exp = step_exponent(cur, u);
      const int h = hook_from_exponents(last_exp, e_exp);
      if (!dom_.contains(u)) {
        if (n + 1 <= max_len_) {
          if (gate_) gate_->charge();
          verts_.push_back(u);
          on_exit_(verts_, Edge(cur, u), e_exp, wind + h);
          verts_.pop_back();
        }
        continue;
      }
      if (n + 1 > max_len_ || visited_.count(u)) continue;
      visited_.insert(u);
      verts_.push_back(u);
      descend(u, cur, e_exp, wind + h, n + 1);
      verts_.pop_back();
      visited_.erase(u);
    }
  }

  const Domain& dom_;
  int max_len_;
  OnSaw& on_saw_;
  OnExit& on_exit_;
  BudgetGate* gate_;
  Walk verts_;
  VertexSet visited_;
  int split_ = -1;
  std::vector<Walk>* prefixes_ = nullptr;
};

// Board-backed DFS over the SAWs from a root vertex, unconstrained by any
// domain. on_saw(verts) fires once per SAW of length >= 1; on_closed(verts)
// once per closed SAW returning to the root, each traversal direction
// separately.
template <class OnSaw, class OnClosed>
class FreeDfs {
 public:
  FreeDfs(Vertex root, int max_len, OnSaw& on_saw, OnClosed& on_closed,
          BudgetGate* gate)
      : root_(root), max_len_(max_len), reach_(max_len + 1),
        width_(2 * reach_ + 1),
        board_(static_cast<std::size_t>(width_) * width_, 0),
        on_saw_(on_saw), on_closed_(on_closed), gate_(gate) {
    if (max_len < 1) throw std::invalid_argument("free dfs: max_len must be >= 1");
  }

  void run(std::optional<Vertex> forced_first = {}) {
    verts_ = {root_};
    cell(root_) = 1;
    for (Vertex u : neighbors(root_)) {
      if (forced_first && u != *forced_first) continue;
      cell(u) = 1;
      verts_.push_back(u);
      descend(u, root_, 1);
      verts_.pop_back();
      cell(u) = 0;
    }
    cell(root_) = 0;
  }

  std::vector<Walk> run_collect(int split_depth,
                                std::optional<Vertex> forced_first = {}) {
    std::vector<Walk> prefixes;
    split_ = split_depth;
    prefixes_ = &prefixes;
    run(forced_first);
    split_ = -1;
    prefixes_ = nullptr;
    return prefixes;
  }

  void run_from(const Walk& prefix) {
    verts_ = prefix;
    for (Vertex v : prefix) cell(v) = 1;
    descend(prefix.back(), prefix[prefix.size() - 2],
            static_cast<int>(prefix.size()) - 1);
    for (Vertex v : prefix) cell(v) = 0;
  }

 private:
  char& cell(Vertex v) {
    const std::int64_t i = (v.p - root_.p + reach_) * width_ + (v.q - root_.q + reach_);
    return board_[static_cast<std::size_t>(i)];
  }

  void descend(Vertex cur, Vertex prev, int n) {
    if (n == split_) {
      prefixes_->push_back(verts_);
      return;
    }
    if (gate_) gate_->charge();
    on_saw_(verts_);
    if (n + 1 > max_len_) return;
    for (Vertex u : neighbors(cur)) {
      if (u == prev) continue;
      if (u == root_) {
        verts_.push_back(u);
        on_closed_(verts_);
        verts_.pop_back();
        continue;
      }
      if (cell(u)) continue;
      cell(u) = 1;
      verts_.push_back(u);
      descend(u, cur, n + 1);
      verts_.pop_back();
      cell(u) = 0;
    }
  }

  Vertex root_;
  int max_len_;
  std::int64_t reach_, width_;
  std::vector<char> board_;
  OnSaw& on_saw_;
  OnClosed& on_closed_;
  BudgetGate* gate_;
  Walk verts_;
  int split_ = -1;
  std::vector<Walk>* prefixes_ = nullptr;
};

}  // namespace detail

// Cycles (2-regular connected subgraphs) through v whose vertices all
// satisfy `inside` and avoid `forbidden`, with at most max_len edges. Each
// cycle is visited once, not once per traversal direction: the reported
// traversal starts toward the smaller of the two cycle neighbours of v.
// visit(edge_count).
template <class Contains, class Visit>
void for_each_cycle_through(Contains&& inside, Vertex v,
                            const VertexSet& forbidden, int max_len,
                            Visit&& visit, detail::BudgetGate* gate = nullptr) {
  if (max_len < 6) return;  // the lattice has girth 6
  Walk path{v};
  VertexSet on_path{v};
  auto rec = [&](auto&& self, Vertex cur, Vertex prev, int n) -> void {
    if (gate) gate->charge();
    for (Vertex u : neighbors(cur)) {
      if (u == prev) continue;
      if (u == v) {
        if (n >= 2 && path[1] < cur) visit(n + 1);
        continue;
      }
      if (n + 1 > max_len - 1) continue;
      if (!inside(u) || forbidden.count(u) || on_path.count(u)) continue;
      on_path.insert(u);
      path.push_back(u);
      self(self, u, cur, n + 1);
      path.pop_back();
      on_path.erase(u);
    }
  };
  rec(rec, v, v, 0);
}

// Deterministic reduction over all interior SAWs and border exits of a
// domain. make() builds one accumulator per task; on_saw(acc, verts,
// rev_exp, wind) and on_exit(acc, verts, edge, away_exp, wind) mutate it;
// merge(into, from) folds task results in fixed prefix order. The result is
// invariant under opt.threads.
template <class Acc, class Make, class OnSawA, class OnExitA, class Merge>
Acc reduce_domain_walks(const Domain& d, int max_len, const EnumOptions& opt,
                        Make make, OnSawA on_saw, OnExitA on_exit, Merge merge) {
  detail::BudgetGate gate{opt.budget};
  Acc acc = make();
  auto saw0 = [&](const Walk& w, int rev, long long r) { on_saw(acc, w, rev, r); };
  auto exit0 = [&](const Walk& w, Edge e, int away, long long r) {
    on_exit(acc, w, e, away, r);
  };
  detail::WalkDfs<decltype(saw0), decltype(exit0)> dfs(d, max_len, saw0, exit0,
                                                       &gate);
  if (opt.threads <= 1 || max_len <= detail::kSplitDepth + 2) {
    dfs.run();
    return acc;
  }
  const std::vector<Walk> prefixes = dfs.run_collect(detail::kSplitDepth);
  auto jobs = detail::map_jobs<Acc>(
      prefixes.size(), opt.threads, [&](std::size_t i) {
        Acc local = make();
        auto saw = [&](const Walk& w, int rev, long long r) {
          on_saw(local, w, rev, r);
        };
        auto exitv = [&](const Walk& w, Edge e, int away, long long r) {
          on_exit(local, w, e, away, r);
        };
        detail::WalkDfs<decltype(saw), decltype(exitv)> task(d, max_len, saw,
                                                            exitv, &gate);
        task.run_from(prefixes[i]);
        return local;
      });
  for (auto& job : jobs) merge(acc, std::move(*job));
  return acc;
}

// Same contract for the free (domain-less) SAW tree from a root vertex.
// on_saw(acc, verts); on_closed(acc, closed_verts).
template <class Acc, class Make, class OnSawA, class OnClosedA, class Merge>
Acc reduce_free_walks(Vertex root, std::optional<Vertex> forced_first,
                      int max_len, const EnumOptions& opt, Make make,
                      OnSawA on_saw, OnClosedA on_closed, Merge merge) {
  detail::BudgetGate gate{opt.budget};
  Acc acc = make();
  auto saw0 = [&](const Walk& w) { on_saw(acc, w); };
  auto closed0 = [&](const Walk& w) { on_closed(acc, w); };
  detail::FreeDfs<decltype(saw0), decltype(closed0)> dfs(root, max_len, saw0,
                                                         closed0, &gate);
  if (opt.threads <= 1 || max_len <= detail::kSplitDepth + 2) {
    dfs.run(forced_first);
    return acc;
  }
  const std::vector<Walk> prefixes =
      dfs.run_collect(detail::kSplitDepth, forced_first);
  auto jobs = detail::map_jobs<Acc>(
      prefixes.size(), opt.threads, [&](std::size_t i) {
        Acc local = make();
        auto saw = [&](const Walk& w) { on_saw(local, w); };
        auto closed = [&](const Walk& w) { on_closed(local, w); };
        detail::FreeDfs<decltype(saw), decltype(closed)> task(root, max_len,
                                                              saw, closed, &gate);
        task.run_from(prefixes[i]);
        return local;
      });
  for (auto& job : jobs) merge(acc, std::move(*job));
  return acc;
}

// Serial convenience wrappers for tests and small scans.
template <class F>
void for_each_entry_saw(const Domain& d, int max_len, F&& f) {
  auto ignore_exit = [](const Walk&, Edge, int, long long) {};
  detail::WalkDfs<F, decltype(ignore_exit)> dfs(d, max_len, f, ignore_exit,
                                                nullptr);
  dfs.run();
}

template <class F>
void for_each_border_walk(const Domain& d, int max_len, F&& f) {
  auto ignore_saw = [](const Walk&, int, long long) {};
  detail::WalkDfs<decltype(ignore_saw), F> dfs(d, max_len, ignore_saw, f,
                                               nullptr);
  dfs.run();
}

template <class F>
void for_each_free_saw(Vertex root, int max_len, F&& f) {
  auto ignore_closed = [](const Walk&) {};
  detail::FreeDfs<F, decltype(ignore_closed)> dfs(root, max_len, f,
                                                  ignore_closed, nullptr);
  dfs.run();
}

// ---- counting entry points ----
// All *_upto functions return a vector indexed by walk length, entry [0]
// unused, entries [1..n_max] the exact counts.

// s_n: SAWs of length n with first vertex (0,0).
std::vector<mpz_class> count_saws_upto(int n_max, const EnumOptions& opt = {});
mpz_class count_saws(int n, const EnumOptions& opt = {});

// b_n: SAWs whose first edge is (0,0)(1,0).
std::vector<mpz_class> count_start_saws_upto(int n_max, const EnumOptions& opt = {});

// c_n: SAWs with first edge (0,0)(1,0) whose later vertices stay in p >= 1.
std::vector<mpz_class> count_halfplane_saws_upto(int n_max, const EnumOptions& opt = {});

// d_n: distinct walks lying in at least one trapezoid exit class
// X_{r,s}(a, D), union over r,s in [2, n_max + range_pad], deduplicated by
// vertex sequence.
std::vector<mpz_class> count_trapezoidal_saws_upto(int n_max,
                                                   const EnumOptions& opt = {},
                                                   int range_pad = 0);

// length -> complete winding -> multiplicity, over every closed SAW through
// `root` of length <= max_len, one visit per traversal direction.
using ClosedCensus = std::map<int, std::map<long long, std::uint64_t>>;
ClosedCensus closed_saw_census(Vertex root, int max_len,
                               const EnumOptions& opt = {});

}  // namespace hexwalk
