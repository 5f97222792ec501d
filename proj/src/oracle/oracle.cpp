#include "oracle/oracle.hpp"

#include "core/summary.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ebi {
namespace {

constexpr int kNaiveMaxEdges = 24;
constexpr int kCanonicalMaxColumns = 24;
constexpr int kCanonicalMaxRows = 4096;
constexpr std::uint64_t kChargeBatch = 1024;

void check_common(int m, int n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::invalid_argument,
                "graph dimensions must be positive (got m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + ")");
  }
  if (m * n < 2) {
    throw Error(ErrorCode::unsupported,
                "K_{1,1} has a single edge; no labeling uses both labels");
  }
}

// Target 1-edge counts: mn/2 exactly when mn is even, otherwise the floor and
// (if requested) the ceiling.
std::vector<int> one_edge_targets(int edges, bool both_parities) {
  if (edges % 2 == 0) return {edges / 2};
  if (both_parities) return {edges / 2, edges / 2 + 1};
  return {edges / 2};
}

// Shared abort-aware state counter. Workers charge in batches; once any
// charge overflows the cap every later charge fails too.
class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}

  bool charge(std::uint64_t amount) {
    std::uint64_t now = used_.fetch_add(amount, std::memory_order_relaxed) + amount;
    if (now > cap_) {
      aborted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return !aborted_.load(std::memory_order_relaxed);
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  bool aborted() const { return aborted_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> aborted_{false};
  std::uint64_t cap_;
};

IndexSet collect(const std::vector<char>& seen) {
  IndexSet out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.insert(static_cast<int>(i));
  }
  return out;
}

struct CanonTables {
  std::vector<std::uint8_t> weight;   // popcount per pattern
  std::vector<std::uint8_t> sufmin;   // min weight over patterns >= p

  explicit CanonTables(int n) {
    const int full = 1 << n;
    weight.resize(full);
    sufmin.resize(full);
    for (int p = 0; p < full; ++p) weight[p] = static_cast<std::uint8_t>(std::popcount(static_cast<unsigned>(p)));
    std::uint8_t running = static_cast<std::uint8_t>(n);
    for (int p = full - 1; p >= 0; --p) {
      running = std::min(running, weight[p]);
      sufmin[p] = running;
    }
  }
};

// One worker's view of the canonical search. seen/colcnt are private; the
// budget is shared.
struct CanonWorker {
  int m, n, full;
  const CanonTables& tab;
  Budget& budget;
  std::uint64_t pending = 0;
  std::uint64_t leaves = 0;
  int min_weight = 0;
  std::vector<int> colcnt;
  std::vector<char> seen;

  CanonWorker(int m_, int n_, const CanonTables& tab_, Budget& budget_)
      : m(m_), n(n_), full(1 << n_), tab(tab_), budget(budget_), colcnt(n_, 0), seen(m_ + n_ + 1, 0) {}

  void charge_node() {
    if (++pending >= kChargeBatch) {
      if (!budget.charge(pending)) throw CapExceeded(budget.used());
      pending = 0;
    }
  }

  void flush() {
    if (pending > 0 && !budget.charge(pending)) {
      pending = 0;
      throw CapExceeded(budget.used());
    }
    pending = 0;
  }

  void leaf(int va1, int va0) {
    ++leaves;
    int vb1 = 0, vb0 = 0;
    for (int c = 0; c < n; ++c) {
      vb1 += 2 * colcnt[c] > m;
      vb0 += 2 * colcnt[c] < m;
    }
    seen[static_cast<std::size_t>(std::abs((va1 + vb1) - (va0 + vb0)))] = 1;
  }

  void place(int pattern, int slots_left, int want_left, int va1, int va0) {
    for (int bits = pattern; bits != 0; bits &= bits - 1) ++colcnt[std::countr_zero(static_cast<unsigned>(bits))];
    const int w = tab.weight[pattern];
    dfs(slots_left, pattern, want_left, va1 + (2 * w > n), va0 + (2 * w < n));
    for (int bits = pattern; bits != 0; bits &= bits - 1) --colcnt[std::countr_zero(static_cast<unsigned>(bits))];
  }

  // Fill `slots` more rows with patterns >= min_pattern summing to `want`.
  void dfs(int slots, int min_pattern, int want, int va1, int va0) {
    charge_node();
    if (slots == 0) {
      leaf(va1, va0);
      return;
    }
    for (int p = min_pattern; p < full; ++p) {
      // Every later pattern weighs at least sufmin[p], so once the floor for
      // all remaining slots exceeds the demand no suffix can work.
      if (static_cast<std::uint64_t>(tab.sufmin[p]) * slots > static_cast<std::uint64_t>(want)) break;
      const int w = tab.weight[p];
      if (w < min_weight || w > want) continue;
      const int rest = want - w;
      const int s1 = slots - 1;
      if (s1 == 0) {
        if (rest != 0) continue;
      } else if (static_cast<std::uint64_t>(tab.sufmin[p]) * s1 > static_cast<std::uint64_t>(rest) ||
                 rest > s1 * n) {
        continue;
      }
      place(p, s1, rest, va1, va0);
    }
  }
};

struct CanonJob {
  int target;
  int first_pattern;
  int min_weight;
};

// Root candidates mirror the dfs filter so each job is exactly one top-level
// branch. With column symmetry on, the first row is pinned to the low-columns
// pattern of its weight and every later row must weigh at least as much: any
// labeling can be column-permuted so that a minimum-weight row occupies the
// low columns, and row order within the multiset is already nondecreasing by
// pattern value.
std::vector<CanonJob> canonical_jobs(int m, int n, const CanonTables& tab, Budget& budget,
                                     const std::vector<int>& targets, bool column_symmetry) {
  const int full = 1 << n;
  std::vector<CanonJob> jobs;
  std::uint64_t pending = 0;
  for (int target : targets) {
    for (int p = 0; p < full; ++p) {
      if (++pending >= kChargeBatch) {
        if (!budget.charge(pending)) throw CapExceeded(budget.used());
        pending = 0;
      }
      if (static_cast<std::uint64_t>(tab.sufmin[p]) * m > static_cast<std::uint64_t>(target)) break;
      const int w = tab.weight[p];
      if (column_symmetry && p != (1 << w) - 1) continue;
      if (w > target) continue;
      const int rest = target - w;
      const int s1 = m - 1;
      if (s1 == 0) {
        if (rest != 0) continue;
      } else if (static_cast<std::uint64_t>(tab.sufmin[p]) * s1 > static_cast<std::uint64_t>(rest) ||
                 rest > s1 * n) {
        continue;
      }
      jobs.push_back({target, p, column_symmetry ? w : 0});
    }
  }
  if (pending > 0 && !budget.charge(pending)) throw CapExceeded(budget.used());
  return jobs;
}

struct CanonResult {
  std::vector<char> seen;
  std::uint64_t leaves = 0;
  std::exception_ptr error;
};

void run_jobs(int m, int n, const CanonTables& tab, Budget& budget,
              const std::vector<CanonJob>& jobs, std::atomic<std::size_t>& next,
              CanonResult& out) {
  CanonWorker worker(m, n, tab, budget);
  try {
    for (;;) {
      const std::size_t k = next.fetch_add(1, std::memory_order_relaxed);
      if (k >= jobs.size()) break;
      const CanonJob& job = jobs[k];
      worker.min_weight = job.min_weight;
      worker.charge_node();
      worker.place(job.first_pattern, m - 1, job.target - tab.weight[job.first_pattern], 0, 0);
    }
    worker.flush();
    out.seen = std::move(worker.seen);
    out.leaves = worker.leaves;
  } catch (...) {
    out.error = std::current_exception();
  }
}

}  // namespace

IndexSet naive_enumerate(int m, int n, const SearchConfig& cfg, SearchStats* stats) {
  check_common(m, n);
  const int edges = m * n;
  if (edges > kNaiveMaxEdges) {
    throw Error(ErrorCode::invalid_argument,
                "naive enumeration walks every subset and is limited to m*n <= " +
                    std::to_string(kNaiveMaxEdges) + " (got " + std::to_string(edges) + ")");
  }
  const auto t0 = std::chrono::steady_clock::now();
  Budget budget(cfg.state_cap);
  std::uint64_t pending = 0;
  std::uint64_t leaves = 0;
  std::vector<char> seen(m + n + 1, 0);
  std::vector<int> colcnt(n, 0);
  const std::uint64_t end = std::uint64_t{1} << edges;

  for (int target : one_edge_targets(edges, cfg.both_parities)) {
    if (target == 0) {
      // Only possible for edges == 1, which check_common rejects.
      continue;
    }
    std::uint64_t mask = (std::uint64_t{1} << target) - 1;
    while (mask < end) {
      if (++pending >= kChargeBatch) {
        if (!budget.charge(pending)) throw CapExceeded(budget.used());
        pending = 0;
      }
      ++leaves;
      // Edge k joins row k/n to column k%n.
      for (int c = 0; c < n; ++c) colcnt[c] = 0;
      int va1 = 0, va0 = 0;
      for (int row = 0; row < m; ++row) {
        const auto row_bits = (mask >> (row * n)) & ((std::uint64_t{1} << n) - 1);
        const int w = std::popcount(row_bits);
        va1 += 2 * w > n;
        va0 += 2 * w < n;
        for (auto bits = row_bits; bits != 0; bits &= bits - 1) ++colcnt[std::countr_zero(bits)];
      }
      int vb1 = 0, vb0 = 0;
      for (int c = 0; c < n; ++c) {
        vb1 += 2 * colcnt[c] > m;
        vb0 += 2 * colcnt[c] < m;
      }
      seen[static_cast<std::size_t>(std::abs((va1 + vb1) - (va0 + vb0)))] = 1;

      // Gosper's hack: next mask with the same popcount.
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  if (pending > 0 && !budget.charge(pending)) throw CapExceeded(budget.used());
  if (stats) {
    stats->states_visited = budget.used();
    stats->leaves = leaves;
    stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return collect(seen);
}

IndexSet canonical_enumerate(int m, int n, const SearchConfig& cfg, SearchStats* stats) {
  check_common(m, n);
  if (n > kCanonicalMaxColumns) {
    throw Error(ErrorCode::invalid_argument,
                "canonical enumeration tabulates 2^n row patterns and is limited to n <= " +
                    std::to_string(kCanonicalMaxColumns) + " (got " + std::to_string(n) + ")");
  }
  if (m > kCanonicalMaxRows) {
    throw Error(ErrorCode::invalid_argument,
                "canonical enumeration recurses once per row and is limited to m <= " +
                    std::to_string(kCanonicalMaxRows) + " (got " + std::to_string(m) + ")");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const CanonTables tab(n);
  Budget budget(cfg.state_cap);
  const auto targets = one_edge_targets(m * n, cfg.both_parities);
  const auto jobs = canonical_jobs(m, n, tab, budget, targets, cfg.column_symmetry);

  const int want_threads = std::max(1, cfg.threads);
  const int workers = static_cast<int>(std::min<std::size_t>(want_threads, std::max<std::size_t>(jobs.size(), 1)));
  std::vector<CanonResult> results(workers);
  std::atomic<std::size_t> next{0};

  if (workers <= 1) {
    run_jobs(m, n, tab, budget, jobs, next, results[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(run_jobs, m, n, std::cref(tab), std::ref(budget), std::cref(jobs),
                        std::ref(next), std::ref(results[w]));
    }
    for (auto& t : pool) t.join();
  }

  if (budget.aborted()) throw CapExceeded(budget.used());
  for (auto& res : results) {
    if (res.error) std::rethrow_exception(res.error);
  }

  std::vector<char> seen(m + n + 1, 0);
  std::uint64_t leaves = 0;
  for (auto& res : results) {
    leaves += res.leaves;
    for (std::size_t i = 0; i < res.seen.size(); ++i) seen[i] = static_cast<char>(seen[i] | res.seen[i]);
  }
  if (stats) {
    stats->states_visited = budget.used();
    stats->leaves = leaves;
    stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return collect(seen);
}

bool spot_check(const EdgeLabeling& lab, const IndexSet& oracle_result) {
  return oracle_result.contains(ebi_index(lab));
}

}  // namespace ebi
