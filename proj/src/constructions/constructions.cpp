#include "constructions/constructions.hpp"

#include <algorithm>
#include <string>

namespace ebi {

namespace {

std::uint64_t cols(int first, int last) {  // mask of columns first..last, 1-based
  std::uint64_t mask = 0;
  for (int c = first; c <= last; ++c) mask |= 1ull << (c - 1);
  return mask;
}

// Non-leader fprime rows under the interleaved pattern; leader slots stay 0.
// Odd blocks put zeros on columns j-1 .. j+n/2-3, even blocks and star rows
// put ones on columns j .. j+n/2-1 (the last even row wraps onto u_1), and
// column n is 0 everywhere.
std::vector<std::uint64_t> pattern_body(const GraphParams& params) {
  const int n = params.n();
  const int half = params.half_n();
  const std::uint64_t width = cols(1, n);
  std::vector<std::uint64_t> body(static_cast<size_t>(params.m()), 0);  // 0-based rows
  for (int i = 1; i <= params.quotient(); ++i) {
    if (i % 2 == 1) {
      for (int j = 2; j <= params.block_size(); ++j)
        body[params.row_of(i, j) - 1] = width & ~(cols(j - 1, j + half - 3) | cols(n, n));
    } else {
      for (int j = 2; j <= half; ++j) body[params.row_of(i, j) - 1] = cols(j, j + half - 1);
      const int j = params.block_size();
      body[params.row_of(i, j) - 1] = cols(j, j + half - 2) | cols(1, 1);
    }
  }
  for (int j = 2; j <= params.remainder(); ++j)
    body[params.star_row_of(j) - 1] = cols(j, j + half - 1);
  return body;
}

// True when every column u_1..u_{n-1} keeps deg1 > deg0 once the leader rows
// (1 on columns 1..n/2 each) are counted in.
bool columns_hold_majority(const GraphParams& params, const std::vector<std::uint64_t>& body) {
  const int leaders = params.quotient() + (params.has_star() ? 1 : 0);
  const int threshold = (params.m() + 1) / 2;
  for (int c = 1; c <= params.n() - 1; ++c) {
    long long ones = c <= params.half_n() ? leaders : 0;
    for (const std::uint64_t row : body) ones += (row >> (c - 1)) & 1;
    if (ones < threshold) return false;
  }
  return true;
}

// Rewrites the non-leader rows, keeping each row's forced zero on column j-1
// (the schedule switches through it) and its zero on column n, and spreading
// the remaining n/2-2 zeros per row so that no column of u_1..u_{n-1}
// collects more than (m-1)/2 zeros. Column targets are the flattest profile
// between the forced floor and that cap; each row then takes its free zeros
// from the columns with the most unused target.
void rebalance_free_zeros(const GraphParams& params, std::vector<std::uint64_t>& body) {
  const int n = params.n();
  const int half = params.half_n();
  const int last = n - 1;
  const int leaders = params.quotient() + (params.has_star() ? 1 : 0);
  const long long cap = (params.m() - 1) / 2;

  std::vector<long long> fixed(last + 1, 0);  // zeros no row placement can move
  for (int c = 1; c <= last; ++c)
    fixed[c] = c <= half ? params.quotient() + (c <= params.remainder() - 1 ? 1 : 0) : leaders;
  for (int c = 1; c <= last; ++c)
    if (fixed[c] > cap)
      throw Error(ErrorCode::internal, "fprime forced zeros already break column " + std::to_string(c));

  const long long free_zeros = static_cast<long long>(params.m() - leaders) * (half - 2);
  auto absorbed = [&](long long level) {
    long long total = 0;
    for (int c = 1; c <= last; ++c) total += std::max(0ll, std::min(level, cap) - fixed[c]);
    return total;
  };
  long long level = 0;
  for (long long hi = cap; level < hi;) {
    const long long mid = (level + hi + 1) / 2;
    if (absorbed(mid) <= free_zeros) level = mid;
    else hi = mid - 1;
  }
  long long leftover = free_zeros - absorbed(level);
  std::vector<long long> spare(last + 1, 0);  // free zeros each column can still take
  for (int c = 1; c <= last; ++c) {
    long long target = std::max(fixed[c], std::min(level, cap));
    if (leftover > 0 && target == level && level < cap) {
      ++target;
      --leftover;
    }
    spare[c] = target - fixed[c];
  }
  if (leftover != 0)
    throw Error(ErrorCode::internal, "fprime rebalance cannot absorb the free zeros");

  std::vector<int> order;
  order.reserve(last);
  auto place = [&](int row, int j) {
    std::uint64_t zeros = cols(j - 1, j - 1) | cols(n, n);
    order.clear();
    for (int c = 1; c <= last; ++c)
      if (c != j - 1) order.push_back(c);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return spare[a] > spare[b]; });
    for (int k = 0; k < half - 2; ++k) {
      if (spare[order[k]] <= 0)
        throw Error(ErrorCode::internal, "fprime rebalance ran out of column quota");
      --spare[order[k]];
      zeros |= cols(order[k], order[k]);
    }
    body[row - 1] = cols(1, n) & ~zeros;
  };
  for (int i = 1; i <= params.quotient(); ++i)
    for (int j = 2; j <= params.block_size(); ++j) place(params.row_of(i, j), j);
  for (int j = 2; j <= params.remainder(); ++j) place(params.star_row_of(j), j);
}

}  // namespace

PartialLabeling initialize_shared(const GraphParams& params) {
  PartialLabeling pl(params);
  const std::uint64_t head = cols(1, params.half_n());
  for (int i = 1; i <= params.quotient(); ++i) pl.set_row(params.row_of(i, 1), head);
  if (params.has_star()) pl.set_row(params.star_row_of(1), head);
  return pl;
}

EdgeLabeling build_f(const GraphParams& params) {
  PartialLabeling pl = initialize_shared(params);
  const std::uint64_t tail = cols(params.half_n() + 1, params.n());
  for (int i = 1; i <= params.quotient(); ++i)
    for (int j = 2; j <= params.block_size(); ++j) pl.set_row(params.row_of(i, j), tail);
  for (int j = 2; j <= params.remainder(); ++j) pl.set_row(params.star_row_of(j), tail);
  return pl.finalize();
}

EdgeLabeling build_f_prime(const GraphParams& params) {
  if (params.n() < 4)
    throw Error(ErrorCode::unsupported, "fprime is defined for n >= 4 (f already gives index 0 when n = 2)");

  // The interleaved pattern can starve a column of its 1-majority once n >= 8
  // (first at K_{13,8}); rebalanced free zeros restore it there.
  std::vector<std::uint64_t> body = pattern_body(params);
  if (!columns_hold_majority(params, body)) {
    rebalance_free_zeros(params, body);
    if (!columns_hold_majority(params, body))
      throw Error(ErrorCode::internal, "fprime rebalance left a column without a 1-majority");
  }

  PartialLabeling pl = initialize_shared(params);
  for (int i = 1; i <= params.quotient(); ++i)
    for (int j = 2; j <= params.block_size(); ++j) {
      const int row = params.row_of(i, j);
      pl.set_row(row, body[row - 1]);
    }
  for (int j = 2; j <= params.remainder(); ++j) {
    const int row = params.star_row_of(j);
    pl.set_row(row, body[row - 1]);
  }

  return pl.finalize();  // finalize asserts e(0) = e(1)
}

namespace {

SwitchSchedule schedule_template(const GraphParams& params, ScheduleOrigin origin) {
  SwitchSchedule sched{origin, {}};
  for (int i = 1; i <= params.quotient(); ++i)
    sched.ops.push_back({1, params.row_of(i, 1), params.row_of(i, 2)});
  for (int i = 1; i <= params.quotient(); ++i)
    for (int j = 2; j <= params.half_n(); ++j)
      sched.ops.push_back({j, params.row_of(i, 1), params.row_of(i, j + 1)});
  for (int j = 1; j <= params.remainder() - 1; ++j)
    sched.ops.push_back({j, params.star_row_of(1), params.star_row_of(j + 1)});
  return sched;
}

}  // namespace

SwitchSchedule schedule_from_f(const GraphParams& params) {
  return schedule_template(params, ScheduleOrigin::from_f);
}

SwitchSchedule schedule_from_f_prime(const GraphParams& params) {
  if (params.n() < 4)
    throw Error(ErrorCode::unsupported, "no fprime schedule for n = 2");
  return schedule_template(params, ScheduleOrigin::from_f_prime);
}

Trajectory run_trajectory(const EdgeLabeling& start, const SwitchSchedule& sched) {
  Trajectory t{start, start, ebi_index(start), {}, {}};
  t.achieved.insert(t.start_index);
  for (size_t k = 0; k < sched.ops.size(); ++k) {
    try {
      t.finish.apply_switch(sched.ops[k]);
    } catch (const Error& e) {
      throw Error(e.code(), "schedule op " + std::to_string(k + 1) + ": " + e.what());
    }
    const int idx = ebi_index(t.finish);
    t.steps.push_back({sched.ops[k], idx});
    t.achieved.insert(idx);
  }
  return t;
}

Trajectory run_trajectory(const GraphParams& params, Construction which) {
  if (which == Construction::f)
    return run_trajectory(build_f(params), schedule_from_f(params));
  return run_trajectory(build_f_prime(params), schedule_from_f_prime(params));
}

IndexSet constructive_ebi(const GraphParams& params) {
  if (params.n() == 2) return IndexSet::range(0, 0);
  IndexSet achieved = run_trajectory(params, Construction::f).achieved;
  achieved.merge(run_trajectory(params, Construction::fprime).achieved);
  if (!achieved.contiguous_from_zero())
    throw Error(ErrorCode::internal,
                "achieved index ranges do not join into a contiguous set: " + achieved.to_string());
  return achieved;
}

}  // namespace ebi
