#pragma once

#include <string>

#include "core/index_set.hpp"
#include "core/params.hpp"

namespace ebi {

// Closed-form edge-balanced index set of K_{m,n} for m odd, n even, m > n >= 2:
//   n = 2          -> {0}
//   n >= 4, r = 0  -> {0, ..., m+n-2q-2}
//   n >= 4, r = 1  -> {0, ..., m+n-2q-3}
//   n >= 4, r >= 2 -> {0, ..., m+n-2q-4}
IndexSet theorem_ebi(const GraphParams& params);

int max_index(const GraphParams& params);

// Certifies that the low range reachable from the balanced labeling meets the
// high range reachable from the skewed one, i.e. that their union is the
// contiguous set {0, ..., max_index}. The low-range maximum is m-2q for r=0,
// m-2q-1 for r=1 and m-2q-2 for r>=2; the check is low-range max >= n-3.
struct OverlapReport {
  bool holds = false;
  int low_max = 0;       // top of the range grown from the balanced labeling
  int high_min = 0;      // n-2, bottom of the range grown from the skewed one
  std::string subcase;   // which arithmetic case applied
  std::string detail;    // the inequality, with numbers substituted
};

// Requires n >= 4; for n = 2 there is no pair of ranges to join.
OverlapReport range_overlap_check(const GraphParams& params);

}  // namespace ebi
