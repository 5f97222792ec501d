#pragma once

#include <cstdint>

#include "core/index_set.hpp"
#include "core/labeling.hpp"

namespace ebi {

struct SearchConfig {
  // Maximum visited partial assignments before the search aborts.
  std::uint64_t state_cap = 50'000'000;
  // Worker threads for the canonical search; results are identical for any
  // value. <= 1 runs single-threaded.
  int threads = 1;
  // Additionally prune by column symmetry: the first row pattern is forced to
  // the low-columns representative of its weight class. Off by default; must
  // agree with the default path (checked by the test suite on m*n <= 24).
  bool column_symmetry = false;
  // When m*n is odd both e(1) = floor(mn/2) and ceil(mn/2) satisfy
  // |e(1)-e(0)| <= 1; enumerate both. Turning this off keeps only the floor.
  bool both_parities = true;
};

struct SearchStats {
  std::uint64_t states_visited = 0;
  std::uint64_t leaves = 0;
  double seconds = 0.0;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::uint64_t states)
      : Error(ErrorCode::cap_exhausted,
              "state cap exhausted after " + std::to_string(states) + " visited states"),
        states_visited(states) {}

  std::uint64_t states_visited;
};

// Exact index set over all edge-friendly labelings, enumerating every
// placement of the required 1-edges. Restricted to m*n <= 24.
IndexSet naive_enumerate(int m, int n, const SearchConfig& cfg = {}, SearchStats* stats = nullptr);

// Same set, enumerating multisets of row patterns in nondecreasing order
// instead of raw placements: permuting the rows of a labeling permutes the
// vertices of A and changes no degree, so one ordered representative per
// multiset suffices. Branches are pruned when the remaining weight demand
// cannot be met by the remaining slots.
IndexSet canonical_enumerate(int m, int n, const SearchConfig& cfg = {}, SearchStats* stats = nullptr);

// True iff the labeling's index is a member of the enumerated set.
bool spot_check(const EdgeLabeling& lab, const IndexSet& oracle_result);

}  // namespace ebi
