#pragma once

#include <vector>

#include "core/index_set.hpp"
#include "core/labeling.hpp"
#include "core/summary.hpp"

namespace ebi {

// The two edge-friendly labelings this library constructs:
//   f       balanced; all of A unlabeled, half of B labeled each way, index 0.
//   fprime  skewed; all of A unlabeled, one B vertex labeled 0 and the other
//           n-1 labeled 1, index n-2. Defined only for n >= 4.
enum class Construction { f, fprime };

// Shared first step of both constructions: the leading row of every block
// (v_1^i and, when r >= 1, v_1^*) gets 1 on columns 1..n/2 and 0 elsewhere,
// leaving those vertices unlabeled. All other rows stay unset.
PartialLabeling initialize_shared(const GraphParams& params);

// Completes the shared initialization with rows that are 0 on columns 1..n/2
// and 1 elsewhere. Every A vertex ends up unlabeled and the index is 0.
EdgeLabeling build_f(const GraphParams& params);

// Completes the shared initialization so that column u_n is all 0 while every
// A vertex stays unlabeled: u_n is the lone 0-vertex, u_1..u_{n-1} are
// 1-vertices, and the index is n-2. Rejects n = 2.
EdgeLabeling build_f_prime(const GraphParams& params);

enum class ScheduleOrigin { from_f, from_f_prime };

// An ordered list of switches, each valid at the moment it is applied when
// replayed from the labeling its origin names.
struct SwitchSchedule {
  ScheduleOrigin origin;
  std::vector<SwitchOp> ops;
};

// The switch order is fixed: first one switch per block at u_1 pairing v_1^i
// with v_2^i, then for each block in turn the pivots u_2..u_{n/2} pairing
// v_1^i with v_{j+1}^i, and finally (when r >= 2) the star pivots u_1..u_{r-1}
// pairing v_1^* with v_{j+1}^*. The block round leaves the index unchanged;
// every op of the middle round raises it by one.
SwitchSchedule schedule_from_f(const GraphParams& params);
SwitchSchedule schedule_from_f_prime(const GraphParams& params);  // rejects n = 2

struct TrajectoryStep {
  SwitchOp op;
  int index_after;
};

struct Trajectory {
  EdgeLabeling start;
  EdgeLabeling finish;
  int start_index = 0;
  std::vector<TrajectoryStep> steps;
  IndexSet achieved;  // start index plus the index after every op
};

// Replays the schedule, recording the index after every op. Throws on a
// malformed op, naming its position.
Trajectory run_trajectory(const EdgeLabeling& start, const SwitchSchedule& sched);

// Convenience: build the origin labeling of the schedule and replay.
Trajectory run_trajectory(const GraphParams& params, Construction which);

// Indices realized by construction: {0} for n = 2, otherwise the union of the
// two replayed trajectories. Verifies the union is contiguous from 0.
IndexSet constructive_ebi(const GraphParams& params);

}  // namespace ebi
