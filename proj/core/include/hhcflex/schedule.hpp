#pragma once

#include <span>
#include <vector>

#include "hhcflex/instance.hpp"

namespace hhcflex {

struct Propagated {
  bool feasible = false;
  std::vector<double> start_times;  // one per sequence element when feasible
  double completion = 0.0;          // departure time after the last service
};

// Earliest-feasible start times for visiting `sequence` (indices into
// `tasks`) from `origin`, leaving the origin at time 0: arrive, wait to
// window_lo when early, fail when past window_hi. Since the objective
// counts travel only, earliest-feasible scheduling is optimal for any
// fixed sequence.
Propagated propagate_earliest(const Instance& instance,
                              const std::vector<Task>& tasks,
                              std::span<const int> sequence, Endpoint origin);

}  // namespace hhcflex
