#pragma once

#include <cstdint>
#include <string>

#include "hhcflex/instance.hpp"
#include "hhcflex/solution.hpp"

namespace hhcflex {

namespace neighborhood {
inline constexpr unsigned kRelocate = 1u << 0;
inline constexpr unsigned kSwap = 1u << 1;
inline constexpr unsigned kTwoOptWithinRoute = 1u << 2;
inline constexpr unsigned kAll = kRelocate | kSwap | kTwoOptWithinRoute;
}  // namespace neighborhood

struct HeuristicConfig {
  std::uint64_t seed = 0;
  int iteration_budget = 1000;  // max accepted moves per improvement run
  unsigned neighborhoods = neighborhood::kAll;
  int restarts = 1;
  int threads = 1;
};

struct ConstructionResult {
  bool ok = false;
  Solution solution;
  std::string failure;  // set when !ok, e.g. no feasible insertion left
};

// Cheapest-insertion construction: repeatedly inserts the unassigned task
// with the fewest qualified nurses at its cheapest feasible position; the
// insertion cost includes any endpoint legs the task's flags flip. seed 0
// keeps the canonical order, other seeds perturb tie order for restarts.
ConstructionResult construct_greedy(const Instance& instance, Mode mode,
                                    std::uint64_t seed);

// Best-improvement local search over the enabled neighborhoods. Every
// accepted move re-propagates schedules and recomputes both affected
// routes' endpoints, so intermediate solutions stay valid. Deterministic;
// never returns a worse solution than `start` (which must validate).
Solution improve_local_search(const Instance& instance, Mode mode,
                              const Solution& start,
                              const HeuristicConfig& config);

// construct + improve across config.restarts derived seeds (optionally in
// parallel); returns the best by (objective, tie-break key), which does
// not depend on the thread count.
ConstructionResult solve_heuristic(const Instance& instance, Mode mode,
                                   const HeuristicConfig& config);

}  // namespace hhcflex
