#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "hhcflex/instance.hpp"
#include "hhcflex/solution.hpp"

namespace hhcflex {

struct SearchLimits {
  double time_limit_s = std::numeric_limits<double>::infinity();
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  // Warm start; must validate in the solved mode.
  std::optional<Solution> incumbent;
};

enum class SolveStatus { Optimal, Feasible, Infeasible };
const char* to_string(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Solution> solution;
  double bound = 0.0;  // lower bound on any valid objective
  std::uint64_t nodes_explored = 0;
  double wall_time_s = 0.0;
};

struct ExactOptions {
  bool strict_all_nurses = false;
  int threads = 1;  // >1 explores top-level branches in parallel
  // Debug switches; disabling must not change optimal objectives.
  bool prune_endpoints = true;
  bool prune_bound = true;
  // Observes every incumbent improvement (objective values are
  // non-increasing over one search).
  std::function<void(double)> on_incumbent;
};

// Exhaustive oracle: every task-to-nurse assignment, every visit order,
// both endpoint options per route, schedules forward-propagated
// independently of the other solvers. Guarded to <= 8 tasks and <= 3
// nurses; larger inputs throw std::invalid_argument.
SolveOutcome solve_bruteforce(const Instance& instance, Mode mode,
                              const ExactOptions& options = {});

// Depth-first branch-and-bound over per-nurse task sequences: routes are
// built nurse by nurse, branching on the task appended next; pruning by
// window propagation (both origin variants until the start place is
// forced), qualification, and an admissible committed-legs +
// cheapest-incoming-leg bound. Hitting a limit downgrades the status to
// Feasible with the best incumbent.
SolveOutcome solve_bnb(const Instance& instance, Mode mode,
                       const SearchLimits& limits = {},
                       const ExactOptions& options = {});

}  // namespace hhcflex
