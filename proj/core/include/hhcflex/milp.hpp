#pragma once

#include <filesystem>
#include <vector>

#include "hhcflex/instance.hpp"
#include "hhcflex/linear_model.hpp"
#include "hhcflex/solution.hpp"

namespace hhcflex {

struct MilpOptions {
  // Drop the zero-cost depot->depot arc, forcing every nurse onto the road.
  bool strict_all_nurses = false;
};

struct BuiltModel {
  LinearModel model;
  VarMap varmap;
};

// Indicator linearization constant: 1 / ((n+2)^2 * S + 1), strictly below
// the reciprocal of any arc-count sum.
double milp_epsilon(const Instance& instance);
// Arc-count bound (n+2)^2 * S deactivating the start/end place rows.
double milp_count_bigm(const Instance& instance);
// Horizon bound max window_hi + max duration + max travel deactivating
// temporal chaining rows.
double milp_horizon_bigm(const Instance& instance);

// Builds the routing MILP over the task-expanded graph. Columns: arc
// binaries x[k,a,b] (origins D/L, task nodes, terminals D/L, plus an idle
// depot->depot arc per nurse), start indicators delta[k,1]/delta[k,2]
// (flexible mode), and window-bounded start times S[task,k]. Rows carry
// their constraint-family names (C2lo/C2up, C3..C13, C15, C16) plus the
// structural degree equalities RSD/RSL/RED/REL that pin each nurse to a
// single chain; window rows are folded into variable bounds. Classic mode
// replaces the place logic with depot-pinned CSTART/CEND equalities.
// Throws SchemaError when the instance fails its feasibility precheck.
BuiltModel build_milp(const Instance& instance, Mode mode,
                      const MilpOptions& options = {});

// Rebuilds routes from a (near-)integral assignment, one value per column:
// follows active arcs from each nurse's origin and attaches start times.
// Throws ExtractionError when a binary is fractional beyond 1e-6 and
// StructureError when active arcs do not form one chain per nurse.
Solution extract_solution(const Instance& instance, const VarMap& varmap,
                          const std::vector<double>& assignment);

// Reads "<variable-name> <value>" lines (tags or their LP-sanitized
// forms; '#' comments and blank lines ignored); unnamed columns default
// to zero. For round-tripping external solver output.
std::vector<double> read_assignment(const LinearModel& model,
                                    const VarMap& varmap,
                                    const std::filesystem::path& path);
std::vector<double> parse_assignment(const LinearModel& model,
                                     const VarMap& varmap,
                                     const std::string& text);

}  // namespace hhcflex
