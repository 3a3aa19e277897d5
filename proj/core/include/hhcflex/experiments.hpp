#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhcflex/exact.hpp"
#include "hhcflex/heuristic.hpp"
#include "hhcflex/instance.hpp"
#include "hhcflex/solution.hpp"

namespace hhcflex {

enum class SolverKind { Exact, Heuristic, BruteForce };
const char* to_string(SolverKind kind);

struct SolveSettings {
  SolverKind solver = SolverKind::Exact;
  SearchLimits limits;
  ExactOptions exact;
  HeuristicConfig heuristic;
  // Seed the exact search with a heuristic incumbent.
  bool warm_start = true;
};

struct ModeRun {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Solution> solution;
  double objective = 0.0;  // meaningful when solution is present
  double wall_s = 0.0;
  std::uint64_t nodes = 0;
};

ModeRun run_solver(const Instance& instance, Mode mode,
                   const SolveSettings& settings);

// Classic vs flexible on the same instance, plus the nurses whose patient
// sets differ between the two plans.
struct CompareReport {
  ModeRun classic;
  ModeRun flexible;
  std::vector<int> changed_nurses;
};

CompareReport run_compare(const Instance& instance,
                          const SolveSettings& settings);

// Endpoint-requirement sweep: per variant the target service's flags are
// overwritten (none -> 0/0, start_lab -> 1/0, end_lab -> 0/1), the
// instance re-solved, and the nurses whose endpoints moved relative to
// the `none` baseline recorded.
enum class FeatureVariant { None, StartLab, EndLab };
const char* to_string(FeatureVariant variant);
FeatureVariant feature_variant_from_string(const std::string& text);

struct SweepSpec {
  int target_service = 0;
  std::vector<FeatureVariant> variants;
};

struct SweepRow {
  int experiment = 0;  // 1-based, in spec order
  FeatureVariant variant = FeatureVariant::None;
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Solution> solution;
  double objective = 0.0;
  double wall_s = 0.0;
  std::vector<int> changed_endpoint_nurses;
};

Instance apply_variant(const Instance& instance, int target_service,
                       FeatureVariant variant);

// Rows come back in spec order; an infeasible variant yields a row with
// no solution and the sweep continues. Mode is always Flexible.
std::vector<SweepRow> run_sweep(const Instance& instance,
                                const SweepSpec& spec,
                                const SolveSettings& settings);

// Machine-readable tables. Objectives use three decimals; the timing
// column is opt-in so that seeded runs stay byte-reproducible.
std::string compare_to_csv(const Instance& instance,
                           const CompareReport& report, bool include_timing);
std::string sweep_to_csv(const Instance& instance,
                         const std::vector<SweepRow>& rows,
                         bool include_timing);

// Human-readable arrow renderings for terminals.
std::string compare_to_text(const Instance& instance,
                            const CompareReport& report);
std::string sweep_to_text(const Instance& instance,
                          const std::vector<SweepRow>& rows);

}  // namespace hhcflex
