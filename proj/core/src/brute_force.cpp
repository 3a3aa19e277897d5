#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hhcflex/exact.hpp"

namespace hhcflex {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

constexpr double kTieEps = 1e-9;

// Everything below is deliberately self-contained (no shared scheduling
// or endpoint helpers): this solver is the oracle the others are checked
// against.
struct Enumerator {
  const Instance& inst;
  Mode mode;
  bool strict;
  std::vector<Task> tasks;
  int T = 0;
  int V = 0;

  std::vector<int> nurse_of;                // task -> nurse
  std::vector<std::vector<int>> order;      // per-nurse task ids
  std::uint64_t evaluated = 0;

  bool have_best = false;
  double best_obj = std::numeric_limits<double>::infinity();
  Solution best_sol;
  std::vector<int> best_key;

  struct RoutePlan {
    Endpoint start = Endpoint::Depot;
    Endpoint end = Endpoint::Depot;
    double cost = 0.0;
    std::vector<double> start_times;
  };

  // Earliest-feasible schedule of one visit order from a fixed origin,
  // leaving at time 0: wait when early, fail when past the window.
  bool schedule(const std::vector<int>& seq, Endpoint origin,
                std::vector<double>& times, double& cost) const {
    times.clear();
    double clock = 0.0;
    NodeId at = origin == Endpoint::Depot ? 0 : inst.num_patients + 1;
    cost = 0.0;
    for (int t : seq) {
      const Task& task = tasks[t];
      cost += inst.travel_time[at][task.patient];
      double start = clock + inst.travel_time[at][task.patient];
      if (start < task.window_lo) start = task.window_lo;
      if (start > task.window_hi) return false;
      times.push_back(start);
      clock = start + task.duration;
      at = task.patient;
    }
    return true;
  }

  // Minimum-cost admissible endpoint pair for one route, trying all four
  // combinations and keeping those consistent with the mode's rules.
  bool plan_route(const std::vector<int>& seq, RoutePlan& plan) const {
    if (seq.empty()) {
      plan = RoutePlan{};  // empty routes stay depot-to-depot at cost 0
      return true;
    }
    bool sflag = false, eflag = false;
    for (int t : seq) {
      if (inst.start_req[tasks[t].service] == 1) sflag = true;
      if (inst.end_req[tasks[t].service] == 1) eflag = true;
    }
    bool found = false;
    for (Endpoint s : {Endpoint::Depot, Endpoint::Lab}) {
      for (Endpoint e : {Endpoint::Depot, Endpoint::Lab}) {
        if (mode == Mode::Classic) {
          if (s != Endpoint::Depot || e != Endpoint::Depot) continue;
        } else {
          if ((s == Endpoint::Lab) != sflag) continue;
          if ((e == Endpoint::Lab) != eflag) continue;
        }
        std::vector<double> times;
        double cost = 0.0;
        if (!schedule(seq, s, times, cost)) continue;
        const Task& last = tasks[seq.back()];
        cost += inst.travel_time[last.patient]
                                [e == Endpoint::Depot ? 0
                                                      : inst.num_patients + 1];
        if (!found || cost < plan.cost) {
          plan.start = s;
          plan.end = e;
          plan.cost = cost;
          plan.start_times = std::move(times);
          found = true;
        }
      }
    }
    return found;
  }

  void evaluate() {
    ++evaluated;
    double total = 0.0;
    std::vector<RoutePlan> plans(V);
    for (int k = 0; k < V; ++k) {
      if (!plan_route(order[k], plans[k])) return;
      total += plans[k].cost;
    }
    if (have_best && total > best_obj + kTieEps) return;

    Solution sol;
    sol.routes.resize(V);
    for (int k = 0; k < V; ++k) {
      Route& r = sol.routes[k];
      r.nurse = k;
      r.start = plans[k].start;
      r.end = plans[k].end;
      for (std::size_t i = 0; i < order[k].size(); ++i) {
        const Task& t = tasks[order[k][i]];
        r.visits.push_back(Visit{t.patient, t.service,
                                 plans[k].start_times[i]});
      }
    }
    sol.objective = total;
    std::vector<int> key = tie_break_key(inst, sol);
    if (!have_best || total < best_obj - kTieEps ||
        (std::abs(total - best_obj) <= kTieEps && key < best_key)) {
      have_best = true;
      best_obj = total;
      best_sol = std::move(sol);
      best_key = std::move(key);
    }
  }

  void permute_from(int nurse) {
    if (nurse == V) {
      evaluate();
      return;
    }
    auto& seq = order[nurse];
    std::sort(seq.begin(), seq.end());
    do {
      permute_from(nurse + 1);
    } while (std::next_permutation(seq.begin(), seq.end()));
  }

  void run() {
    std::vector<int> assign(T, 0);
    while (true) {
      bool qualified = true;
      for (int t = 0; t < T && qualified; ++t)
        qualified = inst.qualification[assign[t]][tasks[t].service] == 1;
      if (qualified) {
        for (auto& o : order) o.clear();
        for (int t = 0; t < T; ++t) order[assign[t]].push_back(t);
        bool ok = true;
        if (strict)
          for (int k = 0; k < V; ++k) ok = ok && !order[k].empty();
        if (ok) permute_from(0);
      }
      // next assignment in base V
      int pos = 0;
      while (pos < T && ++assign[pos] == V) assign[pos++] = 0;
      if (pos == T) break;
    }
  }
};

}  // namespace

SolveOutcome solve_bruteforce(const Instance& instance, Mode mode,
                              const ExactOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  instance.require_valid();
  Enumerator en{instance, mode, options.strict_all_nurses};
  en.tasks = expand_tasks(instance);
  en.T = static_cast<int>(en.tasks.size());
  en.V = instance.num_nurses;
  if (en.T > 8 || en.V > 3)
    throw std::invalid_argument(
        "solve_bruteforce is guarded to <= 8 tasks and <= 3 nurses (got " +
        std::to_string(en.T) + " tasks, " + std::to_string(en.V) +
        " nurses)");
  en.order.resize(en.V);
  en.run();

  SolveOutcome out;
  out.nodes_explored = en.evaluated;
  out.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (en.have_best) {
    out.status = SolveStatus::Optimal;
    out.solution = std::move(en.best_sol);
    out.bound = en.best_obj;
  } else {
    out.status = SolveStatus::Infeasible;
    out.bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace hhcflex
