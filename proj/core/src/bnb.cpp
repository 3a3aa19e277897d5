#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hhcflex/exact.hpp"
#include "hhcflex/schedule.hpp"
#include "hhcflex/validate.hpp"

namespace hhcflex {

namespace {

constexpr double kTieEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct TaskData {
  NodeId patient;
  int service;
  double dur, lo, hi;
  bool sflag, eflag;
};

struct Shared {
  const Instance& inst;
  Mode mode;
  ExactOptions opts;
  SearchLimits limits;

  std::vector<Task> tasks;
  std::vector<TaskData> td;
  int T = 0;
  int V = 0;
  std::vector<std::vector<char>> qual;       // nurse x task
  std::vector<std::vector<int>> qual_suffix; // task -> per nurse-index suffix count
  std::vector<double> static_in;             // admissible incoming-leg bound
  std::vector<int> task_order;               // most-constrained first
  double root_lb = 0.0;

  std::chrono::steady_clock::time_point t0;
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;

  std::mutex mu;
  std::atomic<double> best_obj{kInf};
  bool have_best = false;
  Solution best_sol;
  std::vector<int> best_key;
  std::atomic<bool> stop{false};
  std::atomic<bool> truncated{false};
  std::atomic<std::uint64_t> nodes{0};

  explicit Shared(const Instance& i) : inst(i) {}

  void offer(const Solution& sol, double obj) {
    std::vector<int> key = tie_break_key(inst, sol);
    std::lock_guard<std::mutex> lock(mu);
    const bool better = !have_best || obj < best_obj.load() - kTieEps;
    const bool tie = have_best &&
                     std::abs(obj - best_obj.load()) <= kTieEps &&
                     key < best_key;
    if (!better && !tie) return;
    if (better && opts.on_incumbent) opts.on_incumbent(obj);
    have_best = true;
    best_sol = sol;
    best_key = std::move(key);
    best_obj.store(obj);
  }
};

struct Variant {
  bool alive = true;
  double clock = 0.0;  // departure time after the last service
  double cost = 0.0;   // origin leg + internal legs committed so far
};

struct Worker {
  Shared* sh = nullptr;

  std::vector<char> assigned;
  int unassigned_count = 0;
  double static_in_sum = 0.0;
  std::vector<int> sflag_qual;  // per nurse: unassigned lab-start tasks it holds
  std::vector<std::vector<int>> seqs;
  std::vector<EndpointPair> closed_eps;
  double closed_cost = 0.0;
  int cur = 0;
  Variant dep, lab;
  bool sflag = false, eflag = false;
  std::uint64_t local_nodes = 0;
  std::uint64_t reported_nodes = 0;

  void init(Shared& s) {
    sh = &s;
    assigned.assign(s.T, 0);
    unassigned_count = s.T;
    static_in_sum = 0.0;
    for (double v : s.static_in) static_in_sum += v;
    sflag_qual.assign(s.V, 0);
    for (int t = 0; t < s.T; ++t)
      if (s.td[t].sflag)
        for (int k = 0; k < s.V; ++k)
          if (s.qual[k][t]) ++sflag_qual[k];
    seqs.assign(s.V, {});
    closed_eps.assign(s.V, EndpointPair{});
  }

  NodeId variant_at(bool is_lab) const {
    const auto& seq = seqs[cur];
    if (!seq.empty()) return sh->td[seq.back()].patient;
    return is_lab ? sh->inst.num_patients + 1 : 0;
  }

  bool depot_viable() const {
    if (!dep.alive) return false;
    if (!sh->opts.prune_endpoints) return true;
    return sh->mode == Mode::Classic || !sflag;
  }
  bool lab_viable() const {
    if (sh->mode == Mode::Classic) return false;
    if (!lab.alive) return false;
    if (!sh->opts.prune_endpoints) return true;
    return sflag || sflag_qual[cur] > 0;
  }

  double committed_min() const {
    double m = kInf;
    if (depot_viable()) m = std::min(m, dep.cost);
    if (lab_viable()) m = std::min(m, lab.cost);
    return m;
  }

  void flush_nodes() {
    sh->nodes.fetch_add(local_nodes - reported_nodes,
                        std::memory_order_relaxed);
    reported_nodes = local_nodes;
  }

  bool check_limits() {
    if ((local_nodes & 0x3FFu) == 0u) {
      flush_nodes();
      if (sh->has_deadline &&
          std::chrono::steady_clock::now() > sh->deadline) {
        sh->truncated.store(true);
        sh->stop.store(true);
      }
    }
    const std::uint64_t seen =
        sh->opts.threads > 1 ? sh->nodes.load(std::memory_order_relaxed)
                             : local_nodes;
    if (seen >= sh->limits.node_limit) {
      sh->truncated.store(true);
      sh->stop.store(true);
    }
    return !sh->stop.load(std::memory_order_relaxed);
  }

  void append(int t, Variant& v, bool is_lab) const {
    if (!v.alive) return;
    const TaskData& task = sh->td[t];
    const double leg = sh->inst.travel_time[variant_at(is_lab)][task.patient];
    double start = v.clock + leg;
    if (start < task.lo) start = task.lo;
    if (start > task.hi) {
      v.alive = false;
      return;
    }
    v.clock = start + task.dur;
    v.cost += leg;
  }

  void dfs() {
    ++local_nodes;
    if (!check_limits()) return;

    const double committed = committed_min();
    if (committed == kInf) return;  // no origin variant can complete this route
    if (sh->opts.prune_bound && sh->have_best) {
      const double lb = closed_cost + committed + static_in_sum;
      if (lb > sh->best_obj.load(std::memory_order_relaxed) + kTieEps) return;
    }

    // Extend the open route, most-constrained task first.
    for (int t : sh->task_order) {
      if (assigned[t] || !sh->qual[cur][t]) continue;
      const Variant dep0 = dep, lab0 = lab;
      const bool sflag0 = sflag, eflag0 = eflag;
      append(t, dep, false);
      if (sh->mode == Mode::Flexible) append(t, lab, true);
      sflag = sflag || sh->td[t].sflag;
      eflag = eflag || sh->td[t].eflag;
      if (depot_viable() || lab_viable()) {
        assigned[t] = 1;
        --unassigned_count;
        static_in_sum -= sh->static_in[t];
        if (sh->td[t].sflag)
          for (int k = 0; k < sh->V; ++k)
            if (sh->qual[k][t]) --sflag_qual[k];
        seqs[cur].push_back(t);

        dfs();

        seqs[cur].pop_back();
        if (sh->td[t].sflag)
          for (int k = 0; k < sh->V; ++k)
            if (sh->qual[k][t]) ++sflag_qual[k];
        static_in_sum += sh->static_in[t];
        ++unassigned_count;
        assigned[t] = 0;
      }
      dep = dep0;
      lab = lab0;
      sflag = sflag0;
      eflag = eflag0;
      if (sh->stop.load(std::memory_order_relaxed)) return;
    }

    try_close();
  }

  void try_close() {
    const auto& seq = seqs[cur];
    if (sh->opts.strict_all_nurses && seq.empty()) return;

    EndpointPair eps;
    double close_cost = 0.0;
    if (!seq.empty()) {
      const bool use_lab = sh->mode == Mode::Flexible && sflag;
      const Variant& definitive = use_lab ? lab : dep;
      if (!definitive.alive) return;
      eps.start = use_lab ? Endpoint::Lab : Endpoint::Depot;
      eps.end = (sh->mode == Mode::Flexible && eflag) ? Endpoint::Lab
                                                      : Endpoint::Depot;
      const NodeId last = sh->td[seq.back()].patient;
      close_cost = definitive.cost +
                   sh->inst.travel_time[last][sh->inst.endpoint_node(eps.end)];
    }

    if (unassigned_count > 0) {
      if (cur == sh->V - 1) return;
      // Every leftover task still needs a qualified nurse downstream.
      for (int t = 0; t < sh->T; ++t)
        if (!assigned[t] && sh->qual_suffix[t][cur + 1] == 0) return;
    }

    if (cur == sh->V - 1) {
      // Incremental totals can drift from the exact leg sum in the last
      // bits, so pre-filter with slack and re-sum exactly in emit.
      const double approx_total = closed_cost + close_cost;
      if (sh->have_best &&
          approx_total >
              sh->best_obj.load(std::memory_order_relaxed) + 1e-6)
        return;
      closed_eps[cur] = eps;
      emit_candidate();
      return;
    }

    closed_eps[cur] = eps;
    closed_cost += close_cost;
    const Variant dep0 = dep, lab0 = lab;
    const bool sflag0 = sflag, eflag0 = eflag;
    ++cur;
    dep = Variant{};
    lab = Variant{};
    sflag = eflag = false;

    dfs();

    --cur;
    dep = dep0;
    lab = lab0;
    sflag = sflag0;
    eflag = eflag0;
    closed_cost -= close_cost;
  }

  void emit_candidate() {
    Solution sol;
    sol.routes.resize(sh->V);
    double total = 0.0;
    for (int k = 0; k < sh->V; ++k) {
      Route& r = sol.routes[k];
      r.nurse = k;
      r.start = seqs[k].empty() ? Endpoint::Depot : closed_eps[k].start;
      r.end = seqs[k].empty() ? Endpoint::Depot : closed_eps[k].end;
      Propagated p =
          propagate_earliest(sh->inst, sh->tasks, seqs[k], r.start);
      if (!p.feasible) return;  // cannot happen for alive variants
      for (std::size_t i = 0; i < seqs[k].size(); ++i) {
        const Task& t = sh->tasks[seqs[k][i]];
        r.visits.push_back(Visit{t.patient, t.service, p.start_times[i]});
      }
      total += route_cost(sh->inst, r);
    }
    sol.objective = total;
    sh->offer(sol, total);
  }
};

double compute_static_in(const Shared& sh, int t) {
  const Instance& inst = sh.inst;
  const NodeId p = sh.td[t].patient;
  double m = std::min(inst.travel_time[0][p],
                      inst.travel_time[inst.num_patients + 1][p]);
  for (int u = 0; u < sh.T; ++u) {
    if (u == t) continue;
    m = std::min(m, inst.travel_time[sh.td[u].patient][p]);
  }
  return m;
}

}  // namespace

SolveOutcome solve_bnb(const Instance& instance, Mode mode,
                       const SearchLimits& limits,
                       const ExactOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  instance.require_valid();

  Shared sh(instance);
  sh.mode = mode;
  sh.opts = options;
  sh.limits = limits;
  sh.t0 = t0;
  if (std::isfinite(limits.time_limit_s)) {
    sh.has_deadline = true;
    sh.deadline = t0 + std::chrono::duration_cast<
                           std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(limits.time_limit_s));
  }

  sh.tasks = expand_tasks(instance);
  sh.T = static_cast<int>(sh.tasks.size());
  sh.V = instance.num_nurses;
  sh.td.reserve(sh.T);
  for (const Task& t : sh.tasks)
    sh.td.push_back(TaskData{t.patient, t.service, t.duration, t.window_lo,
                             t.window_hi,
                             instance.start_req[t.service] == 1,
                             instance.end_req[t.service] == 1});
  sh.qual.assign(sh.V, std::vector<char>(sh.T, 0));
  for (int k = 0; k < sh.V; ++k)
    for (int t = 0; t < sh.T; ++t)
      sh.qual[k][t] =
          instance.qualification[k][sh.td[t].service] == 1 ? 1 : 0;
  sh.qual_suffix.assign(sh.T, std::vector<int>(sh.V + 1, 0));
  for (int t = 0; t < sh.T; ++t)
    for (int k = sh.V - 1; k >= 0; --k)
      sh.qual_suffix[t][k] = sh.qual_suffix[t][k + 1] + (sh.qual[k][t] ? 1 : 0);

  sh.static_in.resize(sh.T);
  for (int t = 0; t < sh.T; ++t) sh.static_in[t] = compute_static_in(sh, t);
  sh.root_lb = 0.0;
  for (double v : sh.static_in) sh.root_lb += v;

  // Branch order: fewest qualified nurses, then earliest deadline.
  sh.task_order.resize(sh.T);
  for (int t = 0; t < sh.T; ++t) sh.task_order[t] = t;
  std::vector<int> qcount(sh.T, 0);
  for (int t = 0; t < sh.T; ++t) qcount[t] = sh.qual_suffix[t][0];
  std::sort(sh.task_order.begin(), sh.task_order.end(), [&](int a, int b) {
    if (qcount[a] != qcount[b]) return qcount[a] < qcount[b];
    if (sh.td[a].hi != sh.td[b].hi) return sh.td[a].hi < sh.td[b].hi;
    return a < b;
  });

  if (limits.incumbent) {
    const ValidationReport rep = validate(instance, *limits.incumbent, mode);
    if (!rep.ok)
      throw std::invalid_argument(
          "warm-start incumbent does not validate in this mode");
    const double obj = objective(instance, *limits.incumbent);
    sh.offer(*limits.incumbent, obj);
  }

  Worker base;
  base.init(sh);

  const int threads = std::max(1, options.threads);
  if (threads == 1 || sh.T == 0) {
    base.dfs();
    base.flush_nodes();
  } else {
    // Split the root: each first move (task onto nurse 0, or close the
    // empty route) becomes an independent subtree.
    struct Move { int task; };  // task == -1 means close
    std::vector<Move> moves;
    for (int t : sh.task_order)
      if (sh.qual[0][t]) moves.push_back({t});
    moves.push_back({-1});

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= moves.size() || sh.stop.load()) break;
        Worker w = base;
        ++w.local_nodes;  // the root
        if (moves[i].task < 0) {
          w.try_close();
        } else {
          const int t = moves[i].task;
          w.append(t, w.dep, false);
          if (sh.mode == Mode::Flexible) w.append(t, w.lab, true);
          w.sflag = sh.td[t].sflag;
          w.eflag = sh.td[t].eflag;
          if (w.depot_viable() || w.lab_viable()) {
            w.assigned[t] = 1;
            --w.unassigned_count;
            w.static_in_sum -= sh.static_in[t];
            if (sh.td[t].sflag)
              for (int k = 0; k < sh.V; ++k)
                if (sh.qual[k][t]) --w.sflag_qual[k];
            w.seqs[0].push_back(t);
            w.dfs();
          }
        }
        w.flush_nodes();
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  SolveOutcome out;
  out.nodes_explored = sh.nodes.load();
  out.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool truncated = sh.truncated.load();
  if (!truncated) {
    if (sh.have_best) {
      out.status = SolveStatus::Optimal;
      out.solution = sh.best_sol;
      out.bound = sh.best_obj.load();
    } else {
      out.status = SolveStatus::Infeasible;
      out.bound = kInf;
    }
  } else {
    out.status = SolveStatus::Feasible;
    if (sh.have_best) out.solution = sh.best_sol;
    out.bound = sh.root_lb;
  }
  return out;
}

}  // namespace hhcflex
