#include "hhcflex/schedule.hpp"

namespace hhcflex {

Propagated propagate_earliest(const Instance& instance,
                              const std::vector<Task>& tasks,
                              std::span<const int> sequence, Endpoint origin) {
  Propagated out;
  out.start_times.reserve(sequence.size());
  double clock = 0.0;
  NodeId at = instance.endpoint_node(origin);
  for (int idx : sequence) {
    const Task& t = tasks[idx];
    const double arrive = clock + instance.travel(at, t.patient);
    const double start = arrive < t.window_lo ? t.window_lo : arrive;
    if (start > t.window_hi) return out;  // feasible stays false
    out.start_times.push_back(start);
    clock = start + t.duration;
    at = t.patient;
  }
  out.feasible = true;
  out.completion = clock;
  return out;
}

}  // namespace hhcflex
