#pragma once

#include <vector>

#include "hhcflex/instance.hpp"

namespace hhcflex {

struct Visit {
  NodeId patient = 0;
  int service = 0;
  double start_time = 0.0;

  bool operator==(const Visit&) const = default;
};

struct Route {
  int nurse = 0;
  Endpoint start = Endpoint::Depot;
  Endpoint end = Endpoint::Depot;
  std::vector<Visit> visits;

  bool empty() const { return visits.empty(); }
  bool operator==(const Route&) const = default;
};

struct Solution {
  std::vector<Route> routes;  // one per nurse, index == nurse
  double objective = 0.0;

  bool operator==(const Solution&) const = default;
};

// Total travel time of one route: start endpoint -> first patient,
// consecutive patient legs (zero between tasks of one patient), last
// patient -> end endpoint. Empty routes cost 0.
// Throws std::invalid_argument on out-of-range patient indices.
double route_cost(const Instance& instance, const Route& route);

// Sum of route_cost over all routes.
double objective(const Instance& instance, const Solution& solution);

// Deterministic tie-break key: per-nurse task-id sequences flattened with
// a -1 separator after each route. Exact solvers return the minimum-key
// solution among equal-objective optima.
std::vector<int> tie_break_key(const Instance& instance,
                               const Solution& solution);

}  // namespace hhcflex
