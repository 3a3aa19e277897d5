#include "hhcflex/solution.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hhcflex {

namespace {

void check_patient(const Instance& instance, NodeId patient) {
  if (patient < 1 || patient > instance.num_patients)
    throw std::invalid_argument("patient index " + std::to_string(patient) +
                                " out of range");
}

}  // namespace

double route_cost(const Instance& instance, const Route& route) {
  if (route.visits.empty()) return 0.0;
  double cost = 0.0;
  NodeId at = instance.endpoint_node(route.start);
  for (const Visit& v : route.visits) {
    check_patient(instance, v.patient);
    cost += instance.travel(at, v.patient);
    at = v.patient;
  }
  cost += instance.travel(at, instance.endpoint_node(route.end));
  return cost;
}

double objective(const Instance& instance, const Solution& solution) {
  double total = 0.0;
  for (const Route& r : solution.routes) total += route_cost(instance, r);
  return total;
}

std::vector<int> tie_break_key(const Instance& instance,
                               const Solution& solution) {
  // Map (patient, service) to the expand_tasks index.
  std::unordered_map<int, int> id;
  int next = 0;
  for (int i = 0; i < instance.num_patients; ++i)
    for (int s = 0; s < instance.num_services; ++s)
      if (instance.demand[i][s] == 1) id[(i + 1) * instance.num_services + s] = next++;

  std::vector<int> key;
  for (const Route& r : solution.routes) {
    for (const Visit& v : r.visits) {
      auto it = id.find(v.patient * instance.num_services + v.service);
      key.push_back(it == id.end() ? -2 : it->second);
    }
    key.push_back(-1);  // route separator; sorts before any task id
  }
  return key;
}

}  // namespace hhcflex
