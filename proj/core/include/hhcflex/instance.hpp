#pragma once

#include <string>
#include <vector>

namespace hhcflex {

// Node indexing convention used throughout the library:
//   0        = depot (the company base)
//   1 .. n   = patients
//   n + 1    = laboratory
using NodeId = int;

enum class Endpoint { Depot, Lab };

// Flexible: route start/end chosen per the service flags carried by the
// route. Classic: every route is pinned depot-to-depot.
enum class Mode { Flexible, Classic };

const char* to_string(Endpoint e);
const char* to_string(Mode m);

// One (patient, service) demand unit; the atomic object routes visit.
// Two tasks of the same patient are distinct nodes with zero travel
// between them.
struct Task {
  NodeId patient = 0;  // 1..n
  int service = 0;     // 0..S-1
  double duration = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;

  bool operator==(const Task&) const = default;
};

// The full problem datum. Immutable after construction; safe to share
// across threads.
class Instance {
 public:
  std::string name;
  int num_patients = 0;  // n
  int num_nurses = 0;    // V
  int num_services = 0;  // S

  // (n+2) x (n+2) minutes; row/col 0 = depot, n+1 = laboratory.
  std::vector<std::vector<double>> travel_time;
  // n x S minutes; entry (i,s) is meaningful only when demand(i,s) = 1.
  std::vector<std::vector<double>> service_duration;
  // Per-patient service start window, minutes from day start.
  std::vector<double> window_lo;
  std::vector<double> window_hi;
  // V x S, 0/1: nurse k holds skill s.
  std::vector<std::vector<int>> qualification;
  // n x S, 0/1: patient i needs service s.
  std::vector<std::vector<int>> demand;
  // Length S, 0/1: service forces the route to start at / end at the lab.
  std::vector<int> start_req;
  std::vector<int> end_req;

  int num_nodes() const { return num_patients + 2; }
  NodeId depot() const { return 0; }
  NodeId lab() const { return num_patients + 1; }
  NodeId endpoint_node(Endpoint e) const {
    return e == Endpoint::Depot ? depot() : lab();
  }
  double travel(NodeId a, NodeId b) const { return travel_time[a][b]; }

  // Every violated invariant as a human-readable line; empty means valid.
  // Includes the feasibility precheck that each demanded service has at
  // least one qualified nurse.
  std::vector<std::string> check() const;

  // Throws SchemaError listing the first few problems when check() fails.
  void require_valid() const;

  bool operator==(const Instance&) const = default;
};

// One Task per demand(i,s) = 1 entry, ordered by (patient, service).
// Total on valid instances.
std::vector<Task> expand_tasks(const Instance& instance);

struct EndpointPair {
  Endpoint start = Endpoint::Depot;
  Endpoint end = Endpoint::Depot;

  bool operator==(const EndpointPair&) const = default;
};

// Where a route carrying exactly these services must start and end.
// start = Lab iff any service has start_req = 1, symmetrically for end;
// the empty set yields (Depot, Depot). Duplicate indices are allowed.
// Throws std::invalid_argument for an out-of-range service index.
EndpointPair endpoint_requirements(const std::vector<int>& services_in_route,
                                   const Instance& instance);

// Mode-aware variant: Classic pins (Depot, Depot) regardless of flags.
EndpointPair route_endpoints(const std::vector<int>& services_in_route,
                             const Instance& instance, Mode mode);

}  // namespace hhcflex
