#include "hhcflex/validate.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace hhcflex {

namespace {

constexpr double kTimeEps = 1e-9;
constexpr double kObjEps = 1e-9;

std::string visit_str(const Visit& v) {
  std::ostringstream os;
  os << "(patient " << v.patient << ", service " << v.service + 1 << ")";
  return os.str();
}

}  // namespace

const char* to_string(ConstraintTag tag) {
  switch (tag) {
    case ConstraintTag::C2: return "C2";
    case ConstraintTag::C3: return "C3";
    case ConstraintTag::C4: return "C4";
    case ConstraintTag::C5: return "C5";
    case ConstraintTag::C6: return "C6";
    case ConstraintTag::C7: return "C7";
    case ConstraintTag::C8: return "C8";
    case ConstraintTag::C9: return "C9";
    case ConstraintTag::C10: return "C10";
    case ConstraintTag::C11: return "C11";
    case ConstraintTag::C12: return "C12";
    case ConstraintTag::C13: return "C13";
    case ConstraintTag::C14: return "C14";
    case ConstraintTag::C15: return "C15";
    case ConstraintTag::C16: return "C16";
    case ConstraintTag::OBJ: return "OBJ";
    case ConstraintTag::PARTITION: return "PARTITION";
    case ConstraintTag::QUAL: return "QUAL";
  }
  return "?";
}

bool ValidationReport::has_tag(ConstraintTag tag) const {
  for (const auto& v : violations)
    if (v.tag == tag) return true;
  return false;
}

ValidationReport validate(const Instance& instance, const Solution& solution,
                          Mode mode) {
  ValidationReport report;
  auto add = [&](ConstraintTag tag, const std::string& detail, int nurse = -1,
                 int task = -1) {
    report.violations.push_back(Violation{tag, detail, nurse, task});
  };

  const int n = instance.num_patients;
  const int S = instance.num_services;
  const int V = instance.num_nurses;

  // Task ids in expand_tasks order, for violation records.
  std::map<std::pair<int, int>, int> task_id;  // (patient, service) -> id
  {
    int next = 0;
    for (int i = 1; i <= n; ++i)
      for (int s = 0; s < S; ++s)
        if (instance.demand[i - 1][s] == 1) task_id[{i, s}] = next++;
  }

  if (static_cast<int>(solution.routes.size()) != V) {
    add(ConstraintTag::QUAL,
        "solution has " + std::to_string(solution.routes.size()) +
            " routes for " + std::to_string(V) + " nurses");
  }

  // Reference checks first; later passes skip what cannot be resolved.
  std::vector<std::vector<bool>> visit_ok(solution.routes.size());
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    const Route& route = solution.routes[r];
    if (route.nurse != static_cast<int>(r) || route.nurse >= V) {
      add(ConstraintTag::QUAL,
          "route " + std::to_string(r) + " is labeled nurse " +
              std::to_string(route.nurse + 1),
          static_cast<int>(r));
    }
    visit_ok[r].resize(route.visits.size(), true);
    for (std::size_t i = 0; i < route.visits.size(); ++i) {
      const Visit& v = route.visits[i];
      if (v.patient < 1 || v.patient > n || v.service < 0 || v.service >= S) {
        add(ConstraintTag::QUAL,
            "visit " + std::to_string(i) + " of nurse " +
                std::to_string(r + 1) + " references unknown " + visit_str(v),
            static_cast<int>(r));
        visit_ok[r][i] = false;
      }
    }
  }

  // Task partition: every demanded (patient, service) served exactly once.
  std::map<std::pair<int, int>, int> served;
  bool partition_broken = false;
  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    const Route& route = solution.routes[r];
    std::map<std::pair<int, int>, int> in_route;
    for (std::size_t i = 0; i < route.visits.size(); ++i) {
      if (!visit_ok[r][i]) continue;
      const Visit& v = route.visits[i];
      ++served[{v.patient, v.service}];
      if (++in_route[{v.patient, v.service}] == 2) {
        // The chain re-enters a node whose flow must be a single unit.
        add(ConstraintTag::C12,
            "nurse " + std::to_string(r + 1) + " visits " + visit_str(v) +
                " more than once in one route",
            static_cast<int>(r), task_id.count({v.patient, v.service})
                                     ? task_id[{v.patient, v.service}]
                                     : -1);
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int s = 0; s < S; ++s) {
      const int want = instance.demand[i - 1][s];
      const auto it = served.find({i, s});
      const int got = it == served.end() ? 0 : it->second;
      if (got == want || (want == 0 && got == 0)) continue;
      partition_broken = true;
      std::ostringstream os;
      if (want == 1 && got == 0)
        os << "demanded (patient " << i << ", service " << s + 1
           << ") is not served";
      else if (want == 1)
        os << "demanded (patient " << i << ", service " << s + 1
           << ") is served " << got << " times";
      else
        os << "(patient " << i << ", service " << s + 1
           << ") is served but not demanded";
      add(ConstraintTag::C15, os.str(), -1,
          task_id.count({i, s}) ? task_id[{i, s}] : -1);
    }
  }
  if (partition_broken)
    add(ConstraintTag::PARTITION, "task partition broken (see C15 entries)");

  for (std::size_t r = 0; r < solution.routes.size(); ++r) {
    const Route& route = solution.routes[r];
    const int nurse = static_cast<int>(r);
    if (nurse >= V) continue;

    // Qualification (permission reading: a visit needs a qualified nurse).
    for (std::size_t i = 0; i < route.visits.size(); ++i) {
      if (!visit_ok[r][i]) continue;
      const Visit& v = route.visits[i];
      if (instance.qualification[nurse][v.service] != 1) {
        add(ConstraintTag::C16,
            "nurse " + std::to_string(nurse + 1) + " lacks service " +
                std::to_string(v.service + 1) + " for " + visit_str(v),
            nurse,
            task_id.count({v.patient, v.service})
                ? task_id[{v.patient, v.service}]
                : -1);
      }
    }

    // Start/end places. The recorded endpoints play the role of the
    // delta indicators; a mismatch breaks the indicator row and the
    // departure/return pair responsible for the required place.
    std::vector<int> services;
    for (std::size_t i = 0; i < route.visits.size(); ++i)
      if (visit_ok[r][i]) services.push_back(route.visits[i].service);
    const EndpointPair required = route_endpoints(services, instance, mode);

    if (route.start != required.start) {
      const std::string where(to_string(required.start));
      const std::string got(to_string(route.start));
      const std::string detail = "nurse " + std::to_string(nurse + 1) +
                                 " must start at the " + where +
                                 " but starts at the " + got;
      if (mode == Mode::Flexible)
        add(ConstraintTag::C2, detail, nurse);
      if (required.start == Endpoint::Depot) {
        add(ConstraintTag::C3, detail, nurse);
        add(ConstraintTag::C4, detail, nurse);
      } else {
        add(ConstraintTag::C5, detail, nurse);
        add(ConstraintTag::C6, detail, nurse);
      }
    }
    if (route.end != required.end) {
      const std::string where(to_string(required.end));
      const std::string got(to_string(route.end));
      const std::string detail = "nurse " + std::to_string(nurse + 1) +
                                 " must end at the " + where +
                                 " but ends at the " + got;
      if (mode == Mode::Flexible)
        add(ConstraintTag::C7, detail, nurse);
      if (required.end == Endpoint::Depot) {
        add(ConstraintTag::C8, detail, nurse);
        add(ConstraintTag::C9, detail, nurse);
      } else {
        add(ConstraintTag::C10, detail, nurse);
        add(ConstraintTag::C11, detail, nurse);
      }
    }

    // Temporal chaining and windows over the recorded start times.
    double ready = 0.0;  // earliest possible service start at `at`
    NodeId at = instance.endpoint_node(route.start);
    bool chain_intact = true;
    for (std::size_t i = 0; i < route.visits.size(); ++i) {
      if (!visit_ok[r][i]) { chain_intact = false; continue; }
      const Visit& v = route.visits[i];
      if (chain_intact) {
        const double reach = ready + instance.travel(at, v.patient);
        if (v.start_time < reach - kTimeEps) {
          std::ostringstream os;
          os << "nurse " << nurse + 1 << " starts " << visit_str(v) << " at "
             << v.start_time << " but cannot arrive before " << reach;
          add(ConstraintTag::C13, os.str(), nurse,
              task_id.count({v.patient, v.service})
                  ? task_id[{v.patient, v.service}]
                  : -1);
        }
      }
      const double lo = instance.window_lo[v.patient - 1];
      const double hi = instance.window_hi[v.patient - 1];
      if (v.start_time < lo - kTimeEps || v.start_time > hi + kTimeEps) {
        std::ostringstream os;
        os << "nurse " << nurse + 1 << " starts " << visit_str(v) << " at "
           << v.start_time << " outside window [" << lo << ", " << hi << "]";
        add(ConstraintTag::C14, os.str(), nurse,
            task_id.count({v.patient, v.service})
                ? task_id[{v.patient, v.service}]
                : -1);
      }
      ready = v.start_time + instance.service_duration[v.patient - 1][v.service];
      at = v.patient;
      chain_intact = true;
    }
  }

  // Objective consistency, only when every reference resolved.
  bool all_ok = true;
  for (const auto& flags : visit_ok)
    for (bool b : flags) all_ok = all_ok && b;
  if (all_ok) {
    double recomputed = 0.0;
    for (const Route& route : solution.routes)
      recomputed += route_cost(instance, route);
    if (std::abs(recomputed - solution.objective) > kObjEps) {
      std::ostringstream os;
      os << "stored objective " << solution.objective
         << " differs from recomputed " << recomputed;
      add(ConstraintTag::OBJ, os.str());
    }
  }

  report.ok = report.violations.empty();
  return report;
}

}  // namespace hhcflex
