#include "hhcflex/instance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hhcflex/errors.hpp"

namespace hhcflex {

const char* to_string(Endpoint e) {
  return e == Endpoint::Depot ? "depot" : "lab";
}

const char* to_string(Mode m) {
  return m == Mode::Flexible ? "flexible" : "classic";
}

namespace {

bool is_binary_matrix(const std::vector<std::vector<int>>& m) {
  for (const auto& row : m)
    for (int v : row)
      if (v != 0 && v != 1) return false;
  return true;
}

}  // namespace

std::vector<std::string> Instance::check() const {
  std::vector<std::string> problems;
  auto fail = [&](const std::string& msg) { problems.push_back(msg); };

  if (num_patients <= 0) fail("num_patients must be positive");
  if (num_nurses <= 0) fail("num_nurses must be positive");
  if (num_services <= 0) fail("num_services must be positive");
  if (!problems.empty()) return problems;

  const std::size_t n = static_cast<std::size_t>(num_patients);
  const std::size_t v = static_cast<std::size_t>(num_nurses);
  const std::size_t s = static_cast<std::size_t>(num_services);
  const std::size_t nodes = n + 2;

  if (travel_time.size() != nodes) {
    fail("travel_time must have " + std::to_string(nodes) + " rows");
  } else {
    for (std::size_t i = 0; i < nodes; ++i) {
      if (travel_time[i].size() != nodes) {
        fail("travel_time row " + std::to_string(i) + " must have " +
             std::to_string(nodes) + " columns");
        continue;
      }
      for (std::size_t j = 0; j < nodes; ++j) {
        const double t = travel_time[i][j];
        if (!std::isfinite(t) || t < 0.0) {
          fail("travel_time[" + std::to_string(i) + "][" + std::to_string(j) +
               "] must be finite and non-negative");
        }
      }
      if (travel_time[i].size() == nodes && travel_time[i][i] != 0.0) {
        fail("travel_time diagonal entry " + std::to_string(i) +
             " must be zero");
      }
    }
  }

  auto check_dims = [&](const auto& m, std::size_t r, std::size_t c,
                        const std::string& what) {
    if (m.size() != r) {
      fail(what + " must have " + std::to_string(r) + " rows");
      return false;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (m[i].size() != c) {
        fail(what + " row " + std::to_string(i) + " must have " +
             std::to_string(c) + " columns");
        return false;
      }
    }
    return true;
  };

  if (check_dims(service_duration, n, s, "service_duration")) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (!std::isfinite(service_duration[i][j]) ||
            service_duration[i][j] < 0.0)
          fail("service_duration[" + std::to_string(i) + "][" +
               std::to_string(j) + "] must be finite and non-negative");
  }

  if (window_lo.size() != n) fail("window_lo must have length n");
  if (window_hi.size() != n) fail("window_hi must have length n");
  if (window_lo.size() == n && window_hi.size() == n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(window_lo[i]) || !std::isfinite(window_hi[i]) ||
          window_lo[i] > window_hi[i]) {
        fail("patient " + std::to_string(i + 1) +
             ": window_lo must be <= window_hi and finite");
      }
    }
  }

  const bool qual_ok = check_dims(qualification, v, s, "qualification");
  const bool demand_ok = check_dims(demand, n, s, "demand");
  if (qual_ok && !is_binary_matrix(qualification))
    fail("qualification entries must be 0/1");
  if (demand_ok && !is_binary_matrix(demand))
    fail("demand entries must be 0/1");

  auto check_flags = [&](const std::vector<int>& f, const std::string& what) {
    if (f.size() != s) {
      fail(what + " must have length S");
      return;
    }
    for (int x : f)
      if (x != 0 && x != 1) fail(what + " entries must be 0/1");
  };
  check_flags(start_req, "start_req");
  check_flags(end_req, "end_req");

  // Feasibility precheck: every demanded service has a qualified nurse.
  if (qual_ok && demand_ok && is_binary_matrix(qualification) &&
      is_binary_matrix(demand)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (demand[i][j] != 1) continue;
        bool covered = false;
        for (std::size_t k = 0; k < v; ++k)
          if (qualification[k][j] == 1) covered = true;
        if (!covered)
          fail("service " + std::to_string(j) + " demanded by patient " +
               std::to_string(i + 1) + " has no qualified nurse");
      }
    }
  }

  return problems;
}

void Instance::require_valid() const {
  auto problems = check();
  if (problems.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance '" << name << "':";
  std::size_t shown = 0;
  for (const auto& p : problems) {
    msg << "\n  - " << p;
    if (++shown == 8) {
      msg << "\n  (+" << problems.size() - shown << " more)";
      break;
    }
  }
  throw SchemaError(msg.str());
}

std::vector<Task> expand_tasks(const Instance& instance) {
  std::vector<Task> tasks;
  for (int i = 0; i < instance.num_patients; ++i) {
    for (int s = 0; s < instance.num_services; ++s) {
      if (instance.demand[i][s] != 1) continue;
      tasks.push_back(Task{
          .patient = i + 1,
          .service = s,
          .duration = instance.service_duration[i][s],
          .window_lo = instance.window_lo[i],
          .window_hi = instance.window_hi[i],
      });
    }
  }
  return tasks;
}

EndpointPair endpoint_requirements(const std::vector<int>& services_in_route,
                                   const Instance& instance) {
  EndpointPair out;
  for (int s : services_in_route) {
    if (s < 0 || s >= instance.num_services)
      throw std::invalid_argument("service index " + std::to_string(s) +
                                  " out of range");
    if (instance.start_req[s] == 1) out.start = Endpoint::Lab;
    if (instance.end_req[s] == 1) out.end = Endpoint::Lab;
  }
  return out;
}

EndpointPair route_endpoints(const std::vector<int>& services_in_route,
                             const Instance& instance, Mode mode) {
  if (mode == Mode::Classic) return EndpointPair{};
  return endpoint_requirements(services_in_route, instance);
}

}  // namespace hhcflex
