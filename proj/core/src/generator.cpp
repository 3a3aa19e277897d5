#include "hhcflex/generator.hpp"

#include <cmath>
#include <string>

#include "hhcflex/errors.hpp"
#include "hhcflex/rng.hpp"

namespace hhcflex {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over base + golden-ratio stream offset.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void apply_default_features(GenConfig& config) {
  config.start_req.assign(config.num_services, 0);
  config.end_req.assign(config.num_services, 0);
  if (config.num_services >= 6) {
    config.start_req[5] = 1;
    config.end_req[2] = 1;
  }
}

namespace {

GenConfig size_class(const char* label, int n, int v, int s,
                     std::uint64_t seed) {
  GenConfig cfg;
  cfg.name = std::string(label) + "-" + std::to_string(seed);
  cfg.num_patients = n;
  cfg.num_nurses = v;
  cfg.num_services = s;
  cfg.seed = seed;
  apply_default_features(cfg);
  return cfg;
}

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

}  // namespace

GenConfig small_class(std::uint64_t seed) {
  return size_class("small", 10, 3, 6, seed);
}
GenConfig medium_class(std::uint64_t seed) {
  return size_class("medium", 15, 5, 6, seed);
}
GenConfig large_class(std::uint64_t seed) {
  return size_class("large", 25, 5, 6, seed);
}

Instance generate(const GenConfig& config) {
  const int n = config.num_patients;
  const int V = config.num_nurses;
  const int S = config.num_services;
  if (n <= 0 || V <= 0 || S <= 0)
    throw SchemaError("generator sizes must be positive");
  if (config.demand_density <= 0.0 || config.demand_density > 1.0 ||
      config.qualification_density <= 0.0 ||
      config.qualification_density > 1.0)
    throw SchemaError("densities must lie in (0, 1]");
  if (!(config.horizon >= config.window_width) || config.window_width <= 0.0)
    throw SchemaError("horizon must be >= window_width > 0");
  if (!config.start_req.empty() &&
      config.start_req.size() != static_cast<std::size_t>(S))
    throw SchemaError("start_req must have length S");
  if (!config.end_req.empty() &&
      config.end_req.size() != static_cast<std::size_t>(S))
    throw SchemaError("end_req must have length S");

  Rng rng(config.seed);
  Instance inst;
  inst.name = config.name.empty()
                  ? "gen-" + std::to_string(config.seed)
                  : config.name;
  inst.num_patients = n;
  inst.num_nurses = V;
  inst.num_services = S;

  // Coordinates: depot and lab at opposite corners, patients uniform.
  // Draw order is fixed; do not reorder without bumping the file format.
  std::vector<std::pair<double, double>> pos(n + 2);
  pos[0] = {0.0, 0.0};
  pos[n + 1] = {config.area_side, config.area_side};
  for (int i = 1; i <= n; ++i) {
    const double x = rng.uniform(0.0, config.area_side);
    const double y = rng.uniform(0.0, config.area_side);
    pos[i] = {x, y};
  }
  inst.travel_time.assign(n + 2, std::vector<double>(n + 2, 0.0));
  for (int i = 0; i < n + 2; ++i) {
    for (int j = 0; j < n + 2; ++j) {
      if (i == j) continue;
      const double dx = pos[i].first - pos[j].first;
      const double dy = pos[i].second - pos[j].second;
      inst.travel_time[i][j] = round3(std::hypot(dx, dy));
    }
  }

  inst.service_duration.assign(n, std::vector<double>(S, 0.0));
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < S; ++s)
      inst.service_duration[i][s] =
          static_cast<double>(rng.uniform_int(10, 20));

  inst.demand.assign(n, std::vector<int>(S, 0));
  for (int i = 0; i < n; ++i) {
    bool any = false;
    for (int s = 0; s < S; ++s) {
      inst.demand[i][s] = rng.bernoulli(config.demand_density) ? 1 : 0;
      any = any || inst.demand[i][s] == 1;
    }
    if (!any)
      inst.demand[i][rng.uniform_int(0, static_cast<std::uint64_t>(S - 1))] =
          1;
  }

  inst.qualification.assign(V, std::vector<int>(S, 0));
  for (int k = 0; k < V; ++k)
    for (int s = 0; s < S; ++s)
      inst.qualification[k][s] =
          rng.bernoulli(config.qualification_density) ? 1 : 0;
  for (int s = 0; s < S; ++s) {
    bool any = false;
    for (int k = 0; k < V; ++k) any = any || inst.qualification[k][s] == 1;
    if (!any) {
      if (V == 0) throw GenerationError("no nurse available to repair skills");
      inst.qualification[rng.uniform_int(0, static_cast<std::uint64_t>(V - 1))]
                        [s] = 1;
    }
  }

  inst.window_lo.resize(n);
  inst.window_hi.resize(n);
  for (int i = 0; i < n; ++i) {
    const double r =
        round3(rng.uniform(0.0, config.horizon - config.window_width));
    inst.window_lo[i] = r;
    inst.window_hi[i] = r + config.window_width;
  }

  inst.start_req = config.start_req.empty() ? std::vector<int>(S, 0)
                                            : config.start_req;
  inst.end_req =
      config.end_req.empty() ? std::vector<int>(S, 0) : config.end_req;

  inst.require_valid();
  return inst;
}

Instance tiny_t1() {
  Instance inst;
  inst.name = "T1";
  inst.num_patients = 2;
  inst.num_nurses = 1;
  inst.num_services = 2;
  // Nodes: depot 0, P1 1, P2 2, lab 3.
  inst.travel_time = {
      {0, 10, 20, 30},
      {10, 0, 10, 25},
      {20, 10, 0, 15},
      {30, 25, 15, 0},
  };
  inst.service_duration = {{5, 5}, {5, 5}};
  inst.window_lo = {0, 0};
  inst.window_hi = {1000, 1000};
  inst.qualification = {{1, 1}};
  inst.demand = {{1, 0}, {0, 1}};
  inst.start_req = {0, 0};
  inst.end_req = {0, 1};
  inst.require_valid();
  return inst;
}

}  // namespace hhcflex
