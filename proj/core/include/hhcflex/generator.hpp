#pragma once

#include <cstdint>
#include <vector>

#include "hhcflex/instance.hpp"

namespace hhcflex {

// Seeded random-instance configuration. Patients are placed uniformly in
// an area_side x area_side square with the depot and the laboratory at
// opposite corners; travel times are Euclidean distances rounded to three
// decimals. Each patient is guaranteed at least one demanded service and
// each service at least one qualified nurse.
struct GenConfig {
  std::string name;
  int num_patients = 10;
  int num_nurses = 3;
  int num_services = 6;
  double area_side = 100.0;
  double demand_density = 0.3;         // in (0, 1]
  double qualification_density = 0.5;  // in (0, 1]
  double window_width = 240.0;         // minutes
  double horizon = 600.0;              // minutes; >= window_width
  std::vector<int> start_req;          // length S; empty = all zero
  std::vector<int> end_req;
  std::uint64_t seed = 1;
};

// The three benchmark size classes (patients/nurses/services =
// 10/3/6, 15/5/6, 25/5/6) with the default service feature vector:
// the last service starts at the lab, the third ends there.
GenConfig small_class(std::uint64_t seed);
GenConfig medium_class(std::uint64_t seed);
GenConfig large_class(std::uint64_t seed);

// Flags service index 5 as lab-start and index 2 as lab-end (requires
// S >= 6); the default feature vector used by the size classes.
void apply_default_features(GenConfig& config);

// Pure function of config: identical configs yield bit-identical
// instances. Throws GenerationError when the qualified-nurse repair is
// impossible and SchemaError on invalid config values.
Instance generate(const GenConfig& config);

// Canonical hand-built fixture: patients P1, P2, one nurse holding both
// of two services; P1 demands service 0 (no flags), P2 demands service 1
// which must end at the lab; windows [0, 1000], durations 5.
// travel: d(D,P1)=10 d(D,P2)=20 d(P1,P2)=10 d(D,L)=30 d(L,P1)=25 d(L,P2)=15.
Instance tiny_t1();

}  // namespace hhcflex
