#pragma once

#include <filesystem>
#include <string>

#include "hhcflex/instance.hpp"

namespace hhcflex {

// Instance files are single UTF-8 JSON documents with exactly the fields
//   name, num_patients, num_nurses, num_services, travel_time,
//   service_duration, window_lo, window_hi, qualification, demand,
//   start_req, end_req
// Unknown fields are rejected. Numbers round-trip at full precision and
// serialization is byte-stable, so read(write(x)) == x field for field.
Instance read_instance(const std::filesystem::path& path);
void write_instance(const Instance& instance,
                    const std::filesystem::path& path);

Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& instance);

}  // namespace hhcflex
