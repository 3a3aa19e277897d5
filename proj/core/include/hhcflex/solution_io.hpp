#pragma once

#include <filesystem>
#include <string>

#include "hhcflex/solution.hpp"

namespace hhcflex {

// Solution files are JSON documents
//   { "objective": number,
//     "routes": [ { "nurse": int, "start": "depot"|"lab",
//                   "end": "depot"|"lab",
//                   "visits": [ { "patient": int, "service": int,
//                                 "start_time": number } ] } ] }
// with byte-stable serialization and full-precision numbers.
Solution read_solution(const std::filesystem::path& path);
void write_solution(const Solution& solution,
                    const std::filesystem::path& path);

Solution parse_solution_json(const std::string& text);
std::string solution_to_json(const Solution& solution);

}  // namespace hhcflex
