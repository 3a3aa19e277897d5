#pragma once

#include <string>

#include "hhcflex/instance.hpp"
#include "hhcflex/solution.hpp"

namespace hhcflex {

// Arrow notation with services prefixed to patient ids, 1-based service
// display: "Depot -> S1 -> 1 -> S2 -> 2 -> Lab" (the arrow is a UTF-8
// right arrow in the actual output).
std::string render_route(const Instance& instance, const Route& route);

// Inverse of render_route; start times are recomputed earliest-feasible.
// Throws ParseError on malformed text.
Route parse_route(const Instance& instance, const std::string& text,
                  int nurse);

}  // namespace hhcflex
