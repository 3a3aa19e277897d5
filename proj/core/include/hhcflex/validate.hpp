#pragma once

#include <string>
#include <vector>

#include "hhcflex/instance.hpp"
#include "hhcflex/solution.hpp"

namespace hhcflex {

// Tags name the model constraint family a violation breaks. C2..C6 govern
// the route starting place, C7..C11 the ending place, C12 chain flow,
// C13 temporal chaining, C14 time windows, C15 the task partition, C16
// qualifications. OBJ flags a stored objective that does not match the
// recomputed leg sum, PARTITION summarizes a broken task partition, QUAL
// marks references that cannot be resolved against the instance at all.
enum class ConstraintTag {
  C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14, C15, C16,
  OBJ, PARTITION, QUAL,
};

const char* to_string(ConstraintTag tag);

struct Violation {
  ConstraintTag tag;
  std::string detail;
  int nurse = -1;  // -1 when not tied to one nurse
  int task = -1;   // index into expand_tasks order, -1 when n/a
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;

  bool has_tag(ConstraintTag tag) const;
};

// Checks a solution against every model rule and reports every violation,
// not just the first. Malformed solutions (bad indices, wrong route
// count) yield violations, never exceptions.
ValidationReport validate(const Instance& instance, const Solution& solution,
                          Mode mode);

}  // namespace hhcflex
