#pragma once

#include <filesystem>
#include <string>

#include "hhcflex/linear_model.hpp"

namespace hhcflex {

// Tag rendered LP-safe: brackets and commas become underscores,
// e.g. x[k1,D,p2s1] -> x_k1_D_p2s1.
std::string lp_sanitize(const std::string& tag);

// Fixed-keyword LP text (Minimize / Subject To / Bounds / Binaries / End)
// with deterministic ordering: variables sorted by tag, rows by name.
// Exporting the same model twice is byte-identical.
std::string to_lp_string(const LinearModel& model);

void export_lp(const LinearModel& model, const std::filesystem::path& path);

}  // namespace hhcflex
