#pragma once

#include <stdexcept>
#include <string>

namespace hhcflex {

// Malformed input text: missing/unknown fields, unreadable numbers.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally parseable input that violates a documented invariant
// (dimension mismatch, window_lo > window_hi, ...).
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GenerationError : std::runtime_error {
  explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// MILP assignment with fractional binaries beyond tolerance.
struct ExtractionError : std::runtime_error {
  explicit ExtractionError(const std::string& msg) : std::runtime_error(msg) {}
};

// MILP assignment whose active arcs do not form per-nurse chains.
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hhcflex
