#ifndef ADNIL_ERROR_HPP
#define ADNIL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace adnil {

// Malformed data: shape mismatches, modulus mismatches, bad indices.
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical precondition failed (carries a witness description).
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation budget exhausted.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure, with line/column where known.
struct ParseError : std::runtime_error {
  int line = 0;
  ParseError(const std::string& msg, int ln) : std::runtime_error(msg + " (line " + std::to_string(ln) + ")"), line(ln) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace adnil

#endif
