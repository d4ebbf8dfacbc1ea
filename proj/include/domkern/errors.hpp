#pragma once

#include <stdexcept>
#include <string>

namespace domkern {

// Caller handed us something that violates a documented precondition
// (vertex id out of range, malformed structure, wrong solution shape).
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact solver was asked for an instance beyond its configured budget.
// Never a wrong answer, always a refusal.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hard internal guarantee failed: an oracle query exceeded its size cap,
// or a backend produced an answer that does not verify.
struct contract_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File could not be parsed; line is 1-based.
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace domkern
