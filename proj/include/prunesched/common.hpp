#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prunesched {

// Objective values, loads, and weights are exact 64-bit integers throughout.
// Instances whose worst-case objective could overflow are rejected at load time.
using Value = std::int64_t;

enum class Objective { Wct, Lmax, Wtardy };

inline const char* objective_name(Objective objective) {
  switch (objective) {
    case Objective::Wct: return "wct";
    case Objective::Lmax: return "lmax";
    case Objective::Wtardy: return "wtardy";
  }
  return "?";
}

bool objective_from_name(const std::string& name, Objective& out);

// Malformed input text; the message carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A violated precondition or domain invariant on otherwise well-formed data.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The brute-force oracle was asked to enumerate beyond its configured cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A broken internal invariant: always a bug, never valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prunesched
