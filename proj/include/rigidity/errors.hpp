#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct IoError : Error {
  using Error::Error;
};

// Brute-force size guard tripped; the caller should fall back to a
// sampling estimator or refuse, never silently approximate.
struct CapExceededError : Error {
  using Error::Error;
};

// A certifier or pipeline hypothesis does not hold for the given input.
struct HypothesisError : Error {
  using Error::Error;
};

// Claim preconditions violated: the residual bipartite graph between two
// blocks has no big component, or more than one.
struct BigComponentError : Error {
  using Error::Error;
};

}  // namespace rigidity
