#pragma once

#include <stdexcept>
#include <string>

namespace ndmap {

// Raised when a coefficient/wavenumber pair sits on (or within the guard of)
// a Neumann eigenvalue, so the Neumann problem is not uniquely solvable.
class ResonanceError : public std::runtime_error {
 public:
  explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's input contract is violated.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace ndmap
