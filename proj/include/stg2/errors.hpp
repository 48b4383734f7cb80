#pragma once

// Error taxonomy shared across the library. ConfigError covers rejected
// user input (CLI exit status 1); InvariantError covers violated internal
// postconditions such as failed Weil bounds (CLI exit status 2).

#include <stdexcept>
#include <string>

namespace stg2 {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stg2
