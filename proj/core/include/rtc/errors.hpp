#pragma once

#include <stdexcept>
#include <string>

namespace rtc {

/// Rejected input: a precondition on a public operation was violated.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (closure size, iteration budget) was exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Newton divergence, missing bracket, lost orbit and similar numerical failures.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold by construction failed; signals a bug.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Persistent cache file is unreadable or carries the wrong version.
struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rtc
