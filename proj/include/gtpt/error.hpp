#pragma once

#include <stdexcept>
#include <string>

namespace gtpt {

/// Raised on invalid input: out-of-range labels, malformed files,
/// violated preconditions of a construction.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(what); }

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(what);
}

}  // namespace detail
}  // namespace gtpt
