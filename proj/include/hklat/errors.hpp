#pragma once

#include <stdexcept>
#include <string>

namespace hklat {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed input; the CLI maps this to a usage error.
struct PreconditionError : Error {
  using Error::Error;
};

// A requested object provably does not exist (e.g. the quadratic form does not
// represent zero); the CLI maps this to exit code 1.
struct NonexistenceError : Error {
  using Error::Error;
};

// An identity that holds for every valid input came out false, i.e. a bug.
struct InternalError : Error {
  using Error::Error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError("internal consistency failure: " + what);
}

}  // namespace hklat
