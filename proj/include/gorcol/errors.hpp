#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace gorcol {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a 0-based offset into the
// offending string.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg), position(pos) {}
};

// Structurally valid input that the algorithms cannot accept: ideals that
// are not m-primary within the truncation cap, enumeration bounds
// exceeded, missing files, and the like.
struct InputError : Error {
  using Error::Error;
};

// A named theorem hypothesis does not hold for the given data. The
// hypothesis name is kept separately so reports and exit codes can quote
// it verbatim.
struct HypothesisError : Error {
  std::string hypothesis;
  HypothesisError(std::string hyp, const std::string& msg)
      : Error(msg), hypothesis(std::move(hyp)) {}
};

// A condition guaranteed by a theorem (or by construction) failed: this
// always signals an implementation bug rather than bad input.
struct InternalError : Error {
  using Error::Error;
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("internal check failed: ") + what);
}

}  // namespace gorcol
