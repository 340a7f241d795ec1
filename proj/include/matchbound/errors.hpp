#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchbound {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values: out-of-range ids, invalid parameters, malformed input.
struct argument_error : error {
  using error::error;
};

// Input text could not be parsed; carries the offending 1-based line number.
struct parse_error : argument_error {
  parse_error(std::size_t line_number, const std::string& what)
      : argument_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  std::size_t line;
};

// Instance exceeds a documented size cap of the exhaustive machinery.
struct size_error : argument_error {
  using argument_error::argument_error;
};

// File or stream I/O failure.
struct io_error : error {
  using error::error;
};

// A documented precondition was violated by the caller.
struct precondition_error : error {
  using error::error;
};

// An internal invariant failed; indicates a library bug, not a caller mistake.
struct internal_error : error {
  using error::error;
};

namespace detail {

inline void require(bool cond, const char* msg) {
  if (!cond) throw precondition_error(msg);
}

inline void require_arg(bool cond, const char* msg) {
  if (!cond) throw argument_error(msg);
}

inline void check(bool cond, const char* msg) {
  if (!cond) throw internal_error(msg);
}

}  // namespace detail
}  // namespace matchbound
