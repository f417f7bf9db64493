#pragma once

#include <stdexcept>
#include <string>

namespace dyncolor {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelfLoop : Error {
  using Error::Error;
};

struct DuplicateEdge : Error {
  using Error::Error;
};

struct MissingEdge : Error {
  using Error::Error;
};

// Argument outside an operation's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// Input too large for an exact brute-force routine.
struct SizeLimit : Error {
  using Error::Error;
};

// No free color left in the palette. This signals a broken invariant
// upstream; it is never a recoverable condition on a valid run.
struct PaletteExhausted : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace dyncolor
