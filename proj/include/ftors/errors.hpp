#pragma once

#include <stdexcept>
#include <string>

namespace ftors {

// Malformed quiver text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid quiver (loop, cycle, disconnected) or bad vertex.
class InvalidQuiver : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (wrong type, wrong shape, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized procedure ran out of budget without a certified answer.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured cap (e.g. p^e classes of extensions).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ftors
