#pragma once

#include <stdexcept>
#include <string>

namespace sringkit {

// Bad input from the caller: malformed group spec, element out of range,
// precondition violated.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured cap or search budget was hit. Never a silent truncation.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_cap, const std::string& detail)
      : Error(what_cap + " cap exceeded: " + detail), cap_(what_cap) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

// A mathematical invariant that must hold for every S-ring failed. This
// points at a bug in this library, not at the caller's input.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sringkit
