#pragma once

#include <stdexcept>
#include <string>

namespace dip {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (instance files, hex labels). Carries a location hint.
struct ParseError : Error {
  ParseError(const std::string& what, std::string where_ = "")
      : Error(where_.empty() ? what : where_ + ": " + what), where(std::move(where_)) {}
  std::string where;
};

// A NetworkConfig or protocol parameter violating a model invariant.
struct ValidationError : Error {
  using Error::Error;
};

// A verifier or prover emitted more bits than the protocol's bound f.
// This is a malformed protocol, not a reject.
struct BandwidthError : Error {
  using Error::Error;
};

// An exact enumeration would exceed the configured cap.
struct CapExceededError : Error {
  using Error::Error;
};

// A sample-and-audit step failed after the retry bound.
struct AuditError : Error {
  using Error::Error;
};

}  // namespace dip
