#pragma once

#include <stdexcept>
#include <string>

namespace hypercert {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad arguments, malformed input text, or violated preconditions that a
/// caller (or CLI user) can trigger.  CLI exit code 2.
struct UsageError : Error {
  explicit UsageError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (polynomials, rationals, JSON fixtures).
struct ParseError : UsageError {
  explicit ParseError(const std::string& what) : UsageError(what) {}
};

/// A requested computation exceeds a configured size cap.  CLI exit code 3.
struct CapacityError : Error {
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/// An internal invariant failed: a cross-check between two independent
/// computations disagreed, or an exact division that must succeed did not.
/// Always a bug, never a data condition.  CLI exit code 4.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

/// A linear system whose determinant vanishes identically; carries the
/// offending determinant in the message.
struct SingularSystemError : Error {
  explicit SingularSystemError(const std::string& what) : Error(what) {}
};

/// Check an internal invariant; failures are bugs, never data conditions.
inline void require_internal(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace hypercert
