#pragma once

#include <stdexcept>

namespace rcn {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed point-file input.
struct ParseError : Error {
  using Error::Error;
};

/// Coordinate outside the exact-arithmetic capacity bound.
struct CapacityError : ParseError {
  using ParseError::ParseError;
};

/// A candidate set intersects the base set.
struct OverlapError : Error {
  using Error::Error;
};

/// The requested point is not a member of the set.
struct NotAMemberError : Error {
  using Error::Error;
};

/// A supplied radial order does not match its anchor/target set.
struct OrderMismatchError : Error {
  using Error::Error;
};

/// No valid candidate exists in the sampling neighborhood.
struct ExhaustedError : Error {
  using Error::Error;
};

/// An internal invariant failed; indicates corrupted state upstream.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace rcn
