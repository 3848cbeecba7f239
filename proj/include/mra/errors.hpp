// errors.hpp — exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace mra {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller passed an argument outside an operation's domain.
struct InvalidArgument : Error {
  using Error::Error;
};

// Topology generation exhausted its restart budget.
struct GenerationFailure : Error {
  using Error::Error;
};

// Cross-referenced inputs disagree (e.g. a path id missing from its set).
struct InconsistencyError : Error {
  using Error::Error;
};

// Input exceeds a configured size limit.
struct CapacityError : Error {
  using Error::Error;
};

// A ratio whose denominator is zero.
struct UndefinedRatio : Error {
  using Error::Error;
};

// A serialized artifact failed validation on load.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace mra
