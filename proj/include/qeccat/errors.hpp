#pragma once

#include <stdexcept>
#include <string>

namespace qeccat {

// Base for everything this library throws on bad input or broken math.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeProbability : Error {
  using Error::Error;
};
struct NotNormalized : Error {
  using Error::Error;
};
struct ParameterOutOfRange : Error {
  using Error::Error;
};
struct TargetUnreachable : Error {
  using Error::Error;
};
struct InvalidChannel : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotCompletelyPositive : Error {
  using Error::Error;
};
struct NotTracePreserving : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct NontrivialSyndrome : Error {
  using Error::Error;
};
struct UnsupportedProtocol : Error {
  using Error::Error;
};
struct MixedFamilies : Error {
  using Error::Error;
};
struct ZeroLevels : Error {
  using Error::Error;
};
struct EmptyPlan : Error {
  using Error::Error;
};

// Malformed input document (JSON shape, unknown family, missing field).
// Distinct from the domain errors above so the CLI can map it to its own
// exit code.
struct SpecFormatError : Error {
  using Error::Error;
};

}  // namespace qeccat
