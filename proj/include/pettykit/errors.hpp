#pragma once

#include <stdexcept>
#include <string>

namespace pettykit {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error {
  using Error::Error;
};
struct OriginNotInterior : Error {
  using Error::Error;
};
struct InvalidP : Error {
  using Error::Error;
};
struct InvalidEps : Error {
  using Error::Error;
};
struct UnknownName : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct DegenerateDirection : Error {
  using Error::Error;
};
struct ConcavityViolation : Error {
  using Error::Error;
};
struct DegenerateSample : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace pettykit
