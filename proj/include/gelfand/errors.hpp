#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixing two different quadratic fields in one expression.
struct FieldMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct NotAUnit : Error {
  NotAUnit() : Error("not a unit") {}
};

/// The truncation order is too small to certify the requested result.
struct RaiseTruncation : Error {
  using Error::Error;
};

struct NotRationalIso : Error {
  using Error::Error;
};

}  // namespace gelfand
