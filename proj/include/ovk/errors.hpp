#pragma once

#include <stdexcept>
#include <string>

namespace ovk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Series inversion attempted on a series whose first stored coefficient is 0.
class ZeroLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

/// A coefficient was requested at or beyond a series' truncation order.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// The requested invariant lies outside the regime the engine can evaluate.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// Localization produced a non-zero power of the equivariant parameter.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

class NonConvergent : public Error {
 public:
  using Error::Error;
};

}  // namespace ovk
