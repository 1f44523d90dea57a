#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynfield {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or definition violates a documented invariant. The message names
/// the invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The dot of a Turing-machine state description is not flanked by
/// (control state, tape symbol).
class MalformedDescription : public Error {
 public:
  using Error::Error;
};

/// Two generalized-shift rules match the same dotted sequence.
class AmbiguousMatch : public Error {
 public:
  using Error::Error;
};

/// A symbol has no Goedel number on the side of the dot where it occurs.
class UncodedSymbol : public Error {
 public:
  using Error::Error;
};

/// A rule whose action is not affine on its cylinder cell.
class InexpressibleRule : public Error {
 public:
  using Error::Error;
};

/// A macrostate overlaps more than one partition cell.
class StraddlesPartition : public Error {
 public:
  StraddlesPartition(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}

  /// Orbit step at which the offending macrostate was reached.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Grid resolution does not align with the partition boundaries.
class ResolutionMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace dynfield
