#pragma once

#include <stdexcept>
#include <string>

namespace cif {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different grids or have incompatible shapes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The symbol has a complex spectrum (f * rho < 0).
class HyperbolicityLoss : public Error {
 public:
  using Error::Error;
};

/// Density reached the vacuum floor.
class PositivityLoss : public Error {
 public:
  PositivityLoss(const std::string& what, double min_rho)
      : Error(what), min_rho_(min_rho) {}
  double min_rho() const noexcept { return min_rho_; }

 private:
  double min_rho_;
};

/// A non-finite value appeared in the state or a tendency.
class NumericalBlowup : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed binary or text file.
class FormatError : public Error {
 public:
  using Error::Error;
};

class UnsupportedVersion : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace cif
