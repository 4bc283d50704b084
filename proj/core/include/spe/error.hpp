#pragma once

#include <stdexcept>
#include <string>

namespace spe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

class NotUnitary : public InvalidArgument {
public:
  NotUnitary(const std::string& what, double defect)
      : InvalidArgument(what), defect_(defect) {}
  /// Frobenius norm of U U^dagger - I.
  double defect() const noexcept { return defect_; }

private:
  double defect_;
};

class NotNormalized : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

/// Numerical failures: the input was accepted but an algorithm could not
/// deliver its contract.
class NumericalError : public Error {
public:
  using Error::Error;
};

class NotNormal : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NotPSD : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

}  // namespace spe
