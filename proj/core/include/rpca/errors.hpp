#pragma once

#include <stdexcept>
#include <string>

namespace rpca {

// Base for every data-level failure raised by the library. Contract
// violations on the programming interface (length mismatches, bad radius)
// are reported with std::invalid_argument / std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KeyFormatError : public Error {
 public:
  using Error::Error;
};

class ParameterMismatchError : public Error {
 public:
  using Error::Error;
};

class PaddingError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormatError : public FormatError {
 public:
  using FormatError::FormatError;
};

class LengthError : public FormatError {
 public:
  using FormatError::FormatError;
};

class ValidationError : public FormatError {
 public:
  using FormatError::FormatError;
};

// The state is transient or lies on an odd-length cycle.
class UnsupportedOrbitError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpca
