#pragma once

#include <stdexcept>
#include <string>

namespace cpoly {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (usage/input error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cpoly
