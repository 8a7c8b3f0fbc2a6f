#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tfa {

// Base class for every error raised by the library. Anything derived from
// Error signals bad input rather than an internal fault, except
// ConvergenceFailure.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class DivisibilityError : public Error {
public:
  using Error::Error;
};

class LatticeMembershipError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class InvalidRank : public Error {
public:
  using Error::Error;
};

class ConfigMismatch : public Error {
public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

class LengthMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace tfa
