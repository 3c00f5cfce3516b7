#pragma once

#include <stdexcept>
#include <string>

namespace offord {

// Base of every error raised by the library. The CLI maps the subclasses to
// exit codes (format/precondition -> 2, capacity -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Input exceeds a hard size limit (mask width, enumeration scale, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "capacity"; }
};

// Entry values outside what an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  const char* kind() const noexcept override { return "format"; }
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Stored data disagrees with recomputed values.
class IntegrityError : public Error {
 public:
  IntegrityError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  const char* kind() const noexcept override { return "integrity"; }
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace offord
