#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unicyclic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A graph violates a structural precondition (self-loop, duplicate edge,
/// disconnected, not unicyclic, wrong cycle parity, ...).
class GraphError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Raised when a computed pseudoinverse fails its own Penrose certification.
/// Signals an arithmetic bug; never expected in practice.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace unicyclic
