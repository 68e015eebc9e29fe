#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcd {

// Base for every error raised by the library that is not a plain argument
// error (those use std::invalid_argument / std::out_of_range).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A text file (design, partition, array, blocks) could not be parsed.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Word set violates the structural invariants of a design (length, alphabet,
// weight, duplicates). Distinct from a failed H/A property check.
class MalformedDesign : public Error {
 public:
  using Error::Error;
};

// An input to a construction did not pass verification.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

// Incidence cap, array size cap or wall-clock budget exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A hypergraph builder found two witnesses inducing the same part tuple, or a
// witness without exactly one face per part.
class HypergraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcd
