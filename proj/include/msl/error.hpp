#pragma once

#include <stdexcept>
#include <string>

namespace msl {

// Error categories map one-to-one onto the CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Mathematically well-formed input that fails a domain condition (exit code 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound was exceeded (exit code 3).
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

}  // namespace msl
