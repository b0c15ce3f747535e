#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lacunary {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (negative exponent, zero polynomial
/// where a nonzero one is required, d = 0, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A computation would exceed a configured resource cap (dense span,
/// recombination subsets). Never silently truncated.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (inexact division that must be
/// exact, a non-cyclotomic result from a cyclotomic scan, ...).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lacunary
