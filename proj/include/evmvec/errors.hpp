#pragma once

#include <stdexcept>
#include <string>

namespace evmvec {

// Base for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad bytes, bad hex, bad opcode text. Message names the offending position.
class MalformedInputError : public Error {
public:
  using Error::Error;
};

// Feature/model dimension disagreement.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Invalid training input (empty corpus, mixed dimensions, ...).
class FitError : public Error {
public:
  using Error::Error;
};

// File-format or filesystem problems.
class IoError : public Error {
public:
  using Error::Error;
};

// Bad user-supplied value (address, fraction, config key).
class ValidationError : public Error {
public:
  using Error::Error;
};

// Network fetch failed after retries; carries the upstream message.
class FetchError : public Error {
public:
  using Error::Error;
};

}  // namespace evmvec
