#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace voxtopo {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: non-positive dimensions, out-of-range label, bad shape spec.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `offset` is a 1-based line number for text formats
/// and a byte offset for binary formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::uint64_t offset)
      : Error(what), offset_(offset) {}
  std::uint64_t offset() const { return offset_; }

 private:
  std::uint64_t offset_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was not met by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Surface points or counts that cannot come from a closed digital surface.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// A cross-check that must hold for valid input failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace voxtopo
