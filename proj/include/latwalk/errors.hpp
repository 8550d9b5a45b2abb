#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latwalk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed step, word, path or b-file text.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  explicit FormatError(const std::string& what) : Error(what) {}

  /// 1-based character position (or line number for b-files); 0 if unknown.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (index out of range,
/// word not in the required language, unsupported parameters).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Work would exceed the configured enumeration or state budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Two computation routes disagree where they must not; signals a
/// transcription bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class SingularParameterError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace latwalk
