#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hetealloc {

/// Operand shapes do not line up (matrix/vector algebra, meta-path hops).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The same (row, col) link was given twice with different weights.
class ConflictingLink : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the inputs of an allocation kernel was violated,
/// e.g. asking for the credit of a paper the author did not write.
class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Years must be processed strictly one after another.
class OutOfOrderYear : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input data is malformed or inconsistent. Carries the source location when
/// one is known.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
  DataError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_ = 0;
};

/// Invalid command-line configuration, detected before any computation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hetealloc
