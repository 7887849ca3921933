#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scamtext {

// Failure categories map one-to-one onto CLI exit codes (2, 3, 4).
enum class ErrorKind { config, corpus, cell };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

/// Raised while reading or validating a corpus. `line()` is 1-based, 0 when
/// the error is not tied to a particular record.
class CorpusError : public Error {
 public:
  CorpusError(const std::string& what, std::size_t line = 0)
      : Error(ErrorKind::corpus, line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class CellFailure : public Error {
 public:
  explicit CellFailure(const std::string& what) : Error(ErrorKind::cell, what) {}
};

}  // namespace scamtext
