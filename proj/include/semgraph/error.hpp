#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semgraph {

// Data errors: malformed input, unknown ids, inconsistent graphs.
// Precondition violations on caller-supplied parameters (thresholds, a == b,
// generator ranges) are reported as std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileFormatError : public Error {
 public:
  FileFormatError(std::string file, std::size_t line, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ": " + message),
        file_(std::move(file)),
        line_(line < 1 ? 1 : line),
        message_(message) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string message_;
};

// A measure was requested at a point where its formula is undefined
// (e.g. disparity of an isolated node).
class UndefinedValueError : public Error {
 public:
  using Error::Error;
};

}  // namespace semgraph
