#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trackgen {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input data or configuration supplied by the caller. The CLI maps this
// family to exit code 2; every other Error maps to 1.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed netpbm stream. offset() is the byte position of the problem.
class FormatError : public InvalidInput {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : InvalidInput(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Text-format error tied to a 1-based source line.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, int line)
      : InvalidInput("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace trackgen
