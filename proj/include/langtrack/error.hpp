#pragma once

#include <stdexcept>
#include <string>

namespace langtrack {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by file readers; carries the offending file and, when known, the line.
class ParseError : public Error {
 public:
  ParseError(std::string file, long line, const std::string& msg)
      : Error(line >= 0 ? file + ":" + std::to_string(line) + ": " + msg
                        : file + ": " + msg),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

}  // namespace langtrack
