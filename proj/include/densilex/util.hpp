#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace densilex {

// Base class for every error raised by the library. The CLI maps any of
// these to a nonzero exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (CSV framing, .vec rows, matrix files, seed files).
// line() is 1-based; 0 when the location is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Training could not run or did not converge to a finite result.
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

// Strict full-string parse; throws ParseError on trailing garbage.
double parse_double(std::string_view text, std::size_t line = 0);

// Child seed for a named pipeline stage. All randomness in the pipeline
// is derived from one root seed through this function.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label);

std::vector<std::string_view> split_whitespace(std::string_view text);
std::vector<std::string_view> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

}  // namespace densilex
