#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alcfit {

/// Malformed concept text; `position()` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Bad input data: fact files, manifests, samples. `line()` is 1-based, 0 if not applicable.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Invalid run or encoding configuration.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A decoded model failed independent verification. This is always a bug.
class SoundnessError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace alcfit
