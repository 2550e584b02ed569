#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synviz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Audio could not be opened or decoded.
class AudioError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside its permitted range. `key()` names the parameter.
class RangeError : public Error {
 public:
  RangeError(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Malformed configuration or preset text. `line()` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A binary frame failed validation.
class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace synviz

namespace synviz {

/// A name is not in a lookup table (pitch class, emotion, key, preset).
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace synviz
