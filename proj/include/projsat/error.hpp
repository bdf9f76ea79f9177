/// @file  error.hpp
/// @brief Exception types thrown by projsat

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projsat {

/// Base class for every error raised by the library
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (DIMACS or expression syntax)
class parse_error : public error {
  std::size_t _line;

public:
  parse_error(std::size_t line, const std::string &what)
      : error("line " + std::to_string(line) + ": " + what), _line(line) {}

  /// 1-based line of the offending token (0 if unknown)
  [[nodiscard]] std::size_t line() const noexcept { return _line; }
};

/// Enumeration would exceed the configured point cap
class cap_exceeded : public error {
public:
  using error::error;
};

} // namespace projsat
