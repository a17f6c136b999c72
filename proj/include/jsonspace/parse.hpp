#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jsonspace/json_value.hpp"

namespace jsonspace {

/// Thrown by parse() on malformed input. Offsets are zero-based bytes;
/// line and column are one-based and count the byte position within the
/// line, which is good enough for pointing a human at the problem.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t offset, std::size_t line,
             std::size_t column);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  /// Maximum container nesting depth before the parser refuses the input.
  std::size_t max_depth = 512;
};

/// Strict RFC 8259 parser. One top-level value, no trailing garbage, no
/// comments, no trailing commas. Strings must be valid UTF-8 and escape
/// sequences are decoded (surrogate pairs included). Duplicate keys within
/// one object are rejected. Integer-looking tokens that fit in int64 stay
/// integers, everything else becomes a finite double; numbers that overflow
/// binary64 are errors rather than infinities.
JsonValue parse(std::string_view text, const ParseOptions& options = {});

}  // namespace jsonspace
