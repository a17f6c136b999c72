#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "jsonspace/json_value.hpp"

namespace jsonspace {

/// Shortest decimal text that parses back to exactly the same number.
/// Integers print in full; doubles follow the ECMAScript Number-to-string
/// rules (fixed notation for magnitudes between 1e-6 and 1e21, otherwise
/// exponential like "1e+100" / "1e-7"). Negative zero prints as "0" so
/// minify(parse(minify(x))) is byte-identical to minify(x).
std::string number_to_string(const JsonNumber& number);

/// Appends the quoted, escaped form of `text` to `out`. Escapes the two
/// mandatory characters (quote, backslash) plus control characters, using
/// the short forms \b \t \n \f \r where they exist and \u00XX elsewhere.
/// Multi-byte UTF-8 passes through verbatim.
void append_quoted(std::string& out, std::string_view text);

/// Byte length of append_quoted's output for `text`, without building it.
std::uint64_t quoted_length(std::string_view text);

/// Canonical compact serialization: no whitespace, object members in
/// insertion order, numbers via number_to_string. Two deep-equal documents
/// built in the same member order minify identically.
std::string minify(const JsonValue& value);

/// Size in bytes of minify(value), computed without materializing it.
std::uint64_t minified_byte_size(const JsonValue& value);

}  // namespace jsonspace
