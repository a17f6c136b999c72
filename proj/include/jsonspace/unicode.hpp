#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace jsonspace {

/// True when `text` is well-formed UTF-8: no overlong forms, no surrogate
/// code points, nothing above U+10FFFF, no truncated sequences.
bool valid_utf8(std::string_view text);

/// Appends the UTF-8 encoding of a scalar code point (not a surrogate,
/// <= U+10FFFF). Returns false without writing when out of range.
bool append_utf8(std::string& out, std::uint32_t code_point);

}  // namespace jsonspace
