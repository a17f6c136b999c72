#pragma once

#include "jsonspace/bytes.hpp"
#include "jsonspace/json_value.hpp"

namespace jsonspace {
namespace cbor {

/// CBOR serialization using preferred encodings: integer arguments take
/// the shortest form, floats shrink to half or single precision when the
/// narrower width round-trips losslessly, all lengths are definite. Object
/// member order is preserved (no canonical key sorting).
Bytes encode(const JsonValue& value);

/// Decodes exactly one data item; trailing bytes are an error. Indefinite
/// lengths, byte strings, tags and non-simple major-7 values have no JSON
/// mapping here and raise DecodeError, as do NaN or infinite floats.
/// Integers outside the int64 range widen to double.
JsonValue decode(const Bytes& data);

}  // namespace cbor
}  // namespace jsonspace
