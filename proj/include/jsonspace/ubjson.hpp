#pragma once

#include "jsonspace/bytes.hpp"
#include "jsonspace/json_value.hpp"

namespace jsonspace {
namespace ubjson {

/// UBJSON serialization using plain (unoptimized) containers. Integers
/// take the narrowest of int8, uint8, int16, int32, int64; doubles store
/// as float32 when the narrowing round-trips losslessly, float64 otherwise.
/// Strings and object keys carry their byte length as a UBJSON integer.
Bytes encode(const JsonValue& value);

/// Decodes exactly one value; trailing bytes are an error. No-op markers
/// are skipped, char decodes as a one-byte string, high-precision numbers
/// and the optimized container headers ($ and #) are unsupported and raise
/// DecodeError.
JsonValue decode(const Bytes& data);

}  // namespace ubjson
}  // namespace jsonspace
