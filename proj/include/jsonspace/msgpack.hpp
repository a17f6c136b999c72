#pragma once

#include "jsonspace/bytes.hpp"
#include "jsonspace/json_value.hpp"

namespace jsonspace {
namespace msgpack {

/// MessagePack serialization of a JSON tree, always using the smallest
/// representation: fixint/uint8..uint64 for non-negative integers,
/// fixint/int8..int64 for negative ones, fixstr/str8/16/32, fixarray/
/// array16/32, fixmap/map16/32. Doubles are stored as float64 without
/// narrowing. Object member order is preserved.
Bytes encode(const JsonValue& value);

/// Decodes exactly one value; trailing bytes are an error. float32 widens
/// to double; uint64 values above int64 range become doubles. bin and ext
/// families have no JSON mapping and raise DecodeError, as do NaN or
/// infinite floats, invalid UTF-8 in strings, and truncated input.
JsonValue decode(const Bytes& data);

}  // namespace msgpack
}  // namespace jsonspace
