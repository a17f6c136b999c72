#include "jsonspace/ubjson.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>

#include "byte_io.hpp"
#include "jsonspace/unicode.hpp"

namespace jsonspace {
namespace ubjson {

namespace {

using detail::ByteReader;
using detail::put16;
using detail::put32;
using detail::put64;
using detail::put8;

constexpr std::size_t kMaxDepth = 1000;

void encode_integer(Bytes& out, std::int64_t i) {
  if (i >= -128 && i <= 127) {
    put8(out, 'i');
    put8(out, static_cast<std::uint8_t>(i));
  } else if (i >= 0 && i <= 255) {
    put8(out, 'U');
    put8(out, static_cast<std::uint8_t>(i));
  } else if (i >= -32768 && i <= 32767) {
    put8(out, 'I');
    put16(out, static_cast<std::uint16_t>(i));
  } else if (i >= -2147483648LL && i <= 2147483647LL) {
    put8(out, 'l');
    put32(out, static_cast<std::uint32_t>(i));
  } else {
    put8(out, 'L');
    put64(out, static_cast<std::uint64_t>(i));
  }
}

void encode_text(Bytes& out, const std::string& s) {
  encode_integer(out, static_cast<std::int64_t>(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

void encode_value(Bytes& out, const JsonValue& v) {
  switch (v.type()) {
    case JsonValue::Type::Null:
      put8(out, 'Z');
      return;
    case JsonValue::Type::Boolean:
      put8(out, v.as_boolean() ? 'T' : 'F');
      return;
    case JsonValue::Type::Number: {
      const JsonNumber& n = v.as_number();
      if (n.is_integer()) {
        encode_integer(out, n.as_integer());
      } else {
        double d = n.as_double();
        float f = static_cast<float>(d);
        if (static_cast<double>(f) == d) {
          put8(out, 'd');
          put32(out, std::bit_cast<std::uint32_t>(f));
        } else {
          put8(out, 'D');
          put64(out, std::bit_cast<std::uint64_t>(d));
        }
      }
      return;
    }
    case JsonValue::Type::String:
      put8(out, 'S');
      encode_text(out, v.as_string());
      return;
    case JsonValue::Type::Array:
      put8(out, '[');
      for (const auto& element : v.as_array()) encode_value(out, element);
      put8(out, ']');
      return;
    case JsonValue::Type::Object:
      put8(out, '{');
      for (const auto& [key, member] : v.as_object()) {
        encode_text(out, key);
        encode_value(out, member);
      }
      put8(out, '}');
      return;
  }
}

struct Decoder {
  ByteReader reader;

  void skip_noops() {
    while (!reader.at_end() && reader.data[reader.pos] == 'N') ++reader.pos;
  }

  std::uint8_t marker() {
    skip_noops();
    return reader.u8();
  }

  std::int64_t integer_with_marker(std::uint8_t m, std::size_t at) {
    switch (m) {
      case 'i':
        return static_cast<std::int8_t>(reader.u8());
      case 'U':
        return reader.u8();
      case 'I':
        return static_cast<std::int16_t>(reader.u16());
      case 'l':
        return static_cast<std::int32_t>(reader.u32());
      case 'L':
        return static_cast<std::int64_t>(reader.u64());
      default:
        throw DecodeError("expected integer marker", at);
    }
  }

  std::string text_body() {
    std::size_t at = reader.pos;
    std::int64_t len = integer_with_marker(reader.u8(), at);
    if (len < 0) throw DecodeError("negative length", at);
    if (static_cast<std::uint64_t>(len) > reader.data.size() - reader.pos)
      throw DecodeError("length exceeds input", at);
    std::size_t body_at = reader.pos;
    std::string_view body = reader.view(static_cast<std::size_t>(len));
    if (!valid_utf8(body))
      throw DecodeError("invalid UTF-8 in string", body_at);
    return std::string(body);
  }

  JsonValue with_marker(std::uint8_t m, std::size_t at, std::size_t depth) {
    if (depth > kMaxDepth)
      throw DecodeError("nesting depth limit exceeded", at);
    switch (m) {
      case 'Z':
        return JsonValue(nullptr);
      case 'T':
        return JsonValue(true);
      case 'F':
        return JsonValue(false);
      case 'i':
      case 'U':
      case 'I':
      case 'l':
      case 'L':
        return JsonValue(integer_with_marker(m, at));
      case 'd': {
        double d = static_cast<double>(std::bit_cast<float>(reader.u32()));
        if (!std::isfinite(d))
          throw DecodeError("non-finite float has no JSON mapping", at);
        return JsonValue(d);
      }
      case 'D': {
        double d = std::bit_cast<double>(reader.u64());
        if (!std::isfinite(d))
          throw DecodeError("non-finite float has no JSON mapping", at);
        return JsonValue(d);
      }
      case 'C': {
        std::uint8_t c = reader.u8();
        if (c > 0x7F) throw DecodeError("char out of ASCII range", at);
        return JsonValue(std::string(1, static_cast<char>(c)));
      }
      case 'S':
        return JsonValue(text_body());
      case 'H':
        throw DecodeError("high-precision number not supported", at);
      case '[': {
        JsonArray elements;
        while (true) {
          std::size_t item_at = reader.pos;
          std::uint8_t im = marker();
          if (im == ']') break;
          if (im == '$' || im == '#')
            throw DecodeError("optimized container header not supported",
                              item_at);
          elements.push_back(with_marker(im, item_at, depth + 1));
        }
        return JsonValue(std::move(elements));
      }
      case '{': {
        JsonObject members;
        std::unordered_set<std::string> seen;
        while (true) {
          skip_noops();
          std::size_t item_at = reader.pos;
          reader.require(1);
          std::uint8_t c = reader.data[reader.pos];
          if (c == '}') {
            ++reader.pos;
            break;
          }
          if (c == '$' || c == '#')
            throw DecodeError("optimized container header not supported",
                              item_at);
          std::string key = text_body();
          if (!seen.insert(key).second)
            throw DecodeError("duplicate object key", item_at);
          std::size_t value_at = reader.pos;
          std::uint8_t vm = marker();
          members.emplace_back(std::move(key),
                               with_marker(vm, value_at, depth + 1));
        }
        return JsonValue(std::move(members));
      }
      default:
        throw DecodeError("unknown type marker", at);
    }
  }

  JsonValue value(std::size_t depth) {
    skip_noops();
    std::size_t at = reader.pos;
    std::uint8_t m = reader.u8();
    return with_marker(m, at, depth);
  }
};

}  // namespace

Bytes encode(const JsonValue& value) {
  Bytes out;
  encode_value(out, value);
  return out;
}

JsonValue decode(const Bytes& data) {
  Decoder decoder{ByteReader{data}};
  JsonValue value = decoder.value(0);
  decoder.skip_noops();
  if (!decoder.reader.at_end())
    throw DecodeError("trailing bytes after value", decoder.reader.pos);
  return value;
}

}  // namespace ubjson
}  // namespace jsonspace
