#include "jsonspace/msgpack.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "byte_io.hpp"
#include "jsonspace/unicode.hpp"

namespace jsonspace {
namespace msgpack {

namespace {

using detail::ByteReader;
using detail::put16;
using detail::put32;
using detail::put64;
using detail::put8;

constexpr std::size_t kMaxDepth = 1000;

void encode_integer(Bytes& out, std::int64_t i) {
  if (i >= 0) {
    std::uint64_t u = static_cast<std::uint64_t>(i);
    if (u < 0x80) {
      put8(out, static_cast<std::uint8_t>(u));
    } else if (u <= 0xFF) {
      put8(out, 0xCC);
      put8(out, static_cast<std::uint8_t>(u));
    } else if (u <= 0xFFFF) {
      put8(out, 0xCD);
      put16(out, static_cast<std::uint16_t>(u));
    } else if (u <= 0xFFFFFFFF) {
      put8(out, 0xCE);
      put32(out, static_cast<std::uint32_t>(u));
    } else {
      put8(out, 0xCF);
      put64(out, u);
    }
  } else {
    if (i >= -32) {
      put8(out, static_cast<std::uint8_t>(i));  // negative fixint
    } else if (i >= -128) {
      put8(out, 0xD0);
      put8(out, static_cast<std::uint8_t>(i));
    } else if (i >= -32768) {
      put8(out, 0xD1);
      put16(out, static_cast<std::uint16_t>(i));
    } else if (i >= -2147483648LL) {
      put8(out, 0xD2);
      put32(out, static_cast<std::uint32_t>(i));
    } else {
      put8(out, 0xD3);
      put64(out, static_cast<std::uint64_t>(i));
    }
  }
}

void encode_string(Bytes& out, const std::string& s) {
  std::size_t len = s.size();
  if (len <= 31) {
    put8(out, static_cast<std::uint8_t>(0xA0 | len));
  } else if (len <= 0xFF) {
    put8(out, 0xD9);
    put8(out, static_cast<std::uint8_t>(len));
  } else if (len <= 0xFFFF) {
    put8(out, 0xDA);
    put16(out, static_cast<std::uint16_t>(len));
  } else if (len <= 0xFFFFFFFF) {
    put8(out, 0xDB);
    put32(out, static_cast<std::uint32_t>(len));
  } else {
    throw EncodeError("string too long for MessagePack");
  }
  out.insert(out.end(), s.begin(), s.end());
}

void encode_value(Bytes& out, const JsonValue& v) {
  switch (v.type()) {
    case JsonValue::Type::Null:
      put8(out, 0xC0);
      return;
    case JsonValue::Type::Boolean:
      put8(out, v.as_boolean() ? 0xC3 : 0xC2);
      return;
    case JsonValue::Type::Number: {
      const JsonNumber& n = v.as_number();
      if (n.is_integer()) {
        encode_integer(out, n.as_integer());
      } else {
        put8(out, 0xCB);
        put64(out, std::bit_cast<std::uint64_t>(n.as_double()));
      }
      return;
    }
    case JsonValue::Type::String:
      encode_string(out, v.as_string());
      return;
    case JsonValue::Type::Array: {
      const auto& elements = v.as_array();
      std::size_t n = elements.size();
      if (n <= 15) {
        put8(out, static_cast<std::uint8_t>(0x90 | n));
      } else if (n <= 0xFFFF) {
        put8(out, 0xDC);
        put16(out, static_cast<std::uint16_t>(n));
      } else if (n <= 0xFFFFFFFF) {
        put8(out, 0xDD);
        put32(out, static_cast<std::uint32_t>(n));
      } else {
        throw EncodeError("array too long for MessagePack");
      }
      for (const auto& element : elements) encode_value(out, element);
      return;
    }
    case JsonValue::Type::Object: {
      const auto& members = v.as_object();
      std::size_t n = members.size();
      if (n <= 15) {
        put8(out, static_cast<std::uint8_t>(0x80 | n));
      } else if (n <= 0xFFFF) {
        put8(out, 0xDE);
        put16(out, static_cast<std::uint16_t>(n));
      } else if (n <= 0xFFFFFFFF) {
        put8(out, 0xDF);
        put32(out, static_cast<std::uint32_t>(n));
      } else {
        throw EncodeError("map too long for MessagePack");
      }
      for (const auto& [key, member] : members) {
        encode_string(out, key);
        encode_value(out, member);
      }
      return;
    }
  }
}

struct Decoder {
  ByteReader reader;

  JsonValue number(double d, std::size_t at) const {
    if (!std::isfinite(d))
      throw DecodeError("non-finite float has no JSON mapping", at);
    return JsonValue(d);
  }

  std::string string_body(std::size_t len) {
    std::size_t at = reader.pos;
    std::string_view body = reader.view(len);
    if (!valid_utf8(body)) throw DecodeError("invalid UTF-8 in string", at);
    return std::string(body);
  }

  JsonValue array_body(std::size_t count, std::size_t depth) {
    JsonArray elements;
    elements.reserve(std::min<std::size_t>(count, 4096));
    for (std::size_t i = 0; i < count; ++i)
      elements.push_back(value(depth + 1));
    return JsonValue(std::move(elements));
  }

  JsonValue map_body(std::size_t count, std::size_t depth) {
    JsonObject members;
    members.reserve(std::min<std::size_t>(count, 4096));
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t key_at = reader.pos;
      std::uint8_t tag = reader.u8();
      std::size_t len;
      if ((tag & 0xE0) == 0xA0)
        len = tag & 0x1F;
      else if (tag == 0xD9)
        len = reader.u8();
      else if (tag == 0xDA)
        len = reader.u16();
      else if (tag == 0xDB)
        len = reader.u32();
      else
        throw DecodeError("non-string map key has no JSON mapping", key_at);
      std::string key = string_body(len);
      if (!seen.insert(key).second)
        throw DecodeError("duplicate map key", key_at);
      members.emplace_back(std::move(key), value(depth + 1));
    }
    return JsonValue(std::move(members));
  }

  JsonValue value(std::size_t depth) {
    if (depth > kMaxDepth)
      throw DecodeError("nesting depth limit exceeded", reader.pos);
    std::size_t at = reader.pos;
    std::uint8_t tag = reader.u8();
    if (tag <= 0x7F) return JsonValue(static_cast<std::int64_t>(tag));
    if (tag >= 0xE0)
      return JsonValue(static_cast<std::int64_t>(static_cast<std::int8_t>(tag)));
    if ((tag & 0xF0) == 0x80) return map_body(tag & 0x0F, depth);
    if ((tag & 0xF0) == 0x90) return array_body(tag & 0x0F, depth);
    if ((tag & 0xE0) == 0xA0) return JsonValue(string_body(tag & 0x1F));
    switch (tag) {
      case 0xC0:
        return JsonValue(nullptr);
      case 0xC2:
        return JsonValue(false);
      case 0xC3:
        return JsonValue(true);
      case 0xCA:
        return number(static_cast<double>(std::bit_cast<float>(reader.u32())), at);
      case 0xCB:
        return number(std::bit_cast<double>(reader.u64()), at);
      case 0xCC:
        return JsonValue(static_cast<std::int64_t>(reader.u8()));
      case 0xCD:
        return JsonValue(static_cast<std::int64_t>(reader.u16()));
      case 0xCE:
        return JsonValue(static_cast<std::int64_t>(reader.u32()));
      case 0xCF: {
        std::uint64_t u = reader.u64();
        if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
          return JsonValue(static_cast<std::int64_t>(u));
        return JsonValue(static_cast<double>(u));
      }
      case 0xD0:
        return JsonValue(static_cast<std::int64_t>(static_cast<std::int8_t>(reader.u8())));
      case 0xD1:
        return JsonValue(static_cast<std::int64_t>(static_cast<std::int16_t>(reader.u16())));
      case 0xD2:
        return JsonValue(static_cast<std::int64_t>(static_cast<std::int32_t>(reader.u32())));
      case 0xD3:
        return JsonValue(static_cast<std::int64_t>(reader.u64()));
      case 0xD9:
        return JsonValue(string_body(reader.u8()));
      case 0xDA:
        return JsonValue(string_body(reader.u16()));
      case 0xDB:
        return JsonValue(string_body(reader.u32()));
      case 0xDC:
        return array_body(reader.u16(), depth);
      case 0xDD:
        return array_body(reader.u32(), depth);
      case 0xDE:
        return map_body(reader.u16(), depth);
      case 0xDF:
        return map_body(reader.u32(), depth);
      case 0xC4:
      case 0xC5:
      case 0xC6:
        throw DecodeError("bin family has no JSON mapping", at);
      case 0xC7:
      case 0xC8:
      case 0xC9:
      case 0xD4:
      case 0xD5:
      case 0xD6:
      case 0xD7:
      case 0xD8:
        throw DecodeError("ext family has no JSON mapping", at);
      default:
        throw DecodeError("reserved type tag", at);
    }
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
  if (!decoder.reader.at_end())
    throw DecodeError("trailing bytes after value", decoder.reader.pos);
  return value;
}

}  // namespace msgpack
}  // namespace jsonspace
