#include "jsonspace/cbor.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "byte_io.hpp"
#include "jsonspace/unicode.hpp"

namespace jsonspace {
namespace cbor {

namespace {

using detail::ByteReader;
using detail::put16;
using detail::put32;
using detail::put64;
using detail::put8;

constexpr std::size_t kMaxDepth = 1000;

void encode_head(Bytes& out, std::uint8_t major, std::uint64_t arg) {
  std::uint8_t mt = static_cast<std::uint8_t>(major << 5);
  if (arg < 24) {
    put8(out, static_cast<std::uint8_t>(mt | arg));
  } else if (arg <= 0xFF) {
    put8(out, mt | 24);
    put8(out, static_cast<std::uint8_t>(arg));
  } else if (arg <= 0xFFFF) {
    put8(out, mt | 25);
    put16(out, static_cast<std::uint16_t>(arg));
  } else if (arg <= 0xFFFFFFFF) {
    put8(out, mt | 26);
    put32(out, static_cast<std::uint32_t>(arg));
  } else {
    put8(out, mt | 27);
    put64(out, arg);
  }
}

// Exact binary16 conversion; fails (returns false) whenever narrowing
// would change the value, so the caller can fall back to a wider float.
bool to_half(double d, std::uint16_t& bits) {
  float f = static_cast<float>(d);
  if (static_cast<double>(f) != d) return false;
  std::uint32_t fb = std::bit_cast<std::uint32_t>(f);
  std::uint32_t sign = (fb >> 16) & 0x8000;
  int exp = static_cast<int>((fb >> 23) & 0xFF);
  std::uint32_t man = fb & 0x7FFFFF;
  if (exp == 0 && man == 0) {
    bits = static_cast<std::uint16_t>(sign);
    return true;
  }
  if (exp == 0 || exp == 0xFF) return false;  // f32 subnormal, inf, nan
  int e = exp - 127;
  if (e >= -14 && e <= 15) {
    if (man & 0x1FFF) return false;
    bits = static_cast<std::uint16_t>(
        sign | (static_cast<std::uint32_t>(e + 15) << 10) | (man >> 13));
    return true;
  }
  if (e >= -24 && e < -14) {
    std::uint32_t full = 0x800000 | man;
    int shift = -14 - e + 13;
    if (full & ((1u << shift) - 1)) return false;
    bits = static_cast<std::uint16_t>(sign | (full >> shift));
    return true;
  }
  return false;
}

double half_to_double(std::uint16_t h) {
  int sign = h >> 15;
  int exp = (h >> 10) & 0x1F;
  int man = h & 0x3FF;
  double v;
  if (exp == 0)
    v = std::ldexp(man, -24);
  else if (exp == 31)
    v = man ? std::numeric_limits<double>::quiet_NaN()
            : std::numeric_limits<double>::infinity();
  else
    v = std::ldexp(1024 + man, exp - 25);
  return sign ? -v : v;
}

void encode_double(Bytes& out, double d) {
  std::uint16_t half;
  if (to_half(d, half)) {
    put8(out, 0xF9);
    put16(out, half);
    return;
  }
  float f = static_cast<float>(d);
  if (static_cast<double>(f) == d) {
    put8(out, 0xFA);
    put32(out, std::bit_cast<std::uint32_t>(f));
    return;
  }
  put8(out, 0xFB);
  put64(out, std::bit_cast<std::uint64_t>(d));
}

void encode_value(Bytes& out, const JsonValue& v) {
  switch (v.type()) {
    case JsonValue::Type::Null:
      put8(out, 0xF6);
      return;
    case JsonValue::Type::Boolean:
      put8(out, v.as_boolean() ? 0xF5 : 0xF4);
      return;
    case JsonValue::Type::Number: {
      const JsonNumber& n = v.as_number();
      if (n.is_integer()) {
        std::int64_t i = n.as_integer();
        if (i >= 0)
          encode_head(out, 0, static_cast<std::uint64_t>(i));
        else
          encode_head(out, 1, static_cast<std::uint64_t>(-(i + 1)));
      } else {
        encode_double(out, n.as_double());
      }
      return;
    }
    case JsonValue::Type::String: {
      const std::string& s = v.as_string();
      encode_head(out, 3, s.size());
      out.insert(out.end(), s.begin(), s.end());
      return;
    }
    case JsonValue::Type::Array: {
      const auto& elements = v.as_array();
      encode_head(out, 4, elements.size());
      for (const auto& element : elements) encode_value(out, element);
      return;
    }
    case JsonValue::Type::Object: {
      const auto& members = v.as_object();
      encode_head(out, 5, members.size());
      for (const auto& [key, member] : members) {
        encode_head(out, 3, key.size());
        out.insert(out.end(), key.begin(), key.end());
        encode_value(out, member);
      }
      return;
    }
  }
}

struct Decoder {
  ByteReader reader;

  std::uint64_t argument(std::uint8_t info, std::size_t at) {
    if (info < 24) return info;
    switch (info) {
      case 24:
        return reader.u8();
      case 25:
        return reader.u16();
      case 26:
        return reader.u32();
      case 27:
        return reader.u64();
      case 31:
        throw DecodeError("indefinite length not supported", at);
      default:
        throw DecodeError("reserved additional-information value", at);
    }
  }

  JsonValue number(double d, std::size_t at) const {
    if (!std::isfinite(d))
      throw DecodeError("non-finite float has no JSON mapping", at);
    return JsonValue(d);
  }

  std::string text_body(std::uint64_t len, std::size_t at) {
    if (len > reader.data.size() - reader.pos)
      throw DecodeError("string length exceeds input", at);
    std::size_t body_at = reader.pos;
    std::string_view body = reader.view(static_cast<std::size_t>(len));
    if (!valid_utf8(body))
      throw DecodeError("invalid UTF-8 in string", body_at);
    return std::string(body);
  }

  std::string key() {
    std::size_t at = reader.pos;
    std::uint8_t ib = reader.u8();
    if ((ib >> 5) != 3)
      throw DecodeError("non-string map key has no JSON mapping", at);
    return text_body(argument(ib & 0x1F, at), at);
  }

  JsonValue value(std::size_t depth) {
    if (depth > kMaxDepth)
      throw DecodeError("nesting depth limit exceeded", reader.pos);
    std::size_t at = reader.pos;
    std::uint8_t ib = reader.u8();
    std::uint8_t major = ib >> 5;
    std::uint8_t info = ib & 0x1F;
    switch (major) {
      case 0: {
        std::uint64_t u = argument(info, at);
        if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
          return JsonValue(static_cast<std::int64_t>(u));
        return JsonValue(static_cast<double>(u));
      }
      case 1: {
        std::uint64_t u = argument(info, at);
        if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
          return JsonValue(-1 - static_cast<std::int64_t>(u));
        return JsonValue(-1.0 - static_cast<double>(u));
      }
      case 2:
        throw DecodeError("byte string has no JSON mapping", at);
      case 3:
        return JsonValue(text_body(argument(info, at), at));
      case 4: {
        std::uint64_t count = argument(info, at);
        JsonArray elements;
        elements.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 4096)));
        for (std::uint64_t i = 0; i < count; ++i)
          elements.push_back(value(depth + 1));
        return JsonValue(std::move(elements));
      }
      case 5: {
        std::uint64_t count = argument(info, at);
        JsonObject members;
        members.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, 4096)));
        std::unordered_set<std::string> seen;
        for (std::uint64_t i = 0; i < count; ++i) {
          std::size_t key_at = reader.pos;
          std::string k = key();
          if (!seen.insert(k).second)
            throw DecodeError("duplicate map key", key_at);
          members.emplace_back(std::move(k), value(depth + 1));
        }
        return JsonValue(std::move(members));
      }
      case 6:
        throw DecodeError("tag has no JSON mapping", at);
      default: {  // major type 7
        switch (info) {
          case 20:
            return JsonValue(false);
          case 21:
            return JsonValue(true);
          case 22:
            return JsonValue(nullptr);
          case 25:
            return number(half_to_double(reader.u16()), at);
          case 26:
            return number(static_cast<double>(std::bit_cast<float>(reader.u32())), at);
          case 27:
            return number(std::bit_cast<double>(reader.u64()), at);
          case 31:
            throw DecodeError("unexpected break code", at);
          default:
            throw DecodeError("simple value has no JSON mapping", at);
        }
      }
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

}  // namespace cbor
}  // namespace jsonspace
