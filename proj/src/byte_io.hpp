#pragma once

#include <cstdint>
#include <string_view>

#include "jsonspace/bytes.hpp"

namespace jsonspace {
namespace detail {

inline void put8(Bytes& out, std::uint8_t v) { out.push_back(v); }

inline void put16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void put32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void put64(Bytes& out, std::uint64_t v) {
  put32(out, static_cast<std::uint32_t>(v >> 32));
  put32(out, static_cast<std::uint32_t>(v));
}

// Big-endian cursor over an input buffer; every read is bounds-checked
// and truncation surfaces as DecodeError with the current offset.
struct ByteReader {
  const Bytes& data;
  std::size_t pos = 0;

  bool at_end() const { return pos >= data.size(); }

  void require(std::size_t n) const {
    if (data.size() - pos < n)
      throw DecodeError("unexpected end of input", pos);
  }

  std::uint8_t u8() {
    require(1);
    return data[pos++];
  }

  std::uint16_t u16() {
    require(2);
    std::uint16_t v = static_cast<std::uint16_t>(
        (static_cast<std::uint16_t>(data[pos]) << 8) | data[pos + 1]);
    pos += 2;
    return v;
  }

  std::uint32_t u32() {
    require(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data[pos + static_cast<std::size_t>(i)];
    pos += 4;
    return v;
  }

  std::uint64_t u64() {
    require(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | data[pos + static_cast<std::size_t>(i)];
    pos += 8;
    return v;
  }

  std::string_view view(std::size_t n) {
    require(n);
    auto* p = reinterpret_cast<const char*>(data.data()) + pos;
    pos += n;
    return std::string_view(p, n);
  }
};

}  // namespace detail
}  // namespace jsonspace
