#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jsonspace {

using Bytes = std::vector<std::uint8_t>;

/// Thrown by the binary decoders on malformed or unsupported input.
/// `offset` is the byte position the decoder was looking at.
class DecodeError : public std::runtime_error {
public:
  DecodeError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Thrown by the binary encoders for values the target format cannot hold.
class EncodeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace jsonspace
