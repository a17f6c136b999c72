#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jsonspace/bytes.hpp"
#include "jsonspace/json_value.hpp"

namespace jsonspace {

/// Identity and invocation details of one serialization format.
struct CodecDescriptor {
  std::string name;
  bool builtin = false;
  /// Formats that serialize against an external schema; kept in their own
  /// statistics group since their sizes aren't comparable to
  /// self-describing formats.
  bool schema_driven = false;
  /// Layout classification: true for linear stream encodings, false for
  /// pointer-based (random access) encodings. Informational.
  bool sequential = true;
  /// External codecs only: argv for the encode / decode child processes.
  std::vector<std::string> encode_command;
  std::vector<std::string> decode_command;
};

/// External codec invocation failed: nonzero exit, timeout, unspawnable
/// command, or undecodable output.
class CodecError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A serialization format bound to its encode/decode implementations.
/// encode takes the document tree, decode must reproduce a deep-equal tree
/// for the round trip to count. Both throw on failure (EncodeError,
/// DecodeError, CodecError) and never return garbage.
class Codec {
public:
  using EncodeFn = std::function<Bytes(const JsonValue&)>;
  using DecodeFn = std::function<JsonValue(const Bytes&)>;

  Codec(CodecDescriptor descriptor, EncodeFn encode, DecodeFn decode)
      : descriptor_(std::move(descriptor)),
        encode_(std::move(encode)),
        decode_(std::move(decode)) {}

  const CodecDescriptor& descriptor() const { return descriptor_; }
  const std::string& name() const { return descriptor_.name; }

  Bytes encode(const JsonValue& value) const { return encode_(value); }
  JsonValue decode(const Bytes& data) const { return decode_(data); }

private:
  CodecDescriptor descriptor_;
  EncodeFn encode_;
  DecodeFn decode_;
};

Codec msgpack_codec();
Codec cbor_codec();
Codec ubjson_codec();

/// The three built-in codecs in canonical order: cbor, msgpack, ubjson.
std::vector<Codec> builtin_codecs();

struct ExternalCodecOptions {
  std::chrono::milliseconds timeout{30000};
};

/// Wraps a pair of child-process commands as a codec. The encode command
/// receives the minified UTF-8 document on stdin and must write the
/// encoded bytes to stdout; the decode command receives those bytes and
/// must write UTF-8 JSON. Exit status 0 means success, anything else (or
/// a timeout, or stdout that fails to parse on decode) becomes CodecError.
Codec external_codec(CodecDescriptor descriptor,
                     ExternalCodecOptions options = {});

/// Reads the "codecs" array of a registry document: each entry has "name",
/// "encode" and "decode" argv arrays, and optional boolean "schema_driven"
/// and "sequential" flags. Throws std::runtime_error on a malformed entry
/// or a name that collides with a built-in codec.
std::vector<Codec> codecs_from_registry(const JsonValue& registry,
                                        ExternalCodecOptions options = {});

/// Result of one encode-decode-compare cycle.
struct RoundTripReport {
  std::string codec;
  bool ok = false;
  std::uint64_t encoded_size = 0;       // set when encode succeeded
  std::optional<Divergence> mismatch;   // decode succeeded but tree differs
  std::optional<std::string> failure;   // codec raised; human-readable why
};

/// Encodes, decodes, deep-compares. ok is true only when every step
/// succeeded and the decoded tree is deep-equal to the input; any codec
/// exception is captured in `failure` instead of propagating.
RoundTripReport roundtrip_verify(const Codec& codec, const JsonValue& value);

}  // namespace jsonspace
