#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "jsonspace/bytes.hpp"
#include "jsonspace/json_value.hpp"

namespace jsonspace {

/// One general-purpose compressor, either the built-in identity pass or a
/// pair of stream-mode child-process commands (read stdin, write stdout).
struct CompressorDescriptor {
  std::string name;
  bool identity = false;
  int level = 0;  // informational; the flag itself lives in the command
  std::vector<std::string> compress_command;
  std::vector<std::string> decompress_command;
};

class CompressError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Compressor {
public:
  explicit Compressor(CompressorDescriptor descriptor,
                      std::chrono::milliseconds timeout =
                          std::chrono::milliseconds{30000});

  const CompressorDescriptor& descriptor() const { return descriptor_; }
  const std::string& name() const { return descriptor_.name; }

  /// Probes the compress command once (spawns it with --version) and
  /// caches the verdict. The identity compressor is always available.
  bool available() const;

  Bytes compress(const Bytes& data) const;
  Bytes decompress(const Bytes& data) const;

private:
  CompressorDescriptor descriptor_;
  std::chrono::milliseconds timeout_;
  mutable std::optional<bool> available_;
};

/// Built-in descriptors. The external tools run at their strongest
/// standard level (-9) in stream mode. The environment variables
/// JSONSPACE_GZIP, JSONSPACE_LZ4 and JSONSPACE_XZ override the tool path.
CompressorDescriptor identity_descriptor();
CompressorDescriptor gzip_descriptor();
CompressorDescriptor lz4_descriptor();
CompressorDescriptor xz_descriptor();

/// Looks up one of the built-in names (identity, gzip, lz4, xz).
std::optional<CompressorDescriptor> builtin_compressor(
    const std::string& name);

/// Reads the "compressors" array of a registry document: each entry has
/// "name", "compress" and "decompress" argv arrays. Entries may redefine
/// built-in names to substitute tools.
std::vector<CompressorDescriptor> compressors_from_registry(
    const JsonValue& registry);

}  // namespace jsonspace
