#include "jsonspace/compress.hpp"

#include <cstdlib>
#include <stdexcept>

#include "jsonspace/subprocess.hpp"

namespace jsonspace {

namespace {

std::string tool_or_env(const char* env_var, const char* fallback) {
  const char* value = std::getenv(env_var);
  return value && *value ? value : fallback;
}

std::string stderr_excerpt(const ProcessResult& result) {
  std::string text = result.error_output;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  if (text.size() > 200) {
    text.resize(197);
    text += "...";
  }
  if (text.empty()) return "";
  return ": " + text;
}

}  // namespace

CompressorDescriptor identity_descriptor() {
  CompressorDescriptor d;
  d.name = "identity";
  d.identity = true;
  return d;
}

CompressorDescriptor gzip_descriptor() {
  CompressorDescriptor d;
  d.name = "gzip";
  d.level = 9;
  std::string tool = tool_or_env("JSONSPACE_GZIP", "gzip");
  d.compress_command = {tool, "-9", "-c"};
  d.decompress_command = {tool, "-d", "-c"};
  return d;
}

CompressorDescriptor lz4_descriptor() {
  CompressorDescriptor d;
  d.name = "lz4";
  d.level = 9;
  std::string tool = tool_or_env("JSONSPACE_LZ4", "lz4");
  d.compress_command = {tool, "-9", "-c"};
  d.decompress_command = {tool, "-d", "-c"};
  return d;
}

CompressorDescriptor xz_descriptor() {
  CompressorDescriptor d;
  d.name = "xz";
  d.level = 9;
  std::string tool = tool_or_env("JSONSPACE_XZ", "xz");
  d.compress_command = {tool, "-9", "-c"};
  d.decompress_command = {tool, "-d", "-c"};
  return d;
}

std::optional<CompressorDescriptor> builtin_compressor(
    const std::string& name) {
  if (name == "identity") return identity_descriptor();
  if (name == "gzip") return gzip_descriptor();
  if (name == "lz4") return lz4_descriptor();
  if (name == "xz") return xz_descriptor();
  return std::nullopt;
}

Compressor::Compressor(CompressorDescriptor descriptor,
                       std::chrono::milliseconds timeout)
    : descriptor_(std::move(descriptor)), timeout_(timeout) {}

bool Compressor::available() const {
  if (descriptor_.identity) return true;
  if (!available_) {
    // Spawnability is the signal; a tool that exists but dislikes
    // --version still proves it can be executed.
    try {
      ProcessResult probe =
          run_process({descriptor_.compress_command.front(), "--version"}, {},
                      std::chrono::milliseconds{5000});
      available_ = !probe.timed_out && probe.exit_code != 127;
    } catch (const ProcessError&) {
      available_ = false;
    }
  }
  return *available_;
}

Bytes Compressor::compress(const Bytes& data) const {
  if (descriptor_.identity) return data;
  ProcessResult result =
      run_process(descriptor_.compress_command, data, timeout_);
  if (result.timed_out)
    throw CompressError(descriptor_.name + " compression timed out");
  if (result.exit_code == 127)
    throw CompressError(descriptor_.name + " tool not found");
  if (result.exit_code != 0)
    throw CompressError(descriptor_.name + " compression exited with status " +
                        std::to_string(result.exit_code) +
                        stderr_excerpt(result));
  return std::move(result.output);
}

Bytes Compressor::decompress(const Bytes& data) const {
  if (descriptor_.identity) return data;
  ProcessResult result =
      run_process(descriptor_.decompress_command, data, timeout_);
  if (result.timed_out)
    throw CompressError(descriptor_.name + " decompression timed out");
  if (result.exit_code == 127)
    throw CompressError(descriptor_.name + " tool not found");
  if (result.exit_code != 0)
    throw CompressError(descriptor_.name +
                        " decompression exited with status " +
                        std::to_string(result.exit_code) +
                        stderr_excerpt(result));
  return std::move(result.output);
}

std::vector<CompressorDescriptor> compressors_from_registry(
    const JsonValue& registry) {
  std::vector<CompressorDescriptor> out;
  const JsonValue* list = registry.find("compressors");
  if (!list) return out;
  if (!list->is_array())
    throw std::runtime_error("registry: \"compressors\" must be an array");

  auto string_list = [](const JsonValue& value, const std::string& what) {
    if (!value.is_array())
      throw std::runtime_error(what + " must be an array of strings");
    std::vector<std::string> items;
    for (const auto& element : value.as_array()) {
      if (!element.is_string())
        throw std::runtime_error(what + " must be an array of strings");
      items.push_back(element.as_string());
    }
    if (items.empty()) throw std::runtime_error(what + " must not be empty");
    return items;
  };

  for (const auto& entry : list->as_array()) {
    if (!entry.is_object())
      throw std::runtime_error("registry: compressor entries must be objects");
    const JsonValue* name = entry.find("name");
    if (!name || !name->is_string())
      throw std::runtime_error(
          "registry: compressor entry needs a string \"name\"");
    CompressorDescriptor d;
    d.name = name->as_string();
    const JsonValue* comp = entry.find("compress");
    const JsonValue* decomp = entry.find("decompress");
    if (!comp || !decomp)
      throw std::runtime_error("registry: compressor \"" + d.name +
                               "\" needs \"compress\" and \"decompress\"");
    d.compress_command = string_list(*comp, "registry: \"compress\"");
    d.decompress_command = string_list(*decomp, "registry: \"decompress\"");
    if (const JsonValue* level = entry.find("level")) {
      if (!level->is_number() || !level->as_number().is_integer())
        throw std::runtime_error("registry: \"level\" must be an integer");
      d.level = static_cast<int>(level->as_number().as_integer());
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace jsonspace
