#include "jsonspace/codec.hpp"

#include <stdexcept>
#include <unordered_set>

#include "jsonspace/cbor.hpp"
#include "jsonspace/minify.hpp"
#include "jsonspace/msgpack.hpp"
#include "jsonspace/parse.hpp"
#include "jsonspace/subprocess.hpp"
#include "jsonspace/ubjson.hpp"

namespace jsonspace {

namespace {

CodecDescriptor builtin_descriptor(std::string name) {
  CodecDescriptor d;
  d.name = std::move(name);
  d.builtin = true;
  d.schema_driven = false;
  d.sequential = true;
  return d;
}

std::string join_argv(const std::vector<std::string>& argv) {
  std::string out;
  for (const auto& arg : argv) {
    if (!out.empty()) out += ' ';
    out += arg;
  }
  return out;
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

Bytes run_stage(const std::string& codec, const char* stage,
                const std::vector<std::string>& command, const Bytes& input,
                std::chrono::milliseconds timeout) {
  ProcessResult result = run_process(command, input, timeout);
  if (result.timed_out)
    throw CodecError(codec + " " + stage + " timed out (" +
                     join_argv(command) + ")");
  if (result.exit_code == 127)
    throw CodecError(codec + " " + stage + " could not be spawned (" +
                     join_argv(command) + ")");
  if (result.exit_code != 0)
    throw CodecError(codec + " " + stage + " exited with status " +
                     std::to_string(result.exit_code) +
                     stderr_excerpt(result));
  return std::move(result.output);
}

}  // namespace

Codec msgpack_codec() {
  return Codec(builtin_descriptor("msgpack"),
               [](const JsonValue& v) { return msgpack::encode(v); },
               [](const Bytes& b) { return msgpack::decode(b); });
}

Codec cbor_codec() {
  return Codec(builtin_descriptor("cbor"),
               [](const JsonValue& v) { return cbor::encode(v); },
               [](const Bytes& b) { return cbor::decode(b); });
}

Codec ubjson_codec() {
  return Codec(builtin_descriptor("ubjson"),
               [](const JsonValue& v) { return ubjson::encode(v); },
               [](const Bytes& b) { return ubjson::decode(b); });
}

std::vector<Codec> builtin_codecs() {
  std::vector<Codec> out;
  out.push_back(cbor_codec());
  out.push_back(msgpack_codec());
  out.push_back(ubjson_codec());
  return out;
}

Codec external_codec(CodecDescriptor descriptor, ExternalCodecOptions options) {
  descriptor.builtin = false;
  if (descriptor.encode_command.empty() || descriptor.decode_command.empty())
    throw std::runtime_error("external codec \"" + descriptor.name +
                             "\" needs encode and decode commands");
  std::string name = descriptor.name;
  auto encode_command = descriptor.encode_command;
  auto decode_command = descriptor.decode_command;
  auto timeout = options.timeout;

  Codec::EncodeFn encode = [name, encode_command,
                            timeout](const JsonValue& value) -> Bytes {
    std::string text = minify(value);
    Bytes input(text.begin(), text.end());
    return run_stage(name, "encoder", encode_command, input, timeout);
  };
  Codec::DecodeFn decode = [name, decode_command,
                            timeout](const Bytes& data) -> JsonValue {
    Bytes output = run_stage(name, "decoder", decode_command, data, timeout);
    std::string_view text(reinterpret_cast<const char*>(output.data()),
                          output.size());
    try {
      return parse(text);
    } catch (const ParseError& e) {
      throw CodecError(name + " decoder produced invalid JSON (" + e.what() +
                       ")");
    }
  };
  return Codec(std::move(descriptor), std::move(encode), std::move(decode));
}

namespace {

std::vector<std::string> string_list(const JsonValue& value,
                                     const std::string& what) {
  if (!value.is_array())
    throw std::runtime_error(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& element : value.as_array()) {
    if (!element.is_string())
      throw std::runtime_error(what + " must be an array of strings");
    out.push_back(element.as_string());
  }
  if (out.empty()) throw std::runtime_error(what + " must not be empty");
  return out;
}

bool flag_or(const JsonValue& entry, std::string_view key, bool fallback) {
  const JsonValue* v = entry.find(key);
  if (!v) return fallback;
  if (!v->is_boolean())
    throw std::runtime_error("registry flag \"" + std::string(key) +
                             "\" must be a boolean");
  return v->as_boolean();
}

}  // namespace

std::vector<Codec> codecs_from_registry(const JsonValue& registry,
                                        ExternalCodecOptions options) {
  std::vector<Codec> out;
  const JsonValue* list = registry.find("codecs");
  if (!list) return out;
  if (!list->is_array())
    throw std::runtime_error("registry: \"codecs\" must be an array");

  std::unordered_set<std::string> taken{"cbor", "msgpack", "ubjson", "JSON"};
  for (const auto& entry : list->as_array()) {
    if (!entry.is_object())
      throw std::runtime_error("registry: codec entries must be objects");
    const JsonValue* name = entry.find("name");
    if (!name || !name->is_string())
      throw std::runtime_error("registry: codec entry needs a string \"name\"");
    CodecDescriptor d;
    d.name = name->as_string();
    if (!taken.insert(d.name).second)
      throw std::runtime_error("registry: codec name \"" + d.name +
                               "\" already taken");
    const JsonValue* enc = entry.find("encode");
    const JsonValue* dec = entry.find("decode");
    if (!enc || !dec)
      throw std::runtime_error("registry: codec \"" + d.name +
                               "\" needs \"encode\" and \"decode\" commands");
    d.encode_command = string_list(*enc, "registry: \"encode\"");
    d.decode_command = string_list(*dec, "registry: \"decode\"");
    d.schema_driven = flag_or(entry, "schema_driven", false);
    d.sequential = flag_or(entry, "sequential", true);
    out.push_back(external_codec(std::move(d), options));
  }
  return out;
}

RoundTripReport roundtrip_verify(const Codec& codec, const JsonValue& value) {
  RoundTripReport report;
  report.codec = codec.name();
  try {
    Bytes encoded = codec.encode(value);
    report.encoded_size = encoded.size();
    JsonValue decoded = codec.decode(encoded);
    report.mismatch = first_divergence(value, decoded);
    report.ok = !report.mismatch.has_value();
  } catch (const std::exception& e) {
    report.ok = false;
    report.failure = e.what();
  }
  return report;
}

}  // namespace jsonspace
