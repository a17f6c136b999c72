#include <doctest.h>

#include <chrono>

#include "jsonspace/codec.hpp"
#include "jsonspace/minify.hpp"
#include "jsonspace/parse.hpp"
#include "test_support.hpp"

using namespace jsonspace;

TEST_CASE("builtin codecs are self-describing and ordered") {
  auto codecs = builtin_codecs();
  REQUIRE(codecs.size() == 3);
  CHECK(codecs[0].name() == "cbor");
  CHECK(codecs[1].name() == "msgpack");
  CHECK(codecs[2].name() == "ubjson");
  for (const auto& codec : codecs) {
    CHECK(codec.descriptor().builtin);
    CHECK_FALSE(codec.descriptor().schema_driven);
    CHECK(codec.descriptor().sequential);
  }
}

TEST_CASE("roundtrip_verify succeeds on the builtins") {
  JsonValue fixture = parse(read_file(test_data_dir() + "/weather.json"));
  for (const auto& codec : builtin_codecs()) {
    RoundTripReport report = roundtrip_verify(codec, fixture);
    CAPTURE(codec.name());
    CHECK(report.ok);
    CHECK(report.codec == codec.name());
    CHECK(report.encoded_size > 0);
    CHECK_FALSE(report.mismatch.has_value());
    CHECK_FALSE(report.failure.has_value());
  }
}

TEST_CASE("an external cat codec is a JSON identity") {
  CodecDescriptor descriptor;
  descriptor.name = "cat";
  descriptor.encode_command = {"cat"};
  descriptor.decode_command = {"cat"};
  Codec codec = external_codec(descriptor);

  JsonValue fixture = parse(read_file(test_data_dir() + "/weather.json"));
  Bytes encoded = codec.encode(fixture);
  CHECK(encoded.size() == 184);
  CHECK(deep_equal(codec.decode(encoded), fixture));
  CHECK(roundtrip_verify(codec, fixture).ok);
}

TEST_CASE("a lossy external codec is caught by verification") {
  CodecDescriptor descriptor;
  descriptor.name = "lossy";
  descriptor.encode_command = {"cat"};
  // Drops the "tz" member on the way back.
  descriptor.decode_command = {"sed", "s/\"tz\":-25200,//"};
  Codec codec = external_codec(descriptor);

  JsonValue fixture = parse(read_file(test_data_dir() + "/weather.json"));
  RoundTripReport report = roundtrip_verify(codec, fixture);
  CHECK_FALSE(report.ok);
  REQUIRE(report.mismatch.has_value());
  CHECK(report.mismatch->pointer == "/tz");
  CHECK(report.mismatch->actual == "(absent)");
}

TEST_CASE("failing and unspawnable commands surface as failures") {
  CodecDescriptor failing;
  failing.name = "failing";
  failing.encode_command = {"false"};
  failing.decode_command = {"cat"};
  RoundTripReport report =
      roundtrip_verify(external_codec(failing), parse("1"));
  CHECK_FALSE(report.ok);
  REQUIRE(report.failure.has_value());

  CodecDescriptor missing;
  missing.name = "missing";
  missing.encode_command = {"/nonexistent/tool"};
  missing.decode_command = {"cat"};
  RoundTripReport spawn =
      roundtrip_verify(external_codec(missing), parse("1"));
  CHECK_FALSE(spawn.ok);
  REQUIRE(spawn.failure.has_value());
}

TEST_CASE("external codecs honour their timeout") {
  CodecDescriptor slow;
  slow.name = "slow";
  slow.encode_command = {"sh", "-c", "sleep 5"};
  slow.decode_command = {"cat"};
  ExternalCodecOptions options;
  options.timeout = std::chrono::milliseconds(200);
  Codec codec = external_codec(slow, options);
  auto start = std::chrono::steady_clock::now();
  CHECK_THROWS_AS((void)codec.encode(parse("1")), CodecError);
  auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed < std::chrono::seconds(3));
}

TEST_CASE("undecodable decoder output becomes a codec error") {
  CodecDescriptor garbage;
  garbage.name = "garbage";
  garbage.encode_command = {"cat"};
  garbage.decode_command = {"sh", "-c", "echo not json"};
  RoundTripReport report =
      roundtrip_verify(external_codec(garbage), parse("[1]"));
  CHECK_FALSE(report.ok);
  REQUIRE(report.failure.has_value());
}

TEST_CASE("registry entries build working codecs") {
  JsonValue registry = parse(R"({
    "codecs": [
      {"name": "idjson", "encode": ["cat"], "decode": ["cat"],
       "schema_driven": true, "sequential": false}
    ]
  })");
  auto codecs = codecs_from_registry(registry);
  REQUIRE(codecs.size() == 1);
  CHECK(codecs[0].name() == "idjson");
  CHECK(codecs[0].descriptor().schema_driven);
  CHECK_FALSE(codecs[0].descriptor().sequential);
  CHECK_FALSE(codecs[0].descriptor().builtin);
  CHECK(roundtrip_verify(codecs[0], parse("[1,2,3]")).ok);
}

TEST_CASE("registries reject collisions and malformed entries") {
  CHECK_THROWS(codecs_from_registry(parse(
      R"({"codecs":[{"name":"cbor","encode":["cat"],"decode":["cat"]}]})")));
  CHECK_THROWS(codecs_from_registry(parse(
      R"({"codecs":[{"name":"JSON","encode":["cat"],"decode":["cat"]}]})")));
  CHECK_THROWS(codecs_from_registry(parse(
      R"({"codecs":[{"name":"x","encode":[],"decode":["cat"]}]})")));
  CHECK_THROWS(codecs_from_registry(parse(
      R"({"codecs":[{"name":"x","decode":["cat"]}]})")));
  CHECK_THROWS(codecs_from_registry(parse(
      R"({"codecs":[{"name":"x","encode":"cat","decode":["cat"]}]})")));
  CHECK_THROWS(codecs_from_registry(parse(
      R"({"codecs":[{"name":"x","encode":["cat"],"decode":["cat"]},
                    {"name":"x","encode":["cat"],"decode":["cat"]}]})")));
}

TEST_CASE("an empty registry yields no codecs") {
  CHECK(codecs_from_registry(parse("{}")).empty());
  CHECK(codecs_from_registry(parse(R"({"codecs":[]})")).empty());
}
