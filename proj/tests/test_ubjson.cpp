#include <doctest.h>

#include "jsonspace/minify.hpp"
#include "jsonspace/parse.hpp"
#include "jsonspace/ubjson.hpp"
#include "kat_vectors.hpp"
#include "test_support.hpp"

using namespace jsonspace;

TEST_CASE("encoding matches the reference vectors") {
  for (const auto& vector : kKatVectors) {
    if (vector.ubjson.empty()) continue;
    CAPTURE(vector.json);
    CHECK(to_hex(ubjson::encode(parse(vector.json))) == vector.ubjson);
  }
}

TEST_CASE("decoding inverts the reference vectors") {
  for (const auto& vector : kKatVectors) {
    if (vector.ubjson.empty()) continue;
    CAPTURE(vector.json);
    CHECK(deep_equal(ubjson::decode(from_hex(vector.ubjson)),
                     parse(vector.json)));
  }
}

TEST_CASE("round trip holds for generated documents") {
  DocumentGenerator generator(606060);
  for (int i = 0; i < 500; ++i) {
    JsonValue value = generator.next(8);
    JsonValue back = ubjson::decode(ubjson::encode(value));
    CHECK(deep_equal(value, back));
  }
}

TEST_CASE("integer markers step up with magnitude") {
  CHECK(to_hex(ubjson::encode(JsonValue(127))) == "697f");
  CHECK(to_hex(ubjson::encode(JsonValue(128))) == "5580");
  CHECK(to_hex(ubjson::encode(JsonValue(255))) == "55ff");
  CHECK(to_hex(ubjson::encode(JsonValue(256))) == "490100");
  CHECK(to_hex(ubjson::encode(JsonValue(32767))) == "497fff");
  CHECK(to_hex(ubjson::encode(JsonValue(32768))) == "6c00008000");
  CHECK(to_hex(ubjson::encode(JsonValue(std::int64_t{2147483648LL}))) ==
        "4c0000000080000000");
  CHECK(to_hex(ubjson::encode(JsonValue(-128))) == "6980");
  CHECK(to_hex(ubjson::encode(JsonValue(-129))) == "49ff7f");
}

TEST_CASE("float32 is used only when exact") {
  CHECK(to_hex(ubjson::encode(JsonValue(1.5))) == "643fc00000");
  CHECK(to_hex(ubjson::encode(JsonValue(0.1))) == "443fb999999999999a");
  CHECK(to_hex(ubjson::encode(JsonValue(0.0))) == "6400000000");
  // Integral-valued double stays a float, never an int marker.
  CHECK(to_hex(ubjson::encode(JsonValue(2.0))) == "6440000000");
}

TEST_CASE("noop bytes are skipped wherever a value may start") {
  CHECK(deep_equal(ubjson::decode(from_hex("4e4e5a")), parse("null")));
  CHECK(deep_equal(ubjson::decode(from_hex("5b4e69014e69024e5d")),
                   parse("[1,2]")));
  CHECK(deep_equal(ubjson::decode(from_hex("5a4e4e")), parse("null")));
}

TEST_CASE("char values decode as one-character strings") {
  CHECK(deep_equal(ubjson::decode(from_hex("4361")), parse("\"a\"")));
  CHECK(deep_equal(ubjson::decode(from_hex("5b436143625d")),
                   parse(R"(["a","b"])")));
  // Chars above ASCII are not valid UTF-8 on their own.
  CHECK_THROWS_AS(ubjson::decode(from_hex("43ff")), DecodeError);
}

TEST_CASE("high-precision numbers are not supported") {
  // 'H' with length 3, "1.0"
  CHECK_THROWS_AS(ubjson::decode(from_hex("486903312e30")), DecodeError);
}

TEST_CASE("optimized container headers are not supported") {
  CHECK_THROWS_AS(ubjson::decode(from_hex("5b2469016903")), DecodeError);
  CHECK_THROWS_AS(ubjson::decode(from_hex("5b2369036901690269035d")),
                  DecodeError);
  CHECK_THROWS_AS(ubjson::decode(from_hex("7b246906")), DecodeError);
}

TEST_CASE("string lengths must be non-negative and present") {
  CHECK_THROWS_AS(ubjson::decode(from_hex("5369ff")), DecodeError);  // -1
  CHECK_THROWS_AS(ubjson::decode(from_hex("5369056869")), DecodeError);
  CHECK_THROWS_AS(ubjson::decode(from_hex("53")), DecodeError);
}

TEST_CASE("object keys carry no S marker and must be unique") {
  CHECK(deep_equal(ubjson::decode(from_hex("7b69016169017d")),
                   parse(R"({"a":1})")));
  CHECK_THROWS_AS(ubjson::decode(from_hex("7b690161690169016169027d")),
                  DecodeError);
}

TEST_CASE("strings must be valid UTF-8") {
  CHECK_THROWS_AS(ubjson::decode(from_hex("536902fffe")), DecodeError);
}

TEST_CASE("non-finite doubles cannot decode") {
  CHECK_THROWS_AS(ubjson::decode(from_hex("447ff0000000000000")), DecodeError);
  CHECK_THROWS_AS(ubjson::decode(from_hex("647f800000")), DecodeError);
}

TEST_CASE("truncation, trailing content and depth are guarded") {
  CHECK_THROWS_AS(ubjson::decode(from_hex("5b")), DecodeError);
  CHECK_THROWS_AS(ubjson::decode(from_hex("49ff")), DecodeError);
  CHECK_THROWS_AS(ubjson::decode(from_hex("5a5a")), DecodeError);
  CHECK_THROWS_AS(ubjson::decode(Bytes{}), DecodeError);
  Bytes bomb;
  for (int i = 0; i < 2000; ++i) bomb.push_back('[');
  bomb.push_back('Z');
  CHECK_THROWS_AS(ubjson::decode(bomb), DecodeError);
}

TEST_CASE("trailing noop bytes after the document are fine") {
  CHECK(deep_equal(ubjson::decode(from_hex("5a4e4e4e")), parse("null")));
}
