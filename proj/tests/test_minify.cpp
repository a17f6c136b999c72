#include <doctest.h>

#include <cstdint>
#include <limits>

#include "jsonspace/minify.hpp"
#include "jsonspace/parse.hpp"
#include "test_support.hpp"

using namespace jsonspace;

TEST_CASE("integer rendering") {
  CHECK(number_to_string(JsonNumber{std::int64_t{0}}) == "0");
  CHECK(number_to_string(JsonNumber{std::int64_t{-1}}) == "-1");
  CHECK(number_to_string(JsonNumber{std::int64_t{9223372036854775807LL}}) ==
        "9223372036854775807");
  CHECK(number_to_string(
            JsonNumber{std::numeric_limits<std::int64_t>::min()}) ==
        "-9223372036854775808");
}

TEST_CASE("double rendering picks the shortest round-trip form") {
  CHECK(number_to_string(JsonNumber{0.1}) == "0.1");
  CHECK(number_to_string(JsonNumber{1.5}) == "1.5");
  CHECK(number_to_string(JsonNumber{29.951}) == "29.951");
  CHECK(number_to_string(JsonNumber{-90.0715}) == "-90.0715");
  CHECK(number_to_string(JsonNumber{282.55}) == "282.55");
  CHECK(number_to_string(JsonNumber{65504.0}) == "65504");
  CHECK(number_to_string(JsonNumber{1.0}) == "1");
}

TEST_CASE("double rendering switches notation like a JS engine") {
  CHECK(number_to_string(JsonNumber{1e21}) == "1e+21");
  CHECK(number_to_string(JsonNumber{1e20}) == "100000000000000000000");
  CHECK(number_to_string(JsonNumber{1e100}) == "1e+100");
  CHECK(number_to_string(JsonNumber{1e-7}) == "1e-7");
  CHECK(number_to_string(JsonNumber{0.000001}) == "0.000001");
  CHECK(number_to_string(JsonNumber{5e-324}) == "5e-324");
  CHECK(number_to_string(JsonNumber{1.7976931348623157e308}) ==
        "1.7976931348623157e+308");
  CHECK(number_to_string(JsonNumber{123.456}) == "123.456");
  CHECK(number_to_string(JsonNumber{1.5e-7}) == "1.5e-7");
  CHECK(number_to_string(JsonNumber{2.5e21}) == "2.5e+21");
}

TEST_CASE("negative zero renders as zero") {
  CHECK(number_to_string(JsonNumber{-0.0}) == "0");
}

TEST_CASE("minify strips whitespace and nothing else") {
  JsonValue value = parse(" {\n  \"a\" : [ 1 , 2 ] ,\t\"b\" : null }\r\n");
  CHECK(minify(value) == R"({"a":[1,2],"b":null})");
}

TEST_CASE("string escaping in minified output") {
  CHECK(minify(JsonValue("quote\" slash\\ end")) ==
        "\"quote\\\" slash\\\\ end\"");
  CHECK(minify(JsonValue(std::string("tab\t nl\n cr\r bs\b ff\f"))) ==
        "\"tab\\t nl\\n cr\\r bs\\b ff\\f\"");
  CHECK(minify(JsonValue(std::string("ctl\x01"))) == "\"ctl\\u0001\"");
  CHECK(minify(JsonValue(std::string("caf\xc3\xa9"))) ==
        "\"caf\xc3\xa9\"");
}

TEST_CASE("well-known byte sizes") {
  CHECK(minified_byte_size(parse(R"({"foo":"bar"})")) == 13);
  CHECK(minified_byte_size(parse("true")) == 4);
  CHECK(minified_byte_size(parse("false")) == 5);
  CHECK(minified_byte_size(parse("null")) == 4);
  CHECK(minified_byte_size(parse("\"ab\"")) == 4);
  CHECK(minified_byte_size(parse("{}")) == 2);
  CHECK(minified_byte_size(parse("[]")) == 2);
}

TEST_CASE("minified_byte_size always equals the rendered length") {
  DocumentGenerator generator(2024);
  for (int i = 0; i < 300; ++i) {
    JsonValue value = generator.next(6);
    CHECK(minified_byte_size(value) == minify(value).size());
  }
}

TEST_CASE("the fixture minifies to its canonical 184 bytes") {
  std::string text = read_file(test_data_dir() + "/weather.json");
  JsonValue value = parse(text);
  CHECK(minify(value) == text);
  CHECK(minified_byte_size(value) == 184);
}
