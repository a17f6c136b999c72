#include <doctest.h>

#include "jsonspace/json_value.hpp"
#include "jsonspace/parse.hpp"
#include "test_support.hpp"

using namespace jsonspace;

TEST_CASE("deep_equal treats objects as maps") {
  JsonValue a = parse(R"({"x":1,"y":2})");
  JsonValue b = parse(R"({"y":2,"x":1})");
  CHECK(deep_equal(a, b));
}

TEST_CASE("deep_equal keeps arrays ordered") {
  CHECK_FALSE(deep_equal(parse("[1,2]"), parse("[2,1]")));
  CHECK(deep_equal(parse("[1,2]"), parse("[1,2]")));
}

TEST_CASE("deep_equal compares numbers mathematically") {
  CHECK(deep_equal(parse("1"), parse("1.0")));
  CHECK(deep_equal(parse("-0.0"), parse("0")));
  CHECK(deep_equal(parse("1152921504606846976"), parse("1.152921504606846976e18")));
  CHECK_FALSE(deep_equal(parse("1"), parse("1.5")));
  // 2^63 as a double is exactly one past the int64 range.
  CHECK_FALSE(deep_equal(parse("9223372036854775807"), parse("9.223372036854775808e18")));
  // 2^53 + 1 is not representable as a double; its double neighbour is 2^53.
  CHECK_FALSE(deep_equal(parse("9007199254740993"), parse("9007199254740992.0")));
  CHECK(deep_equal(parse("9007199254740992"), parse("9007199254740992.0")));
  // int64 min is a power of two, hence exact as a double.
  CHECK(deep_equal(parse("-9223372036854775808"), parse("-9.223372036854775808e18")));
}

TEST_CASE("deep_equal rejects missing and extra members") {
  CHECK_FALSE(deep_equal(parse(R"({"x":1})"), parse(R"({"x":1,"y":2})")));
  CHECK_FALSE(deep_equal(parse(R"({"x":1,"y":2})"), parse(R"({"x":1})")));
  CHECK_FALSE(deep_equal(parse(R"({"x":1})"), parse(R"({"y":1})")));
}

TEST_CASE("first_divergence reports the deepest differing pointer") {
  JsonValue a = parse(R"({"data":[{"name":"ox03"},{"name":"ox04"}]})");
  JsonValue b = parse(R"({"data":[{"name":"ox03"},{"name":"ox05"}]})");
  auto divergence = first_divergence(a, b);
  REQUIRE(divergence.has_value());
  CHECK(divergence->pointer == "/data/1/name");
}

TEST_CASE("first_divergence flags dropped members") {
  JsonValue a = parse(R"({"keep":1,"drop":2})");
  JsonValue b = parse(R"({"keep":1})");
  auto divergence = first_divergence(a, b);
  REQUIRE(divergence.has_value());
  CHECK(divergence->pointer == "/drop");
  CHECK(divergence->actual == "(absent)");
}

TEST_CASE("first_divergence flags array length changes") {
  auto divergence = first_divergence(parse("[1,2,3]"), parse("[1,2]"));
  REQUIRE(divergence.has_value());
  CHECK(divergence->pointer == "/2");
}

TEST_CASE("first_divergence is empty for equal trees") {
  JsonValue fixture = parse(read_file(test_data_dir() + "/weather.json"));
  CHECK_FALSE(first_divergence(fixture, fixture).has_value());
}

TEST_CASE("find locates members, storage keeps insertion order") {
  JsonValue value = parse(R"({"b":2,"a":1})");
  REQUIRE(value.find("a") != nullptr);
  CHECK(value.as_object()[0].first == "b");
  CHECK(value.find("missing") == nullptr);
}
