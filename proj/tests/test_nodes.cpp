#include <doctest.h>

#include "jsonspace/nodes.hpp"
#include "jsonspace/parse.hpp"
#include "test_support.hpp"

using namespace jsonspace;

TEST_CASE("single scalar document is one root node") {
  auto nodes = enumerate_nodes(parse("42"));
  REQUIRE(nodes.size() == 1);
  CHECK(nodes[0].pointer == "/");
  CHECK(nodes[0].kind == NodeKind::Numeric);
  CHECK(nodes[0].level == 1);
  CHECK(nodes[0].byte_size == 2);
  CHECK_FALSE(nodes[0].duplicate_of.has_value());
}

TEST_CASE("pre-order flattening with levels and sizes") {
  auto nodes = enumerate_nodes(parse(R"({"a":[1,{"b":"xy"}]})"));
  REQUIRE(nodes.size() == 5);
  CHECK(nodes[0].pointer == "/");
  CHECK(nodes[1].pointer == "/a");
  CHECK(nodes[2].pointer == "/a/0");
  CHECK(nodes[3].pointer == "/a/1");
  CHECK(nodes[4].pointer == "/a/1/b");
  CHECK(nodes[0].level == 1);
  CHECK(nodes[1].level == 2);
  CHECK(nodes[2].level == 3);
  CHECK(nodes[3].level == 3);
  CHECK(nodes[4].level == 4);
  CHECK(nodes[4].byte_size == 4);    // "xy"
  CHECK(nodes[3].byte_size == 10);   // {"b":"xy"}
  CHECK(nodes[2].byte_size == 1);
  CHECK(nodes[1].byte_size == 14);   // [1,{"b":"xy"}]
  CHECK(nodes[0].byte_size == 20);
  CHECK(nodes[0].kind == NodeKind::Structural);
  CHECK(nodes[2].kind == NodeKind::Numeric);
  CHECK(nodes[4].kind == NodeKind::Textual);
}

TEST_CASE("null and booleans count as boolean nodes") {
  auto nodes = enumerate_nodes(parse("[null,true,false]"));
  CHECK(nodes[1].kind == NodeKind::Boolean);
  CHECK(nodes[2].kind == NodeKind::Boolean);
  CHECK(nodes[3].kind == NodeKind::Boolean);
}

TEST_CASE("pointer tokens escape ~ and /") {
  auto nodes = enumerate_nodes(parse(R"({"a/b":1,"m~n":{"":2}})"));
  CHECK(nodes[1].pointer == "/a~1b");
  CHECK(nodes[2].pointer == "/m~0n");
  CHECK(nodes[3].pointer == "/m~0n/");
}

TEST_CASE("duplicates point at the earliest deep-equal node") {
  auto nodes = enumerate_nodes(parse("[1,1,2,1]"));
  REQUIRE(nodes.size() == 5);
  CHECK_FALSE(nodes[1].duplicate_of.has_value());
  CHECK(nodes[2].duplicate_of == std::size_t{1});
  CHECK_FALSE(nodes[3].duplicate_of.has_value());
  CHECK(nodes[4].duplicate_of == std::size_t{1});
}

TEST_CASE("whole subtrees can be duplicates") {
  auto nodes = enumerate_nodes(parse(R"({"x":[1,2],"y":[1,2]})"));
  // /, /x, /x/0, /x/1, /y, /y/0, /y/1
  REQUIRE(nodes.size() == 7);
  CHECK(nodes[4].pointer == "/y");
  CHECK(nodes[4].duplicate_of == std::size_t{1});
  CHECK(nodes[5].duplicate_of == std::size_t{2});
  CHECK(nodes[6].duplicate_of == std::size_t{3});
}

TEST_CASE("object duplicates ignore member order") {
  auto nodes = enumerate_nodes(parse(R"([{"a":1,"b":2},{"b":2,"a":1}])"));
  CHECK(nodes[4].pointer == "/1");
  CHECK(nodes[4].duplicate_of == std::size_t{1});
}

TEST_CASE("numbers are duplicates by mathematical value") {
  auto nodes = enumerate_nodes(parse("[1,1.0,2.5,2.5]"));
  CHECK(nodes[2].duplicate_of == std::size_t{1});
  CHECK(nodes[4].duplicate_of == std::size_t{3});
}

TEST_CASE("int64 values that collide as doubles stay distinct") {
  // Both neighbours round to the same double; they must not be merged.
  auto nodes = enumerate_nodes(parse("[9007199254740993,9007199254740992.0]"));
  CHECK_FALSE(nodes[2].duplicate_of.has_value());
}

TEST_CASE("similar but unequal subtrees are not duplicates") {
  auto nodes = enumerate_nodes(parse("[[1,2],[2,1]]"));
  CHECK_FALSE(nodes[4].duplicate_of.has_value());
  auto nodes2 = enumerate_nodes(parse(R"([{"a":1},{"a":2}])"));
  CHECK_FALSE(nodes2[3].duplicate_of.has_value());
}

TEST_CASE("object keys are not nodes") {
  auto nodes = enumerate_nodes(parse(R"({"same":"same"})"));
  REQUIRE(nodes.size() == 2);
  CHECK_FALSE(nodes[1].duplicate_of.has_value());
}

TEST_CASE("duplicate indexes always precede their node") {
  DocumentGenerator generator(7);
  for (int i = 0; i < 200; ++i) {
    auto nodes = enumerate_nodes(generator.next(6));
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      if (!nodes[n].duplicate_of) continue;
      CHECK(*nodes[n].duplicate_of < n);
      CHECK_FALSE(nodes[*nodes[n].duplicate_of].duplicate_of.has_value());
    }
  }
}

TEST_CASE("the fixture flattens to its known 24-node table") {
  auto nodes = enumerate_nodes(parse(read_file(test_data_dir() + "/weather.json")));
  REQUIRE(nodes.size() == 24);
  CHECK(nodes[0].byte_size == 184);
  CHECK(nodes[23].pointer == "/data/3");
  CHECK(nodes[23].byte_size == 2);
  std::size_t duplicates = 0;
  for (const auto& node : nodes)
    if (node.duplicate_of) ++duplicates;
  CHECK(duplicates == 5);
}
