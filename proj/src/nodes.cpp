#include "jsonspace/nodes.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "jsonspace/minify.hpp"

namespace jsonspace {

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Structural:
      return "structural";
    case NodeKind::Textual:
      return "textual";
    case NodeKind::Numeric:
      return "numeric";
    case NodeKind::Boolean:
      return "boolean";
  }
  return "structural";
}

std::string escape_pointer_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (char c : token) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

namespace {

NodeKind kind_of(const JsonValue& v) {
  switch (v.type()) {
    case JsonValue::Type::Null:
    case JsonValue::Type::Boolean:
      return NodeKind::Boolean;
    case JsonValue::Type::Number:
      return NodeKind::Numeric;
    case JsonValue::Type::String:
      return NodeKind::Textual;
    default:
      return NodeKind::Structural;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Hash on the mathematical value so that integer 1 and double 1.0 share a
// bucket; rendering-based keys would split them even though deep_equal
// says they match. -0.0 is integral, so it lands on the int64 key 0 next
// to plain 0.
std::uint64_t hash_number(const JsonNumber& n) {
  if (n.is_integer())
    return splitmix64(static_cast<std::uint64_t>(n.as_integer()));
  double d = n.as_double();
  if (std::trunc(d) == d && d >= -9223372036854775808.0 &&
      d < 9223372036854775808.0)
    return splitmix64(static_cast<std::uint64_t>(static_cast<std::int64_t>(d)));
  return splitmix64(std::bit_cast<std::uint64_t>(d) ^ 0xD1B54A32D192ED03ULL);
}

std::string child_pointer(const std::string& parent, std::string_view token) {
  std::string escaped = escape_pointer_token(token);
  if (parent == "/") return "/" + escaped;
  return parent + "/" + escaped;
}

struct Walker {
  std::vector<DocumentNode> nodes;
  std::vector<const JsonValue*> values;
  std::vector<std::uint64_t> hashes;

  // Appends the subtree rooted at `v` in pre-order, filling in byte sizes
  // bottom-up, and returns the subtree's structural hash.
  std::uint64_t walk(const JsonValue& v, std::string pointer, int level) {
    std::size_t index = nodes.size();
    nodes.push_back(
        DocumentNode{std::move(pointer), kind_of(v), level, 0, std::nullopt});
    values.push_back(&v);
    hashes.push_back(0);

    std::uint64_t h = 0;
    std::uint64_t size = 0;
    switch (v.type()) {
      case JsonValue::Type::Null:
        h = splitmix64(0xA0);
        size = 4;
        break;
      case JsonValue::Type::Boolean:
        h = splitmix64(v.as_boolean() ? 0xB1 : 0xB0);
        size = v.as_boolean() ? 4 : 5;
        break;
      case JsonValue::Type::Number:
        h = combine(0xC0, hash_number(v.as_number()));
        size = number_to_string(v.as_number()).size();
        break;
      case JsonValue::Type::String:
        h = combine(0xD0, std::hash<std::string_view>{}(v.as_string()));
        size = quoted_length(v.as_string());
        break;
      case JsonValue::Type::Array: {
        const auto& elements = v.as_array();
        const std::string parent = nodes[index].pointer;
        h = splitmix64(0xE0);
        size = 2 + (elements.empty() ? 0 : elements.size() - 1);
        for (std::size_t i = 0; i < elements.size(); ++i) {
          std::size_t child = nodes.size();
          std::uint64_t ch = walk(
              elements[i], child_pointer(parent, std::to_string(i)), level + 1);
          h = combine(h, ch);
          size += nodes[child].byte_size;
        }
        break;
      }
      case JsonValue::Type::Object: {
        const auto& members = v.as_object();
        const std::string parent = nodes[index].pointer;
        size = 2 + (members.empty() ? 0 : members.size() - 1);
        // Member hashes are mixed commutatively; deep_equal ignores member
        // order, so the hash must as well.
        std::uint64_t sum = 0;
        for (const auto& [key, value] : members) {
          std::size_t child = nodes.size();
          std::uint64_t ch = walk(value, child_pointer(parent, key), level + 1);
          sum += splitmix64(
              combine(std::hash<std::string_view>{}(key), ch));
          size += quoted_length(key) + 1 + nodes[child].byte_size;
        }
        h = combine(splitmix64(0xF0), sum);
        break;
      }
    }
    nodes[index].byte_size = size;
    hashes[index] = h;
    return h;
  }
};

}  // namespace

std::vector<DocumentNode> enumerate_nodes(const JsonValue& document) {
  Walker walker;
  walker.walk(document, "/", 1);

  // Bucket by hash, keep only first-of-kind representatives: an equal match
  // inside a bucket is automatically the earliest one.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  buckets.reserve(walker.nodes.size());
  for (std::size_t i = 0; i < walker.nodes.size(); ++i) {
    auto& bucket = buckets[walker.hashes[i]];
    bool duplicate = false;
    for (std::size_t j : bucket) {
      if (deep_equal(*walker.values[i], *walker.values[j])) {
        walker.nodes[i].duplicate_of = j;
        duplicate = true;
        break;
      }
    }
    if (!duplicate) bucket.push_back(i);
  }
  return std::move(walker.nodes);
}

}  // namespace jsonspace
