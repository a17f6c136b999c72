#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jsonspace/json_value.hpp"

namespace jsonspace {

/// Coarse node classification. Scalars split into three content classes;
/// null rides with the booleans. Objects and arrays are structural.
enum class NodeKind { Structural, Textual, Numeric, Boolean };

std::string_view node_kind_name(NodeKind kind);

/// One node of the flattened document tree.
struct DocumentNode {
  std::string pointer;   // JSON Pointer; the root is "/"
  NodeKind kind;
  int level;             // root = 1, children = parent + 1
  std::uint64_t byte_size;  // exact bytes this node occupies when minified
  /// Index of the earliest preceding deep-equal node, if any.
  std::optional<std::size_t> duplicate_of;
};

/// Escapes one JSON Pointer reference token ("~" -> "~0", "/" -> "~1").
std::string escape_pointer_token(std::string_view token);

/// Flattens a document in pre-order (parent before children, members and
/// elements in stored order). The root occupies index 0 with pointer "/".
/// byte_size of a scalar is its minified text length (strings include their
/// quotes); byte_size of a container includes its brackets, commas, and for
/// objects the quoted keys and colons, so the root's byte_size equals
/// minified_byte_size(document). duplicate_of links every node to the
/// first earlier node that deep_equal-matches it, object keys play no part.
std::vector<DocumentNode> enumerate_nodes(const JsonValue& document);

}  // namespace jsonspace
