#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jsonspace {

class JsonValue;

/// Ordered sequence of values.
using JsonArray = std::vector<JsonValue>;

/// One object member. Objects preserve insertion order.
using JsonMember = std::pair<std::string, JsonValue>;

/// Object storage. Keys must be unique within one object; the parser
/// enforces this and programmatic builders are expected to keep it.
using JsonObject = std::vector<JsonMember>;

/// A JSON number: either a signed 64-bit integer or a finite binary64
/// double. The distinction is preserved end to end so that a value that
/// arrived as `1.0` is never silently narrowed to the integer `1`.
class JsonNumber {
public:
  JsonNumber() : rep_(std::int64_t{0}) {}
  explicit JsonNumber(std::int64_t value) : rep_(value) {}
  explicit JsonNumber(double value) : rep_(value) {}

  bool is_integer() const { return std::holds_alternative<std::int64_t>(rep_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(rep_); }
  double as_double() const { return std::get<double>(rep_); }

  /// Lossy view as a double (exact for doubles, rounded for huge integers).
  double to_double() const {
    return is_integer() ? static_cast<double>(as_integer()) : as_double();
  }

private:
  std::variant<std::int64_t, double> rep_;
};

/// Mathematical equality: integer 1 equals double 1.0, and -0.0 equals 0.
bool same_number(const JsonNumber& a, const JsonNumber& b);

/// Lossless in-memory JSON document tree. Immutable by convention once
/// built; every free function operating on it is pure and thread-safe.
class JsonValue {
public:
  enum class Type { Null, Boolean, Number, String, Array, Object };

  JsonValue() : data_(nullptr) {}
  JsonValue(std::nullptr_t) : data_(nullptr) {}
  JsonValue(bool value) : data_(value) {}
  JsonValue(JsonNumber value) : data_(value) {}
  JsonValue(std::int64_t value) : data_(JsonNumber{value}) {}
  JsonValue(int value) : data_(JsonNumber{static_cast<std::int64_t>(value)}) {}
  JsonValue(double value) : data_(JsonNumber{value}) {}
  JsonValue(std::string value) : data_(std::move(value)) {}
  JsonValue(const char* value) : data_(std::string(value)) {}
  JsonValue(JsonArray value) : data_(std::move(value)) {}
  JsonValue(JsonObject value) : data_(std::move(value)) {}

  Type type() const { return static_cast<Type>(data_.index()); }

  bool is_null() const { return type() == Type::Null; }
  bool is_boolean() const { return type() == Type::Boolean; }
  bool is_number() const { return type() == Type::Number; }
  bool is_string() const { return type() == Type::String; }
  bool is_array() const { return type() == Type::Array; }
  bool is_object() const { return type() == Type::Object; }

  /// True for objects and arrays, the composite node kinds.
  bool is_structural() const { return is_array() || is_object(); }

  bool as_boolean() const { return std::get<bool>(data_); }
  const JsonNumber& as_number() const { return std::get<JsonNumber>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  const JsonArray& as_array() const { return std::get<JsonArray>(data_); }
  const JsonObject& as_object() const { return std::get<JsonObject>(data_); }

  /// Object member lookup; nullptr when absent or not an object.
  const JsonValue* find(std::string_view key) const {
    if (!is_object()) return nullptr;
    for (const auto& [k, v] : as_object()) {
      if (k == key) return &v;
    }
    return nullptr;
  }

private:
  std::variant<std::nullptr_t, bool, JsonNumber, std::string, JsonArray,
               JsonObject>
      data_;
};

/// Structural equality: objects compared as key->value maps regardless of
/// member order, arrays element by element, numbers by mathematical value.
bool deep_equal(const JsonValue& a, const JsonValue& b);

/// Location and content of the first point where two documents differ.
struct Divergence {
  std::string pointer;   // JSON Pointer, "/" for the root
  std::string expected;  // minified fragment (possibly truncated)
  std::string actual;
};

/// First divergence between two documents under deep_equal semantics, or
/// nullopt when they are deep-equal. Object members are visited in the
/// expected document's order; a member missing on either side is reported
/// at the member's own pointer.
std::optional<Divergence> first_divergence(const JsonValue& expected,
                                           const JsonValue& actual);

}  // namespace jsonspace
