#include "jsonspace/json_value.hpp"

#include <cmath>
#include <cstdint>

#include "jsonspace/minify.hpp"
#include "jsonspace/nodes.hpp"

namespace jsonspace {

namespace {

// Exact comparison of a double against an int64. Casting the integer to
// double would round for magnitudes beyond 2^53 and manufacture false
// equalities, so the check goes the other way: the double must be integral
// and inside the int64 range before it is cast.
bool double_equals_int64(double d, std::int64_t i) {
  if (std::trunc(d) != d) return false;
  // 2^63 is exactly representable; INT64_MAX is not. Anything >= 2^63 or
  // < -2^63 cannot be an int64.
  if (d >= 9223372036854775808.0 || d < -9223372036854775808.0) return false;
  return static_cast<std::int64_t>(d) == i;
}

std::string child_pointer(const std::string& parent, std::string_view token) {
  std::string escaped = escape_pointer_token(token);
  if (parent == "/") return "/" + escaped;
  return parent + "/" + escaped;
}

std::string fragment(const JsonValue& v) {
  std::string s = minify(v);
  if (s.size() > 48) {
    s.resize(45);
    s += "...";
  }
  return s;
}

constexpr const char* kAbsent = "(absent)";

std::optional<Divergence> diverge(const JsonValue& expected,
                                  const JsonValue& actual,
                                  const std::string& pointer) {
  if (expected.type() != actual.type())
    return Divergence{pointer, fragment(expected), fragment(actual)};
  switch (expected.type()) {
    case JsonValue::Type::Null:
      return std::nullopt;
    case JsonValue::Type::Boolean:
    case JsonValue::Type::Number:
    case JsonValue::Type::String:
      if (!deep_equal(expected, actual))
        return Divergence{pointer, fragment(expected), fragment(actual)};
      return std::nullopt;
    case JsonValue::Type::Array: {
      const auto& ea = expected.as_array();
      const auto& aa = actual.as_array();
      std::size_t common = std::min(ea.size(), aa.size());
      for (std::size_t i = 0; i < common; ++i) {
        auto d = diverge(ea[i], aa[i], child_pointer(pointer, std::to_string(i)));
        if (d) return d;
      }
      if (ea.size() > aa.size())
        return Divergence{child_pointer(pointer, std::to_string(common)),
                          fragment(ea[common]), kAbsent};
      if (aa.size() > ea.size())
        return Divergence{child_pointer(pointer, std::to_string(common)),
                          kAbsent, fragment(aa[common])};
      return std::nullopt;
    }
    case JsonValue::Type::Object: {
      for (const auto& [key, value] : expected.as_object()) {
        const JsonValue* other = actual.find(key);
        if (!other)
          return Divergence{child_pointer(pointer, key), fragment(value),
                            kAbsent};
        auto d = diverge(value, *other, child_pointer(pointer, key));
        if (d) return d;
      }
      for (const auto& [key, value] : actual.as_object()) {
        if (!expected.find(key))
          return Divergence{child_pointer(pointer, key), kAbsent,
                            fragment(value)};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

bool same_number(const JsonNumber& a, const JsonNumber& b) {
  if (a.is_integer() && b.is_integer()) return a.as_integer() == b.as_integer();
  if (!a.is_integer() && !b.is_integer()) return a.as_double() == b.as_double();
  const JsonNumber& integral = a.is_integer() ? a : b;
  const JsonNumber& floating = a.is_integer() ? b : a;
  return double_equals_int64(floating.as_double(), integral.as_integer());
}

bool deep_equal(const JsonValue& a, const JsonValue& b) {
  if (a.type() != b.type()) return false;
  switch (a.type()) {
    case JsonValue::Type::Null:
      return true;
    case JsonValue::Type::Boolean:
      return a.as_boolean() == b.as_boolean();
    case JsonValue::Type::Number:
      return same_number(a.as_number(), b.as_number());
    case JsonValue::Type::String:
      return a.as_string() == b.as_string();
    case JsonValue::Type::Array: {
      const auto& aa = a.as_array();
      const auto& ba = b.as_array();
      if (aa.size() != ba.size()) return false;
      for (std::size_t i = 0; i < aa.size(); ++i)
        if (!deep_equal(aa[i], ba[i])) return false;
      return true;
    }
    case JsonValue::Type::Object: {
      const auto& ao = a.as_object();
      const auto& bo = b.as_object();
      if (ao.size() != bo.size()) return false;
      // Keys are unique per object, so size equality plus one-way inclusion
      // is full map equality.
      for (const auto& [key, value] : ao) {
        const JsonValue* other = b.find(key);
        if (!other || !deep_equal(value, *other)) return false;
      }
      return true;
    }
  }
  return false;
}

std::optional<Divergence> first_divergence(const JsonValue& expected,
                                           const JsonValue& actual) {
  return diverge(expected, actual, "/");
}

}  // namespace jsonspace
