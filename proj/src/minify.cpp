#include "jsonspace/minify.hpp"

#include <charconv>
#include <cmath>
#include <string_view>
#include <system_error>

namespace jsonspace {

namespace {

// Shortest-digits rendering of a positive finite double, laid out the way
// a JavaScript runtime would print it: plain decimal while the point lands
// within 21 digits of the front and 6 of the back, exponential otherwise.
// std::to_chars supplies the shortest digit string plus exponent, the rest
// is layout.
std::string positive_double_to_string(double v) {
  char buf[64];
  auto result =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  std::string_view text(buf, static_cast<std::size_t>(result.ptr - buf));

  std::size_t epos = text.find('e');
  std::string digits;
  for (char c : text.substr(0, epos))
    if (c != '.') digits.push_back(c);

  std::string_view etext = text.substr(epos + 1);
  bool eneg = !etext.empty() && etext.front() == '-';
  if (!etext.empty() && (etext.front() == '+' || etext.front() == '-'))
    etext.remove_prefix(1);
  int exponent = 0;
  std::from_chars(etext.data(), etext.data() + etext.size(), exponent);
  if (eneg) exponent = -exponent;

  int k = static_cast<int>(digits.size());
  int n = exponent + 1;  // digits before the decimal point

  std::string out;
  if (k <= n && n <= 21) {
    out = digits;
    out.append(static_cast<std::size_t>(n - k), '0');
  } else if (0 < n && n <= 21) {
    out.assign(digits, 0, static_cast<std::size_t>(n));
    out += '.';
    out.append(digits, static_cast<std::size_t>(n), std::string::npos);
  } else if (-6 < n && n <= 0) {
    out = "0.";
    out.append(static_cast<std::size_t>(-n), '0');
    out += digits;
  } else {
    out.assign(digits, 0, 1);
    if (k > 1) {
      out += '.';
      out.append(digits, 1, std::string::npos);
    }
    out += 'e';
    int e = n - 1;
    out += e >= 0 ? '+' : '-';
    out += std::to_string(e >= 0 ? e : -e);
  }
  return out;
}

void write_minified(std::string& out, const JsonValue& value) {
  switch (value.type()) {
    case JsonValue::Type::Null:
      out += "null";
      return;
    case JsonValue::Type::Boolean:
      out += value.as_boolean() ? "true" : "false";
      return;
    case JsonValue::Type::Number:
      out += number_to_string(value.as_number());
      return;
    case JsonValue::Type::String:
      append_quoted(out, value.as_string());
      return;
    case JsonValue::Type::Array: {
      out += '[';
      bool first = true;
      for (const auto& element : value.as_array()) {
        if (!first) out += ',';
        first = false;
        write_minified(out, element);
      }
      out += ']';
      return;
    }
    case JsonValue::Type::Object: {
      out += '{';
      bool first = true;
      for (const auto& [key, member] : value.as_object()) {
        if (!first) out += ',';
        first = false;
        append_quoted(out, key);
        out += ':';
        write_minified(out, member);
      }
      out += '}';
      return;
    }
  }
}

}  // namespace

std::string number_to_string(const JsonNumber& number) {
  if (number.is_integer()) {
    char buf[24];
    auto result = std::to_chars(buf, buf + sizeof buf, number.as_integer());
    return std::string(buf, result.ptr);
  }
  double v = number.as_double();
  if (v == 0.0) return "0";  // covers -0.0; keeps minify idempotent
  if (std::signbit(v)) return "-" + positive_double_to_string(-v);
  return positive_double_to_string(v);
}

void append_quoted(std::string& out, std::string_view text) {
  static constexpr char kHex[] = "0123456789abcdef";
  out += '"';
  for (unsigned char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\b':
        out += "\\b";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\f':
        out += "\\f";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out += kHex[c >> 4];
          out += kHex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

std::uint64_t quoted_length(std::string_view text) {
  std::uint64_t n = 2;
  for (unsigned char c : text) {
    switch (c) {
      case '"':
      case '\\':
      case '\b':
      case '\t':
      case '\n':
      case '\f':
      case '\r':
        n += 2;
        break;
      default:
        n += c < 0x20 ? 6 : 1;
    }
  }
  return n;
}

std::string minify(const JsonValue& value) {
  std::string out;
  write_minified(out, value);
  return out;
}

std::uint64_t minified_byte_size(const JsonValue& value) {
  switch (value.type()) {
    case JsonValue::Type::Null:
      return 4;
    case JsonValue::Type::Boolean:
      return value.as_boolean() ? 4 : 5;
    case JsonValue::Type::Number:
      return number_to_string(value.as_number()).size();
    case JsonValue::Type::String:
      return quoted_length(value.as_string());
    case JsonValue::Type::Array: {
      const auto& elements = value.as_array();
      std::uint64_t n = 2;
      if (!elements.empty()) n += elements.size() - 1;  // commas
      for (const auto& element : elements) n += minified_byte_size(element);
      return n;
    }
    case JsonValue::Type::Object: {
      const auto& members = value.as_object();
      std::uint64_t n = 2;
      if (!members.empty()) n += members.size() - 1;
      for (const auto& [key, member] : members)
        n += quoted_length(key) + 1 + minified_byte_size(member);
      return n;
    }
  }
  return 0;
}

}  // namespace jsonspace
