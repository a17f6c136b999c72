#include "jsonspace/parse.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>
#include <unordered_set>

#include "jsonspace/unicode.hpp"

namespace jsonspace {

namespace {

std::string describe(const std::string& message, std::size_t line,
                     std::size_t column) {
  return message + " at line " + std::to_string(line) + ", column " +
         std::to_string(column);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Parser {
  std::string_view text;
  const ParseOptions& options;
  std::size_t pos = 0;
  std::size_t depth = 0;

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, at, line, column);
  }
  [[noreturn]] void fail(const std::string& message) const {
    fail(message, pos);
  }

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!at_end()) {
      char c = text[pos];
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r') break;
      ++pos;
    }
  }

  void enter() {
    if (++depth > options.max_depth) fail("nesting depth limit exceeded");
  }
  void leave() { --depth; }

  JsonValue parse_document() {
    skip_ws();
    JsonValue value = parse_value();
    skip_ws();
    if (!at_end()) fail("trailing characters after value");
    return value;
  }

  JsonValue parse_value() {
    if (at_end()) fail("unexpected end of input");
    switch (peek()) {
      case '{':
        return parse_object();
      case '[':
        return parse_array();
      case '"':
        return JsonValue(parse_string());
      case 't':
        expect_literal("true");
        return JsonValue(true);
      case 'f':
        expect_literal("false");
        return JsonValue(false);
      case 'n':
        expect_literal("null");
        return JsonValue(nullptr);
      default:
        if (peek() == '-' || is_digit(peek())) return parse_number();
        fail(std::string("unexpected character '") + peek() + "'");
    }
  }

  void expect_literal(std::string_view literal) {
    if (text.substr(pos, literal.size()) != literal)
      fail("invalid literal");
    pos += literal.size();
  }

  JsonValue parse_object() {
    enter();
    std::size_t open_at = pos;
    ++pos;
    JsonObject members;
    std::unordered_set<std::string> seen;
    skip_ws();
    if (!at_end() && peek() == '}') {
      ++pos;
      leave();
      return JsonValue(std::move(members));
    }
    while (true) {
      skip_ws();
      if (at_end() || peek() != '"') fail("expected object key");
      std::size_t key_at = pos;
      std::string key = parse_string();
      if (!seen.insert(key).second)
        fail("duplicate object key \"" + key + "\"", key_at);
      skip_ws();
      if (at_end() || peek() != ':') fail("expected ':' after object key");
      ++pos;
      skip_ws();
      members.emplace_back(std::move(key), parse_value());
      skip_ws();
      if (at_end()) fail("unterminated object", open_at);
      char c = peek();
      ++pos;
      if (c == '}') break;
      if (c != ',') {
        --pos;
        fail("expected ',' or '}' in object");
      }
    }
    leave();
    return JsonValue(std::move(members));
  }

  JsonValue parse_array() {
    enter();
    std::size_t open_at = pos;
    ++pos;
    JsonArray elements;
    skip_ws();
    if (!at_end() && peek() == ']') {
      ++pos;
      leave();
      return JsonValue(std::move(elements));
    }
    while (true) {
      skip_ws();
      elements.push_back(parse_value());
      skip_ws();
      if (at_end()) fail("unterminated array", open_at);
      char c = peek();
      ++pos;
      if (c == ']') break;
      if (c != ',') {
        --pos;
        fail("expected ',' or ']' in array");
      }
    }
    leave();
    return JsonValue(std::move(elements));
  }

  std::uint32_t parse_hex4() {
    if (text.size() - pos < 4) fail("truncated \\u escape");
    std::uint32_t value = 0;
    for (int i = 0; i < 4; ++i) {
      char c = text[pos + static_cast<std::size_t>(i)];
      value <<= 4;
      if (c >= '0' && c <= '9')
        value |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f')
        value |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        value |= static_cast<std::uint32_t>(c - 'A' + 10);
      else
        fail("invalid hex digit in \\u escape", pos + static_cast<std::size_t>(i));
    }
    pos += 4;
    return value;
  }

  std::string parse_string() {
    std::size_t start = pos;
    ++pos;  // opening quote
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string", start);
      unsigned char c = static_cast<unsigned char>(text[pos]);
      if (c == '"') {
        ++pos;
        break;
      }
      if (c == '\\') {
        parse_escape(out);
        continue;
      }
      if (c < 0x20) fail("unescaped control character in string");
      out += static_cast<char>(c);
      ++pos;
    }
    // Escapes emit well-formed sequences, so any damage left over comes
    // from the raw bytes.
    if (!valid_utf8(out)) fail("invalid UTF-8 in string", start);
    return out;
  }

  void parse_escape(std::string& out) {
    std::size_t escape_at = pos;
    ++pos;  // backslash
    if (at_end()) fail("unterminated escape", escape_at);
    char e = text[pos];
    ++pos;
    switch (e) {
      case '"': out += '"'; return;
      case '\\': out += '\\'; return;
      case '/': out += '/'; return;
      case 'b': out += '\b'; return;
      case 'f': out += '\f'; return;
      case 'n': out += '\n'; return;
      case 'r': out += '\r'; return;
      case 't': out += '\t'; return;
      case 'u': {
        std::uint32_t code = parse_hex4();
        if (code >= 0xD800 && code <= 0xDBFF) {
          if (text.substr(pos, 2) != "\\u")
            fail("unpaired surrogate escape", escape_at);
          pos += 2;
          std::uint32_t low = parse_hex4();
          if (low < 0xDC00 || low > 0xDFFF)
            fail("invalid low surrogate in escape pair", escape_at);
          code = 0x10000 + ((code - 0xD800) << 10) + (low - 0xDC00);
        } else if (code >= 0xDC00 && code <= 0xDFFF) {
          fail("unpaired surrogate escape", escape_at);
        }
        append_utf8(out, code);
        return;
      }
      default:
        fail("invalid escape character", escape_at);
    }
  }

  // True when an out-of-range literal is too large for binary64 (as
  // opposed to too small, which quietly becomes zero like any standard
  // JSON reader would make it).
  static bool magnitude_overflows(std::string_view token) {
    std::size_t i = 0;
    if (i < token.size() && token[i] == '-') ++i;
    long long point_exponent = 0;  // decimal exponent of the first digit
    bool significant = false;
    bool seen_point = false;
    long long fraction_index = 0;
    for (; i < token.size(); ++i) {
      char c = token[i];
      if (c == '.') {
        seen_point = true;
        continue;
      }
      if (c == 'e' || c == 'E') break;
      if (!significant) {
        if (c == '0') {
          if (seen_point) ++fraction_index;
          continue;
        }
        significant = true;
        point_exponent = seen_point ? -(fraction_index + 1) : 0;
      } else if (!seen_point) {
        ++point_exponent;
      }
    }
    if (!significant) return false;  // literal zero never overflows
    long long exponent = 0;
    if (i < token.size() && (token[i] == 'e' || token[i] == 'E')) {
      ++i;
      bool neg = i < token.size() && token[i] == '-';
      if (i < token.size() && (token[i] == '+' || token[i] == '-')) ++i;
      for (; i < token.size() && is_digit(token[i]); ++i) {
        if (exponent < 100000)
          exponent = exponent * 10 + (token[i] - '0');
      }
      if (neg) exponent = -exponent;
    }
    return point_exponent + exponent > 0;
  }

  JsonValue parse_number() {
    std::size_t start = pos;
    bool negative = peek() == '-';
    if (negative) ++pos;
    if (at_end() || !is_digit(peek())) fail("invalid number", start);
    if (peek() == '0') {
      ++pos;
    } else {
      while (!at_end() && is_digit(peek())) ++pos;
    }
    bool integral = true;
    if (!at_end() && peek() == '.') {
      integral = false;
      ++pos;
      if (at_end() || !is_digit(peek()))
        fail("expected digit after decimal point");
      while (!at_end() && is_digit(peek())) ++pos;
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      integral = false;
      ++pos;
      if (!at_end() && (peek() == '+' || peek() == '-')) ++pos;
      if (at_end() || !is_digit(peek())) fail("expected digit in exponent");
      while (!at_end() && is_digit(peek())) ++pos;
    }
    std::string_view token = text.substr(start, pos - start);

    if (integral) {
      std::int64_t value = 0;
      auto result =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (result.ec == std::errc() &&
          result.ptr == token.data() + token.size())
        return JsonValue(value);
      // Out-of-int64 integers fall through to the double path.
    }
    double value = 0;
    auto result =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec == std::errc::result_out_of_range) {
      if (magnitude_overflows(token))
        fail("number outside representable range", start);
      return JsonValue(negative ? -0.0 : 0.0);
    }
    if (result.ec != std::errc() || result.ptr != token.data() + token.size())
      fail("invalid number", start);
    if (!std::isfinite(value))
      fail("number outside representable range", start);
    return JsonValue(value);
  }
};

}  // namespace

ParseError::ParseError(std::string message, std::size_t offset,
                       std::size_t line, std::size_t column)
    : std::runtime_error(describe(message, line, column)),
      offset_(offset),
      line_(line),
      column_(column) {}

JsonValue parse(std::string_view text, const ParseOptions& options) {
  Parser parser{text, options};
  return parser.parse_document();
}

}  // namespace jsonspace
