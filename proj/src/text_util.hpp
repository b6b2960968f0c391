#pragma once

// Line/token reader shared by the text-format parsers.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shiftforge/error.hpp"

namespace shiftforge::text {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::string_view raw;
  std::vector<Token> tokens;
  bool comment = false;
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{++number, raw, {}, false};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i >= raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    line.comment = !line.tokens.empty() && line.tokens.front().text.front() == '#';
    lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

// Non-blank, non-comment lines.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  for (Line& l : split_lines(text))
    if (!l.tokens.empty() && !l.comment) out.push_back(std::move(l));
  return out;
}

[[noreturn]] inline void fail(const Line& line, const Token& tok, const std::string& message) {
  throw ParseError(line.number, tok.column, message);
}

[[noreturn]] inline void fail(const Line& line, const std::string& message) {
  throw ParseError(line.number, line.tokens.empty() ? 1 : line.tokens.front().column, message);
}

inline unsigned long long parse_uint(const Line& line, const Token& tok) {
  unsigned long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    fail(line, tok, "expected a nonnegative integer, got '" + std::string(tok.text) + "'");
  return v;
}

inline void expect_tokens(const Line& line, std::size_t count, const std::string& form) {
  if (line.tokens.size() != count) fail(line, "expected '" + form + "'");
}

inline void expect_keyword(const Line& line, std::string_view keyword) {
  if (line.tokens.empty() || line.tokens.front().text != keyword)
    fail(line, "expected '" + std::string(keyword) + "'");
}

// Value of a `key=value` token, or a parse error naming the key.
inline std::string_view key_value(const Line& line, const Token& tok, std::string_view key) {
  if (tok.text.size() <= key.size() || tok.text.substr(0, key.size()) != key || tok.text[key.size()] != '=')
    fail(line, tok, "expected '" + std::string(key) + "=...'");
  return tok.text.substr(key.size() + 1);
}

// Comma-separated single-character letters.
inline std::vector<char> parse_letter_list(const Line& line, const Token& tok, std::string_view list) {
  std::vector<char> letters;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = list.find(',', pos);
    const std::string_view item = list.substr(pos, comma == std::string_view::npos ? list.size() - pos : comma - pos);
    if (item.size() != 1) fail(line, tok, "alphabet letters must be single characters");
    letters.push_back(item.front());
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return letters;
}

}  // namespace shiftforge::text
