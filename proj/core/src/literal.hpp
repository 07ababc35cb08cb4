#ifndef ITERID_SRC_LITERAL_HPP
#define ITERID_SRC_LITERAL_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iterid/word_parser.hpp"

namespace iterid::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Offset of `part` inside `whole`; both must view the same buffer.
inline std::size_t offset_in(std::string_view whole, std::string_view part) {
  return static_cast<std::size_t>(part.data() - whole.data());
}

inline bool is_open(char c) { return c == '(' || c == '[' || c == '{' || c == '<'; }
inline bool is_close(char c) { return c == ')' || c == ']' || c == '}' || c == '>'; }

/// Splits on `sep` at bracket depth zero. Pieces are trimmed; empty input
/// gives no pieces.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (is_open(c)) ++depth;
    else if (is_close(c)) --depth;
    else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

/// Position of the first `c` at bracket depth zero, or npos.
inline std::size_t find_top(std::string_view s, char c) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (depth == 0 && s[i] == c) return i;
    if (is_open(s[i])) ++depth;
    else if (is_close(s[i])) --depth;
  }
  return std::string_view::npos;
}

inline std::int64_t parse_int(std::string_view s, std::size_t pos = 0) {
  s = trim(s);
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", pos);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("expected integer, got '" + std::string(s) + "'", pos);
  }
  return v;
}

/// Strips `open`...`close` around the whole (trimmed) string, or throws.
inline std::string_view unwrap(std::string_view s, char open, char close, std::size_t pos = 0) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError(std::string("expected ") + open + "..." + close, pos);
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace iterid::detail

#endif  // ITERID_SRC_LITERAL_HPP
