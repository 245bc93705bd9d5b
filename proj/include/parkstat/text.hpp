#ifndef PARKSTAT_TEXT_HPP
#define PARKSTAT_TEXT_HPP

#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkstat/error.hpp"

namespace parkstat {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

inline std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

/// Comma-separated integers; the empty string parses to an empty list.
inline std::vector<std::int64_t> parse_int64_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_int(item));
  return out;
}

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (std::int64_t v : parse_int64_list(text)) {
    if (v < INT32_MIN || v > INT32_MAX) throw Error(ErrorKind::ParseError, "integer out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

template <typename Int>
std::string join_ints(std::span<const Int> values, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

template <typename Int>
std::string join_ints(const std::vector<Int>& values, std::string_view sep = ",") {
  return join_ints(std::span<const Int>(values), sep);
}

}  // namespace parkstat

#endif  // PARKSTAT_TEXT_HPP
