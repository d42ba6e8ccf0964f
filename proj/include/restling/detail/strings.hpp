#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace restling::detail {

inline bool is_ascii_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
inline bool is_ascii_digit(char c) noexcept { return c >= '0' && c <= '9'; }
inline bool is_ascii_alpha(char c) noexcept { return is_ascii_upper(c) || is_ascii_lower(c); }
inline bool is_ascii_alnum(char c) noexcept { return is_ascii_alpha(c) || is_ascii_digit(c); }
// Bytes of multi-byte UTF-8 sequences; treated as letters by the tokenizers.
inline bool is_non_ascii(char c) noexcept { return static_cast<unsigned char>(c) >= 0x80; }

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (is_ascii_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline std::string to_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (is_ascii_lower(c)) c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

inline std::string_view trim(std::string_view s) noexcept {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline bool ends_with(std::string_view s, std::string_view suffix) noexcept {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline bool starts_with(std::string_view s, std::string_view prefix) noexcept {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

inline std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) nl = s.size();
    std::string_view line = s.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!(nl == s.size() && line.empty())) out.emplace_back(line);
    start = nl + 1;
  }
  return out;
}

// Splits an identifier-like token into lowercase words at camelCase
// boundaries (lower->upper, and the last capital of an acronym run followed
// by a lowercase letter), letter<->digit transitions, and any separator
// character. Pure-digit pieces are dropped. Letters are never reordered.
inline std::vector<std::string> split_identifier(std::string_view s) {
  std::vector<std::string> words;
  std::string cur;
  bool cur_digits = false;
  auto flush = [&] {
    if (!cur.empty() && !cur_digits) words.push_back(to_lower(cur));
    cur.clear();
    cur_digits = false;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool letter = is_ascii_alpha(c) || is_non_ascii(c);
    const bool digit = is_ascii_digit(c);
    if (!letter && !digit) {
      flush();
      continue;
    }
    if (!cur.empty()) {
      const char prev = cur.back();
      const bool prev_letter = is_ascii_alpha(prev) || is_non_ascii(prev);
      bool boundary = false;
      if (prev_letter != letter) boundary = true;
      if (letter && is_ascii_lower(prev) && is_ascii_upper(c)) boundary = true;
      if (letter && is_ascii_upper(prev) && is_ascii_upper(c) && i + 1 < s.size() &&
          is_ascii_lower(s[i + 1])) {
        boundary = true;
      }
      if (boundary) flush();
    }
    if (cur.empty()) cur_digits = digit;
    cur.push_back(c);
  }
  flush();
  return words;
}

}  // namespace restling::detail
