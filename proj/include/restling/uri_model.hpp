#pragma once

// Structural model of a request URI: host prefix, path nodes, query, and the
// purely lexical facts (case, extensions, versions, odd characters) that the
// syntactic rules consume.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "restling/detail/strings.hpp"

namespace restling {

enum class NodeKind { Literal, TemplateParameter };

struct UriNode {
  std::string raw;
  NodeKind kind = NodeKind::Literal;
  std::vector<std::string> words;
  std::size_t offset = 0;  // byte offset of raw within the full URI

  bool is_literal() const noexcept { return kind == NodeKind::Literal; }
  friend bool operator==(const UriNode&, const UriNode&) = default;
};

struct ResourceUri {
  std::string raw;
  std::optional<std::string> scheme_host;
  std::vector<UriNode> nodes;
  bool has_trailing_slash = false;
  std::optional<std::string> query;

  /// Rebuilds the URI. Equals `raw` up to these normalizations: a leading
  /// "/" is added to bare paths and runs of "/" collapse to one.
  std::string to_string() const {
    std::string out = scheme_host.value_or("");
    out += '/';
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i) out += '/';
      out += nodes[i].raw;
    }
    if (has_trailing_slash && !nodes.empty()) out += '/';
    if (query) {
      out += '?';
      out += *query;
    }
    return out;
  }

  friend bool operator==(const ResourceUri&, const ResourceUri&) = default;
};

namespace detail {

inline constexpr std::string_view kFileExtensions[] = {
    "json", "xml", "html", "htm", "tiff", "jpg", "jpeg", "png", "gif", "pdf", "txt", "csv", "zip"};

inline constexpr std::string_view kHostSuffixes[] = {
    "com", "org", "net", "io",   "co",  "uk",    "de",  "fr", "ca", "gov", "edu",
    "info", "biz", "us", "eu",   "ai",  "app",   "dev", "me", "tv", "cc",  "jp",
    "cn",  "in",  "au",  "nl",   "se",  "ch",    "be",  "it", "es", "br",  "ru",
    "cloud", "local", "tech", "online", "site", "xyz", "mobi", "nz", "kr", "no", "fi"};

inline bool is_version_text(std::string_view s) {
  // v<digits>(.<digits>)*  or  <digits>(.<digits>)+
  std::size_t i = 0;
  bool prefixed = false;
  if (!s.empty() && (s[0] == 'v' || s[0] == 'V')) {
    prefixed = true;
    i = 1;
  }
  if (i >= s.size()) return false;
  int groups = 0;
  while (i < s.size()) {
    std::size_t start = i;
    while (i < s.size() && is_ascii_digit(s[i])) ++i;
    if (i == start) return false;
    ++groups;
    if (i == s.size()) break;
    if (s[i] != '.') return false;
    ++i;
    if (i == s.size()) return false;
  }
  return prefixed ? groups >= 1 : groups >= 2;
}

inline bool is_all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_ascii_digit(c)) return false;
  }
  return true;
}

inline bool looks_like_host(std::string_view segment) {
  if (auto colon = segment.find(':'); colon != std::string_view::npos) {
    segment = segment.substr(0, colon);
  }
  const auto dot = segment.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 >= segment.size()) return false;
  for (char c : segment) {
    if (!(is_ascii_alnum(c) || c == '-' || c == '.')) return false;
  }
  const std::string tail = to_lower(segment.substr(dot + 1));
  for (auto suffix : kHostSuffixes) {
    if (tail == suffix) return true;
  }
  return false;
}

inline bool is_placeholder_caps(std::string_view s) {
  if (s.empty() || !is_ascii_upper(s[0])) return false;
  bool underscore = false;
  for (char c : s) {
    if (c == '_') {
      underscore = true;
    } else if (!is_ascii_upper(c) && !is_ascii_digit(c)) {
      return false;
    }
  }
  return underscore;
}

inline bool has_id_suffix(std::string_view s) {
  for (std::string_view suffix : {"_id", "-id", "_ids", "-ids"}) {
    if (s.size() > suffix.size() && ends_with(s, suffix)) {
      for (char c : s) {
        if (!(is_ascii_lower(c) || is_ascii_digit(c) || c == '_' || c == '-')) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Classifies one path segment. Template parameters are recognized by four
/// conventions: {braces}, [brackets], ALL_CAPS_WITH_UNDERSCORES placeholders
/// (optionally prefixed by '$' or ':'), and lowercase names ending in _id/-id.
/// A bare ":name" prefix is also treated as a parameter.
inline UriNode classify_node(std::string_view segment, std::size_t offset = 0) {
  UriNode node;
  node.raw = std::string(segment);
  node.offset = offset;
  node.words = detail::split_identifier(segment);

  const auto wrapped = [&](char open, char close) {
    return segment.size() >= 2 && segment.front() == open && segment.back() == close;
  };
  std::string_view bare = segment;
  if (!bare.empty() && (bare.front() == '$' || bare.front() == ':')) bare.remove_prefix(1);

  if (wrapped('{', '}') || wrapped('[', ']') || detail::is_placeholder_caps(bare) ||
      detail::has_id_suffix(segment) || (segment.size() > 1 && segment.front() == ':')) {
    node.kind = NodeKind::TemplateParameter;
  }
  return node;
}

inline ResourceUri parse_uri(std::string_view raw) {
  ResourceUri uri;
  uri.raw = std::string(raw);

  std::string_view path = raw;
  if (auto q = raw.find('?'); q != std::string_view::npos) {
    uri.query = std::string(raw.substr(q + 1));
    path = raw.substr(0, q);
  }

  std::size_t path_start = 0;
  const auto scheme = path.find("://");
  const auto first_slash = path.find('/');
  if (scheme != std::string_view::npos && scheme < first_slash) {
    const auto host_end = path.find('/', scheme + 3);
    path_start = host_end == std::string_view::npos ? path.size() : host_end;
    uri.scheme_host = std::string(path.substr(0, path_start));
  } else if (!path.empty() && path.front() != '/') {
    const auto end = first_slash == std::string_view::npos ? path.size() : first_slash;
    if (detail::looks_like_host(path.substr(0, end))) {
      uri.scheme_host = std::string(path.substr(0, end));
      path_start = end;
    }
  }

  std::size_t i = path_start;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    std::size_t j = path.find('/', i);
    if (j == std::string_view::npos) j = path.size();
    uri.nodes.push_back(classify_node(path.substr(i, j - i), i));
    i = j;
  }
  uri.has_trailing_slash = path.size() > path_start && path.back() == '/';
  return uri;
}

/// Extension of a "name.ext" segment when ext is a known file type.
/// Dotted numerics such as "1.1" are versions, never extensions.
inline std::optional<std::string> detect_file_extension(const UriNode& node) {
  const std::string_view raw = node.raw;
  const auto dot = raw.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 >= raw.size()) return std::nullopt;
  if (detail::is_version_text(raw)) return std::nullopt;
  const std::string_view ext = raw.substr(dot + 1);
  const std::string lowered = detail::to_lower(ext);
  for (auto known : detail::kFileExtensions) {
    if (lowered == known) return std::string(ext);
  }
  return std::nullopt;
}

struct VersionSegment {
  std::size_t node_index = 0;
  std::string version;
  friend bool operator==(const VersionSegment&, const VersionSegment&) = default;
};

inline std::optional<VersionSegment> detect_version_segment(const ResourceUri& uri) {
  for (std::size_t i = 0; i < uri.nodes.size(); ++i) {
    const std::string& raw = uri.nodes[i].raw;
    if (detail::is_version_text(raw)) return VersionSegment{i, raw};
    if (detail::to_lower(raw) == "version" && i + 1 < uri.nodes.size()) {
      const std::string& next = uri.nodes[i + 1].raw;
      if (detail::is_all_digits(next) || detail::is_version_text(next)) {
        return VersionSegment{i, next};
      }
    }
  }
  return std::nullopt;
}

/// True for the version-like nodes the semantic rules skip.
inline bool is_version_node(const UriNode& node) { return detail::is_version_text(node.raw); }

enum class CharCategory { NonAsciiLetter, BlankSpace, DoubleHyphen, UnknownCharacter };

inline std::string_view to_string(CharCategory c) noexcept {
  switch (c) {
    case CharCategory::NonAsciiLetter: return "non_ascii_letter";
    case CharCategory::BlankSpace: return "blank_space";
    case CharCategory::DoubleHyphen: return "double_hyphen";
    case CharCategory::UnknownCharacter: return "unknown_character";
  }
  return "";
}

struct CharIssue {
  std::size_t position = 0;  // byte offset in the raw URI
  std::string character;
  CharCategory category = CharCategory::UnknownCharacter;
  friend bool operator==(const CharIssue&, const CharIssue&) = default;
};

namespace detail {

// Latin-1 supplement and Latin Extended A/B letters, Greek, Cyrillic.
inline bool is_non_ascii_letter(std::uint32_t cp) {
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return cp >= 0x370 && cp <= 0x4FF;
}

inline std::size_t decode_utf8(std::string_view s, std::size_t i, std::uint32_t& cp) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  std::size_t len = 1;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    cp = 0xFFFD;
    return 1;
  }
  if (i + len > s.size()) {
    cp = 0xFFFD;
    return 1;
  }
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      cp = 0xFFFD;
      return 1;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  return len;
}

inline bool is_standard_char(char c, bool in_query) {
  if (is_ascii_alnum(c)) return true;
  switch (c) {
    case '.': case '_': case '~': case '-': case '/': case '?':
    case '=': case '{': case '}': case '[': case ']': case ':':
      return true;
    case '&':
      return in_query;
    default:
      return false;
  }
}

}  // namespace detail

/// Reports every non-standard character occurrence in the URI: non-ASCII
/// letters, blanks (including "%20"), runs of two or more hyphens (one hit per
/// run) and characters outside the unreserved/template set. '&' is accepted
/// only inside the query string.
inline std::vector<CharIssue> scan_nonstandard_chars(const ResourceUri& uri) {
  std::vector<CharIssue> issues;
  const std::string_view s = uri.raw;
  const std::size_t query_start = s.find('?');
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const bool in_query = query_start != std::string_view::npos && i > query_start;
    if (detail::is_non_ascii(c)) {
      std::uint32_t cp = 0;
      const std::size_t len = detail::decode_utf8(s, i, cp);
      issues.push_back({i, std::string(s.substr(i, len)),
                        detail::is_non_ascii_letter(cp) ? CharCategory::NonAsciiLetter
                                                        : CharCategory::UnknownCharacter});
      i += len;
    } else if (c == ' ' || c == '\t') {
      issues.push_back({i, std::string(1, c), CharCategory::BlankSpace});
      ++i;
    } else if (c == '%' && s.substr(i, 3) == "%20") {
      issues.push_back({i, "%20", CharCategory::BlankSpace});
      i += 3;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
      std::size_t j = i;
      while (j < s.size() && s[j] == '-') ++j;
      issues.push_back({i, std::string(s.substr(i, j - i)), CharCategory::DoubleHyphen});
      i = j;
    } else if (!detail::is_standard_char(c, in_query)) {
      issues.push_back({i, std::string(1, c), CharCategory::UnknownCharacter});
      ++i;
    } else {
      ++i;
    }
  }
  return issues;
}

}  // namespace restling
