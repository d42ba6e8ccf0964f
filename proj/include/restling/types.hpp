#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

namespace restling {

enum class HttpMethod { Get, Post, Put, Delete, Patch, Head, Options };

inline constexpr std::array<HttpMethod, 7> kAllMethods = {
    HttpMethod::Get,   HttpMethod::Post, HttpMethod::Put,    HttpMethod::Delete,
    HttpMethod::Patch, HttpMethod::Head, HttpMethod::Options};

inline std::string_view to_string(HttpMethod m) noexcept {
  switch (m) {
    case HttpMethod::Get: return "GET";
    case HttpMethod::Post: return "POST";
    case HttpMethod::Put: return "PUT";
    case HttpMethod::Delete: return "DELETE";
    case HttpMethod::Patch: return "PATCH";
    case HttpMethod::Head: return "HEAD";
    case HttpMethod::Options: return "OPTIONS";
  }
  return "GET";
}

// Case-insensitive; surrounding whitespace is ignored.
inline std::optional<HttpMethod> parse_method(std::string_view text) {
  std::string upper;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  for (HttpMethod m : kAllMethods) {
    if (to_string(m) == upper) return m;
  }
  return std::nullopt;
}

/// The nine linguistic rules. Each id names the antipattern side of the pair;
/// a Pattern verdict means the paired good practice holds.
enum class RuleId {
  AmorphousUri,
  ContextlessResourceNames,
  CrudyUri,
  NonHierarchicalNodes,
  PluralisedNodes,
  NonPertinentDocumentation,
  InconsistentDocumentation,
  UnversionedUri,
  NonStandardUri,
};

inline constexpr std::array<RuleId, 9> kAllRules = {
    RuleId::AmorphousUri,
    RuleId::ContextlessResourceNames,
    RuleId::CrudyUri,
    RuleId::NonHierarchicalNodes,
    RuleId::PluralisedNodes,
    RuleId::NonPertinentDocumentation,
    RuleId::InconsistentDocumentation,
    RuleId::UnversionedUri,
    RuleId::NonStandardUri,
};

inline std::string_view to_string(RuleId r) noexcept {
  switch (r) {
    case RuleId::AmorphousUri: return "amorphous_uri";
    case RuleId::ContextlessResourceNames: return "contextless_resource_names";
    case RuleId::CrudyUri: return "crudy_uri";
    case RuleId::NonHierarchicalNodes: return "non_hierarchical_nodes";
    case RuleId::PluralisedNodes: return "pluralised_nodes";
    case RuleId::NonPertinentDocumentation: return "non_pertinent_documentation";
    case RuleId::InconsistentDocumentation: return "inconsistent_documentation";
    case RuleId::UnversionedUri: return "unversioned_uri";
    case RuleId::NonStandardUri: return "non_standard_uri";
  }
  return "";
}

inline std::optional<RuleId> parse_rule(std::string_view text) {
  for (RuleId r : kAllRules) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

inline std::string valid_rule_list() {
  std::string out;
  for (RuleId r : kAllRules) {
    if (!out.empty()) out += ", ";
    out += to_string(r);
  }
  return out;
}

inline std::size_t rule_index(RuleId r) noexcept { return static_cast<std::size_t>(r); }

enum class Verdict { Pattern, Antipattern };

inline std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Pattern ? "pattern" : "antipattern";
}

inline std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "pattern") return Verdict::Pattern;
  if (text == "antipattern") return Verdict::Antipattern;
  return std::nullopt;
}

}  // namespace restling
