#pragma once

// Loading and validation of API collections and their companion files:
// acronym dictionaries, stop-word lists and oracle label files.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "restling/detail/strings.hpp"
#include "restling/errors.hpp"
#include "restling/types.hpp"

namespace restling {

struct ApiEntry {
  std::string id;
  std::string uri;
  HttpMethod method = HttpMethod::Get;
  std::string documentation;

  friend bool operator==(const ApiEntry&, const ApiEntry&) = default;
};

/// Maps an acronym to its lowercase expansion words.
///
/// Keys written with any uppercase letter ("IoT") match tokens exactly.
/// All-lowercase keys ("hvac") match tokens case-insensitively, so "HVAC"
/// and "Hvac" expand as well. Matching is always whole-token.
class AcronymDictionary {
 public:
  using Map = std::map<std::string, std::vector<std::string>>;

  AcronymDictionary() = default;

  static AcronymDictionary from_map(Map entries) {
    AcronymDictionary dict;
    for (auto& [key, words] : entries) {
      if (key.empty()) throw ValidationError("acronym key must not be empty");
      if (words.empty()) throw ValidationError("acronym '" + key + "' has an empty expansion");
      for (auto& w : words) w = detail::to_lower(w);
    }
    dict.entries_ = std::move(entries);
    for (const auto& [key, words] : dict.entries_) {
      for (const auto& w : words) {
        if (const auto* hit = dict.match_key(w)) {
          if (*hit == key) {
            throw ValidationError("acronym '" + key + "' maps to itself");
          }
          throw ValidationError("acronym '" + key + "' expands to '" + w +
                                "', which is itself the acronym '" + *hit + "'");
        }
      }
    }
    return dict;
  }

  const std::vector<std::string>* find(std::string_view token) const {
    const std::string* key = match_key(token);
    if (key == nullptr) return nullptr;
    return &entries_.at(*key);
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const Map& entries() const noexcept { return entries_; }

  friend bool operator==(const AcronymDictionary&, const AcronymDictionary&) = default;

 private:
  const std::string* match_key(std::string_view token) const {
    if (auto it = entries_.find(std::string(token)); it != entries_.end()) return &it->first;
    const std::string lowered = detail::to_lower(token);
    if (auto it = entries_.find(lowered); it != entries_.end()) return &it->first;
    return nullptr;
  }

  Map entries_;
};

class StopWordList {
 public:
  StopWordList() = default;

  template <typename Range>
  static StopWordList from_words(const Range& words) {
    StopWordList list;
    for (const auto& w : words) {
      std::string lowered = detail::to_lower(detail::trim(w));
      if (!lowered.empty()) list.words_.insert(std::move(lowered));
    }
    return list;
  }

  bool contains(std::string_view word) const { return words_.count(std::string(word)) != 0; }
  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept { return words_.size(); }
  const std::set<std::string>& words() const noexcept { return words_; }

  friend bool operator==(const StopWordList&, const StopWordList&) = default;

 private:
  std::set<std::string> words_;
};

struct ApiCollection {
  std::string name;
  std::vector<ApiEntry> entries;
  AcronymDictionary acronyms;
  StopWordList stopwords;

  const ApiEntry* find(std::string_view id) const {
    for (const auto& e : entries) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }

  friend bool operator==(const ApiCollection&, const ApiCollection&) = default;
};

class OracleLabels {
 public:
  using Key = std::pair<std::string, RuleId>;

  void set(std::string entry_id, RuleId rule, Verdict v) {
    labels_[Key{std::move(entry_id), rule}] = v;
  }

  const std::map<Key, Verdict>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  // Every labelled entry id must exist in the collection.
  void validate_against(const ApiCollection& collection) const {
    for (const auto& [key, verdict] : labels_) {
      if (collection.find(key.first) == nullptr) {
        throw ValidationError("oracle references unknown entry id '" + key.first +
                              "' (collection '" + collection.name + "')");
      }
    }
  }

 private:
  std::map<Key, Verdict> labels_;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
}

inline nlohmann::json parse_json(std::string_view text, std::string_view origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << origin << ":" << line << ":" << column << ": malformed JSON: " << e.what();
    throw ParseError(msg.str(), line, column);
  }
}

inline ApiCollection collection_from_json(const nlohmann::json& j, std::string_view origin) {
  if (!j.is_object()) throw ValidationError(std::string(origin) + ": collection must be a JSON object");
  ApiCollection c;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw ValidationError(std::string(origin) + ": 'name' must be a string");
    c.name = it->get<std::string>();
  }
  auto entries = j.find("entries");
  if (entries == j.end() || !entries->is_array()) {
    throw ValidationError(std::string(origin) + ": collection '" + c.name +
                          "' needs an 'entries' array");
  }
  std::set<std::string> seen;
  std::size_t index = 0;
  for (const auto& item : *entries) {
    ++index;
    const std::string where = std::string(origin) + ": entry #" + std::to_string(index);
    if (!item.is_object()) throw ValidationError(where + " must be an object");
    ApiEntry e;
    if (auto it = item.find("id"); it != item.end() && !it->is_null()) {
      if (!it->is_string()) throw ValidationError(where + ": 'id' must be a string");
      e.id = it->get<std::string>();
    } else {
      e.id = "e" + std::to_string(index);
    }
    auto uri = item.find("uri");
    if (uri == item.end() || !uri->is_string() || trim(uri->get_ref<const std::string&>()).empty()) {
      throw ValidationError(where + " ('" + e.id + "'): 'uri' must be a non-empty string");
    }
    e.uri = uri->get<std::string>();
    auto method = item.find("method");
    if (method == item.end() || !method->is_string()) {
      throw ValidationError(where + " ('" + e.id + "'): 'method' must be a string");
    }
    auto parsed = parse_method(method->get_ref<const std::string&>());
    if (!parsed) {
      throw ValidationError(where + " ('" + e.id + "'): unknown HTTP method '" +
                            method->get<std::string>() + "'");
    }
    e.method = *parsed;
    if (auto it = item.find("documentation"); it != item.end() && !it->is_null()) {
      if (!it->is_string()) throw ValidationError(where + ": 'documentation' must be a string");
      e.documentation = it->get<std::string>();
    }
    if (!seen.insert(e.id).second) {
      throw ValidationError(where + ": duplicate entry id '" + e.id + "'");
    }
    c.entries.push_back(std::move(e));
  }
  return c;
}

}  // namespace detail

/// Parses collection JSON text. Accepts a single collection object or
/// {"apis": [collection, ...]}.
inline std::vector<ApiCollection> parse_collections(std::string_view text,
                                                    std::string_view origin = "<input>") {
  const nlohmann::json j = detail::parse_json(text, origin);
  std::vector<ApiCollection> out;
  if (j.is_object() && j.contains("apis")) {
    const auto& apis = j.at("apis");
    if (!apis.is_array()) throw ValidationError(std::string(origin) + ": 'apis' must be an array");
    for (const auto& item : apis) out.push_back(detail::collection_from_json(item, origin));
  } else {
    out.push_back(detail::collection_from_json(j, origin));
  }
  return out;
}

inline std::vector<ApiCollection> load_collections(const std::string& path) {
  return parse_collections(detail::read_file(path), path);
}

/// Loads a file holding exactly one collection.
inline ApiCollection load_collection(const std::string& path) {
  auto all = load_collections(path);
  if (all.size() != 1) {
    throw ValidationError(path + ": expected one collection, found " + std::to_string(all.size()));
  }
  return std::move(all.front());
}

inline nlohmann::json to_json(const ApiCollection& c) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : c.entries) {
    entries.push_back({{"id", e.id},
                       {"uri", e.uri},
                       {"method", std::string(to_string(e.method))},
                       {"documentation", e.documentation}});
  }
  return {{"name", c.name}, {"entries", std::move(entries)}};
}

inline std::string serialize_collection(const ApiCollection& c) { return to_json(c).dump(2) + "\n"; }

// One "acronym<TAB>expansion words" mapping per line; '#' lines are comments.
inline AcronymDictionary parse_acronyms(std::string_view text) {
  AcronymDictionary::Map map;
  std::size_t lineno = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++lineno;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = raw.find('\t');
    if (tab == std::string::npos) {
      throw ValidationError("acronym line " + std::to_string(lineno) + ": expected 'acronym<TAB>expansion'");
    }
    std::string key(detail::trim(std::string_view(raw).substr(0, tab)));
    auto words = detail::split_whitespace(std::string_view(raw).substr(tab + 1));
    if (words.empty()) {
      throw ValidationError("acronym line " + std::to_string(lineno) + ": empty expansion for '" + key + "'");
    }
    map[key] = std::move(words);
  }
  return AcronymDictionary::from_map(std::move(map));
}

inline AcronymDictionary load_acronyms(const std::string& path) {
  return parse_acronyms(detail::read_file(path));
}

inline StopWordList parse_stopwords(std::string_view text) {
  return StopWordList::from_words(detail::split_lines(text));
}

inline StopWordList load_stopwords(const std::string& path) {
  return parse_stopwords(detail::read_file(path));
}

inline OracleLabels parse_oracle(std::string_view text, std::string_view origin = "<oracle>") {
  const nlohmann::json j = detail::parse_json(text, origin);
  if (!j.is_object()) throw ValidationError(std::string(origin) + ": oracle must be a JSON object");
  OracleLabels labels;
  for (const auto& [entry_id, rules] : j.items()) {
    if (!rules.is_object()) {
      throw ValidationError(std::string(origin) + ": labels for '" + entry_id + "' must be an object");
    }
    for (const auto& [rule_name, verdict] : rules.items()) {
      auto rule = parse_rule(rule_name);
      if (!rule) {
        throw ValidationError(std::string(origin) + ": unknown rule id '" + rule_name +
                              "'; valid rule ids: " + valid_rule_list());
      }
      if (!verdict.is_string()) {
        throw ValidationError(std::string(origin) + ": verdict for '" + entry_id + "/" + rule_name +
                              "' must be \"pattern\" or \"antipattern\"");
      }
      auto v = parse_verdict(verdict.get_ref<const std::string&>());
      if (!v) {
        throw ValidationError(std::string(origin) + ": verdict for '" + entry_id + "/" + rule_name +
                              "' must be \"pattern\" or \"antipattern\"");
      }
      labels.set(entry_id, *rule, *v);
    }
  }
  return labels;
}

inline OracleLabels load_oracle(const std::string& path) {
  return parse_oracle(detail::read_file(path), path);
}

}  // namespace restling
