#pragma once

// Word normalization shared by the rules: tokenization, acronym expansion,
// stop-word removal, lemmatization, number analysis and the CRUD verb lexicon.

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "restling/corpus_io.hpp"
#include "restling/detail/lexicon_data.hpp"
#include "restling/detail/strings.hpp"
#include "restling/errors.hpp"

namespace restling {

/// Deterministic English lemmatizer: an exception dictionary, noun plural
/// suffix rules, and verb -ed/-ing rules that fire only when the resulting
/// stem is a known verb. Applied to a fixed point, so it is idempotent.
class Lemmatizer {
 public:
  static const Lemmatizer& instance() {
    static const Lemmatizer lemmatizer;
    return lemmatizer;
  }

  std::string lemmatize(std::string_view word) const {
    std::string current(word);
    for (int round = 0; round < 8; ++round) {
      std::string next = step(current);
      if (next == current) break;
      current = std::move(next);
    }
    return current;
  }

  bool is_plural(std::string_view word) const {
    const std::string w(word);
    if (uncountable_.count(w)) return false;
    if (irregular_plurals_.count(w)) return true;
    return plural_rule(w).has_value();
  }

  bool is_known_verb(std::string_view word) const { return verbs_.count(std::string(word)) != 0; }

 private:
  Lemmatizer() {
    for (const auto& [form, lemma] : detail::kIrregularPlurals) {
      irregular_plurals_.emplace(form, lemma);
    }
    for (const auto& [form, lemma] : detail::kLemmaExceptions) exceptions_.emplace(form, lemma);
    for (auto w : detail::kUncountable) uncountable_.emplace(w);
    for (auto w : detail::kKnownVerbs) verbs_.emplace(w);
  }

  std::string step(const std::string& w) const {
    if (auto it = exceptions_.find(w); it != exceptions_.end()) return it->second;
    if (auto it = irregular_plurals_.find(w); it != irregular_plurals_.end()) return it->second;
    if (uncountable_.count(w)) return w;
    if (auto singular = plural_rule(w)) return *singular;
    if (auto stem = verb_rule(w)) return *stem;
    return w;
  }

  // Regular noun plural (and third-person -s) endings.
  std::optional<std::string> plural_rule(const std::string& w) const {
    using detail::ends_with;
    if (uncountable_.count(w) || w.size() <= 3) return std::nullopt;
    if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
    if (ends_with(w, "sses") || ends_with(w, "xes") || ends_with(w, "ches") ||
        ends_with(w, "shes") || ends_with(w, "zzes")) {
      return w.substr(0, w.size() - 2);
    }
    if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return std::nullopt;
    if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
    return std::nullopt;
  }

  std::optional<std::string> verb_rule(const std::string& w) const {
    using detail::ends_with;
    auto known = [&](const std::string& stem) -> std::optional<std::string> {
      if (verbs_.count(stem)) return stem;
      return std::nullopt;
    };
    auto undoubled = [](const std::string& stem) -> std::optional<std::string> {
      const std::size_t n = stem.size();
      if (n >= 3 && stem[n - 1] == stem[n - 2]) return stem.substr(0, n - 1);
      return std::nullopt;
    };
    if (ends_with(w, "ied") && w.size() > 4) {
      if (auto v = known(w.substr(0, w.size() - 3) + "y")) return v;
    }
    if (ends_with(w, "ed") && w.size() > 3) {
      const std::string stem = w.substr(0, w.size() - 2);
      if (auto v = known(stem)) return v;
      if (auto v = known(stem + "e")) return v;
      if (auto u = undoubled(stem)) {
        if (auto v = known(*u)) return v;
      }
    }
    if (ends_with(w, "ing") && w.size() > 4) {
      const std::string stem = w.substr(0, w.size() - 3);
      if (auto v = known(stem)) return v;
      if (auto v = known(stem + "e")) return v;
      if (auto u = undoubled(stem)) {
        if (auto v = known(*u)) return v;
      }
    }
    return std::nullopt;
  }

  std::unordered_map<std::string, std::string> irregular_plurals_;
  std::unordered_map<std::string, std::string> exceptions_;
  std::unordered_set<std::string> uncountable_;
  std::unordered_set<std::string> verbs_;
};

inline std::string lemmatize(std::string_view word) { return Lemmatizer::instance().lemmatize(word); }

/// Uncountable nouns (data, media, status, ...) are never plural.
inline bool is_plural(std::string_view word) { return Lemmatizer::instance().is_plural(word); }

enum class CrudClass { Create, Read, Update, Delete };

inline constexpr std::array<CrudClass, 4> kAllCrudClasses = {CrudClass::Create, CrudClass::Read,
                                                             CrudClass::Update, CrudClass::Delete};

inline std::string_view to_string(CrudClass c) noexcept {
  switch (c) {
    case CrudClass::Create: return "create";
    case CrudClass::Read: return "read";
    case CrudClass::Update: return "update";
    case CrudClass::Delete: return "delete";
  }
  return "";
}

class CrudLexicon {
 public:
  using Sets = std::array<std::set<std::string>, 4>;

  /// Validates that every word is a lowercase lemma and that the four sets
  /// are pairwise disjoint.
  static CrudLexicon from_sets(Sets sets) {
    std::unordered_map<std::string, CrudClass> owner;
    for (CrudClass c : kAllCrudClasses) {
      for (const auto& w : sets[static_cast<std::size_t>(c)]) {
        if (w.empty() || detail::to_lower(w) != w) {
          throw ValidationError("CRUD lexicon word '" + w + "' must be a non-empty lowercase word");
        }
        if (lemmatize(w) != w) {
          throw ValidationError("CRUD lexicon word '" + w + "' is not a lemma (base form is '" +
                                lemmatize(w) + "')");
        }
        auto [it, inserted] = owner.emplace(w, c);
        if (!inserted) {
          throw ValidationError("CRUD lexicon word '" + w + "' appears in both '" +
                                std::string(to_string(it->second)) + "' and '" +
                                std::string(to_string(c)) + "'");
        }
      }
    }
    CrudLexicon lex;
    lex.sets_ = std::move(sets);
    lex.owner_ = std::move(owner);
    return lex;
  }

  static const CrudLexicon& defaults() {
    static const CrudLexicon lex = from_sets(Sets{
        std::set<std::string>{"create", "make", "add", "new", "insert", "build", "generate",
                              "register", "post"},
        std::set<std::string>{"read", "get", "fetch", "retrieve", "show", "view", "list", "search",
                              "find", "query"},
        std::set<std::string>{"update", "modify", "edit", "change", "set", "put", "patch"},
        std::set<std::string>{"delete", "remove", "destroy", "erase", "clear", "purge"},
    });
    return lex;
  }

  std::optional<CrudClass> class_of(std::string_view word) const {
    if (auto it = owner_.find(std::string(word)); it != owner_.end()) return it->second;
    return std::nullopt;
  }

  const std::set<std::string>& words(CrudClass c) const { return sets_[static_cast<std::size_t>(c)]; }

 private:
  Sets sets_;
  std::unordered_map<std::string, CrudClass> owner_;
};

inline std::optional<CrudClass> crud_class_of(std::string_view word, const CrudLexicon& lexicon) {
  return lexicon.class_of(word);
}

/// {"create":[...],"read":[...],"update":[...],"delete":[...]}
inline CrudLexicon parse_crud_lexicon(std::string_view text, std::string_view origin = "<lexicon>") {
  const nlohmann::json j = detail::parse_json(text, origin);
  if (!j.is_object()) throw ValidationError(std::string(origin) + ": lexicon must be a JSON object");
  CrudLexicon::Sets sets;
  for (CrudClass c : kAllCrudClasses) {
    const std::string key(to_string(c));
    auto it = j.find(key);
    if (it == j.end() || !it->is_array()) {
      throw ValidationError(std::string(origin) + ": lexicon needs a '" + key + "' array");
    }
    for (const auto& w : *it) {
      if (!w.is_string()) throw ValidationError(std::string(origin) + ": '" + key + "' must hold strings");
      sets[static_cast<std::size_t>(c)].insert(w.get<std::string>());
    }
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "create" && key != "read" && key != "update" && key != "delete") {
      throw ValidationError(std::string(origin) + ": unknown lexicon class '" + key + "'");
    }
  }
  return CrudLexicon::from_sets(std::move(sets));
}

inline CrudLexicon load_crud_lexicon(const std::string& path) {
  return parse_crud_lexicon(detail::read_file(path), path);
}

inline const StopWordList& default_stopwords() {
  static const StopWordList list = StopWordList::from_words(detail::kDefaultStopWords);
  return list;
}

struct ProcessedDoc {
  std::vector<std::string> tokens;
  std::string raw;
};

/// Tokenizes on non-alphanumeric and camelCase boundaries, expands acronyms,
/// lowercases, drops stop words, single letters and numbers, then
/// lemmatizes. Tokens never contain an active stop word or acronym key.
inline ProcessedDoc preprocess(std::string_view text, const StopWordList& stopwords,
                               const AcronymDictionary& acronyms) {
  ProcessedDoc doc;
  doc.raw = std::string(text);

  std::vector<std::string> words;
  auto emit = [&](const std::string& w) {
    if (const auto* expansion = acronyms.find(w)) {
      for (const auto& e : *expansion) words.push_back(e);
    } else {
      words.push_back(detail::to_lower(w));
    }
  };

  std::string piece;
  auto flush = [&] {
    if (piece.empty()) return;
    if (const auto* expansion = acronyms.find(piece)) {
      for (const auto& e : *expansion) words.push_back(e);
    } else {
      for (const auto& w : detail::split_identifier(piece)) emit(w);
    }
    piece.clear();
  };
  for (char c : text) {
    if (detail::is_ascii_alnum(c) || detail::is_non_ascii(c)) {
      piece.push_back(c);
    } else {
      flush();
    }
  }
  flush();

  auto keep = [&](const std::string& w) {
    return w.size() > 1 && !stopwords.contains(w) && acronyms.find(w) == nullptr;
  };
  for (const auto& w : words) {
    if (!keep(w)) continue;
    std::string lemma = lemmatize(w);
    if (const auto* expansion = acronyms.find(lemma)) {
      for (const auto& e : *expansion) {
        std::string el = lemmatize(e);
        if (keep(el)) doc.tokens.push_back(std::move(el));
      }
      continue;
    }
    if (keep(lemma)) doc.tokens.push_back(std::move(lemma));
  }
  return doc;
}

}  // namespace restling
