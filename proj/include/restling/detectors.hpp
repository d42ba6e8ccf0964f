#pragma once

// The nine linguistic rules and the batch runner.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "restling/corpus_io.hpp"
#include "restling/errors.hpp"
#include "restling/hierarchy.hpp"
#include "restling/semantics.hpp"
#include "restling/text_pipeline.hpp"
#include "restling/types.hpp"
#include "restling/uri_model.hpp"

namespace restling {

enum class EvidenceKind { Node, Token, Char, Document };

inline std::string_view to_string(EvidenceKind k) noexcept {
  switch (k) {
    case EvidenceKind::Node: return "node";
    case EvidenceKind::Token: return "token";
    case EvidenceKind::Char: return "char";
    case EvidenceKind::Document: return "document";
  }
  return "";
}

struct Evidence {
  EvidenceKind kind = EvidenceKind::Node;
  std::size_t position = 0;  // node index, token index or byte offset
  std::string reason;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Finding {
  std::string entry_id;
  RuleId rule = RuleId::AmorphousUri;
  Verdict verdict = Verdict::Pattern;
  std::vector<Evidence> evidence;
  std::optional<double> score;  // semantic rules only
  friend bool operator==(const Finding&, const Finding&) = default;
};

namespace detail {

inline Finding make_finding(const ApiEntry& entry, RuleId rule, std::vector<Evidence> evidence) {
  Finding f;
  f.entry_id = entry.id;
  f.rule = rule;
  f.verdict = evidence.empty() ? Verdict::Pattern : Verdict::Antipattern;
  f.evidence = std::move(evidence);
  return f;
}

// camelCase: a lowercase first letter followed only by letters and digits.
inline bool is_camel_case(std::string_view s) {
  if (s.empty() || !is_ascii_lower(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_ascii_alnum(c); });
}

inline bool has_upper(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return is_ascii_upper(c); });
}

inline bool is_identifier_word(std::string_view w) {
  return w == "id" || w == "ids" || w == "uuid" || w == "guid";
}

}  // namespace detail

/// Semantic words of each path segment: acronym-expanded, stop-word-free
/// lemmas, without identifier words ("id", "uuid"). Version segments and
/// segments left without words are omitted.
struct SemanticNode {
  std::size_t node_index = 0;
  bool literal = true;
  std::vector<std::string> words;
};

inline std::vector<SemanticNode> semantic_nodes(const ResourceUri& uri, const StopWordList& stopwords,
                                                const AcronymDictionary& acronyms) {
  std::vector<SemanticNode> out;
  for (std::size_t i = 0; i < uri.nodes.size(); ++i) {
    const UriNode& node = uri.nodes[i];
    if (is_version_node(node)) continue;
    SemanticNode sn{i, node.is_literal(), {}};
    for (auto& t : preprocess(node.raw, stopwords, acronyms).tokens) {
      if (!detail::is_identifier_word(t)) sn.words.push_back(std::move(t));
    }
    if (!sn.words.empty()) out.push_back(std::move(sn));
  }
  return out;
}

inline Finding detect_amorphous(const ApiEntry& entry, const ResourceUri& uri) {
  std::vector<Evidence> ev;
  for (std::size_t i = 0; i < uri.nodes.size(); ++i) {
    const UriNode& node = uri.nodes[i];
    if (node.is_literal()) {
      if (detail::has_upper(node.raw) && !detail::is_camel_case(node.raw)) {
        ev.push_back({EvidenceKind::Node, i, "upper-case letter in '" + node.raw + "'"});
      }
      if (node.raw.find('_') != std::string::npos) {
        ev.push_back({EvidenceKind::Node, i, "underscore in '" + node.raw + "'"});
      }
    }
    if (i + 1 == uri.nodes.size()) {
      if (auto ext = detect_file_extension(node)) {
        ev.push_back({EvidenceKind::Node, i, "file extension '." + *ext + "'"});
      }
    }
  }
  if (uri.has_trailing_slash && !uri.nodes.empty()) {
    const std::size_t path_end = uri.query ? uri.raw.size() - uri.query->size() - 2 : uri.raw.size() - 1;
    ev.push_back({EvidenceKind::Char, path_end, "trailing slash"});
  }
  return detail::make_finding(entry, RuleId::AmorphousUri, std::move(ev));
}

/// Contextless verdict from pairwise topic intersection: each segment's
/// topics are those it fits (best word-to-topic-word similarity above the
/// threshold). Antipattern when two adjacent segments share no topic, or
/// when no segment fits any topic. `score` carries the URI-level average:
/// the best topic's mean over words of their max similarity.
inline Finding detect_contextless(const ApiEntry& entry, const ResourceUri& uri,
                                  const TopicModel& model, const SimilarityProvider& provider,
                                  double threshold, const StopWordList& stopwords,
                                  const AcronymDictionary& acronyms) {
  if (model.k() == 0) throw ModelError("contextless detection needs a trained topic model");
  const auto nodes = semantic_nodes(uri, stopwords, acronyms);
  Finding f = detail::make_finding(entry, RuleId::ContextlessResourceNames, {});
  if (nodes.empty()) return f;

  std::vector<std::vector<std::string>> groups;
  std::vector<std::string> flat;
  for (const auto& n : nodes) {
    groups.push_back(n.words);
    for (const auto& w : n.words) {
      if (std::find(flat.begin(), flat.end(), w) == flat.end()) flat.push_back(w);
    }
  }
  const NodeTopicMembership m = node_topic_memberships(groups, model, provider, threshold);

  double best = 0.0;
  for (std::size_t t = 0; t < model.k(); ++t) {
    best = std::max(best, aggregate_node_topic_score(flat, model.top_words(t), provider));
  }
  f.score = best;

  auto describe = [&](std::size_t i) {
    std::string s = "'" + uri.nodes[nodes[i].node_index].raw + "' topics {";
    const auto topics = m.topics_of(i);
    for (std::size_t j = 0; j < topics.size(); ++j) s += (j ? "," : "") + std::to_string(topics[j] + 1);
    return s + "}";
  };

  bool any_fit = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) any_fit = any_fit || !m.topics_of(i).empty();
  if (!any_fit) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      f.evidence.push_back({EvidenceKind::Node, nodes[i].node_index, describe(i) + " fits no topic"});
    }
  } else {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      bool shared = false;
      for (std::size_t t = 0; t < model.k(); ++t) shared = shared || (m.fits[i][t] && m.fits[i + 1][t]);
      if (!shared) {
        f.evidence.push_back({EvidenceKind::Node, nodes[i + 1].node_index,
                              describe(i) + " and " + describe(i + 1) + " share no topic"});
      }
    }
  }
  f.verdict = f.evidence.empty() ? Verdict::Pattern : Verdict::Antipattern;
  return f;
}

inline Finding detect_crudy(const ApiEntry& entry, const ResourceUri& uri, const CrudLexicon& lexicon) {
  std::vector<Evidence> ev;
  for (std::size_t i = 0; i < uri.nodes.size(); ++i) {
    const UriNode& node = uri.nodes[i];
    if (!node.is_literal() || is_version_node(node)) continue;
    for (const auto& w : node.words) {
      const std::string lemma = lemmatize(w);
      if (auto c = lexicon.class_of(lemma)) {
        ev.push_back({EvidenceKind::Node, i,
                      "'" + w + "' is a " + std::string(to_string(*c)) + " term"});
      }
    }
  }
  return detail::make_finding(entry, RuleId::CrudyUri, std::move(ev));
}

/// Adjacent literal segments (templates and versions skipped) must run from
/// general to specific whenever the table relates them.
inline Finding detect_non_hierarchical(const ApiEntry& entry, const ResourceUri& uri,
                                       const HierarchyTable& table) {
  std::vector<std::pair<std::size_t, std::string>> heads;
  for (std::size_t i = 0; i < uri.nodes.size(); ++i) {
    const UriNode& node = uri.nodes[i];
    if (!node.is_literal() || is_version_node(node) || node.words.empty()) continue;
    heads.emplace_back(i, lemmatize(node.words.back()));
  }
  std::vector<Evidence> ev;
  for (std::size_t j = 0; j + 1 < heads.size(); ++j) {
    const auto& [ia, a] = heads[j];
    const auto& [ib, b] = heads[j + 1];
    if (table.contains(b, a)) {
      ev.push_back({EvidenceKind::Node, ib, "'" + b + "' contains '" + a + "' but follows it"});
    }
  }
  return detail::make_finding(entry, RuleId::NonHierarchicalNodes, std::move(ev));
}

inline Finding detect_pluralised(const ApiEntry& entry, const ResourceUri& uri) {
  std::vector<Evidence> ev;
  for (std::size_t i = uri.nodes.size(); i-- > 0;) {
    const UriNode& node = uri.nodes[i];
    if (!node.is_literal() || is_version_node(node) || node.words.empty()) continue;
    const std::string& last = node.words.back();
    const bool plural = is_plural(last);
    if (plural && (entry.method == HttpMethod::Put || entry.method == HttpMethod::Delete)) {
      ev.push_back({EvidenceKind::Node, i,
                    "plural '" + last + "' with " + std::string(to_string(entry.method))});
    } else if (!plural && entry.method == HttpMethod::Post) {
      ev.push_back({EvidenceKind::Node, i, "singular '" + last + "' with POST"});
    }
    break;
  }
  return detail::make_finding(entry, RuleId::PluralisedNodes, std::move(ev));
}

/// Score = mean over the URI's literal words of their best similarity to any
/// documentation token. Pertinent when score >= threshold.
inline Finding detect_non_pertinent_doc(const ApiEntry& entry, const ResourceUri& uri,
                                        const ProcessedDoc& doc, const SimilarityProvider& provider,
                                        double threshold, const StopWordList& stopwords,
                                        const AcronymDictionary& acronyms) {
  Finding f = detail::make_finding(entry, RuleId::NonPertinentDocumentation, {});
  if (doc.tokens.empty()) {
    const std::string why = detail::trim(doc.raw).empty() ? "no documentation"
                                                          : "documentation has no content words";
    f.evidence.push_back({EvidenceKind::Document, 0, why});
    f.verdict = Verdict::Antipattern;
    return f;
  }
  std::vector<std::pair<std::size_t, std::string>> words;
  for (const auto& n : semantic_nodes(uri, stopwords, acronyms)) {
    if (!n.literal) continue;
    for (const auto& w : n.words) {
      const bool seen = std::any_of(words.begin(), words.end(), [&](const auto& p) { return p.second == w; });
      if (!seen) words.emplace_back(n.node_index, w);
    }
  }
  if (words.empty()) return f;

  double sum = 0.0;
  for (const auto& [idx, w] : words) sum += max_similarity({w}, doc.tokens, provider);
  f.score = sum / static_cast<double>(words.size());
  if (*f.score < threshold) {
    f.evidence.push_back({EvidenceKind::Document, 0,
                          "relatedness " + std::to_string(*f.score) + " below threshold " +
                              std::to_string(threshold)});
    f.verdict = Verdict::Antipattern;
  }
  return f;
}

/// CRUD classes each method's documentation must not mention.
inline std::vector<CrudClass> conflicting_classes(HttpMethod m) {
  switch (m) {
    case HttpMethod::Post: return {CrudClass::Delete, CrudClass::Update, CrudClass::Read};
    case HttpMethod::Delete: return {CrudClass::Create, CrudClass::Update, CrudClass::Read};
    case HttpMethod::Put: return {CrudClass::Create, CrudClass::Delete, CrudClass::Read};
    case HttpMethod::Get: return {CrudClass::Delete, CrudClass::Update, CrudClass::Create};
    default: return {};
  }
}

/// Documentation tokens that also name a URI segment describe the resource
/// rather than the action, so they are not checked against the method.
inline Finding detect_inconsistent_doc(const ApiEntry& entry, const ResourceUri& uri,
                                       const ProcessedDoc& doc, const CrudLexicon& lexicon) {
  std::set<std::string> uri_words;
  for (const auto& node : uri.nodes) {
    for (const auto& w : node.words) uri_words.insert(lemmatize(w));
  }
  const auto conflicts = conflicting_classes(entry.method);
  std::vector<Evidence> ev;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const std::string& t = doc.tokens[i];
    if (uri_words.count(t)) continue;
    const auto c = lexicon.class_of(t);
    if (c && std::find(conflicts.begin(), conflicts.end(), *c) != conflicts.end()) {
      ev.push_back({EvidenceKind::Token, i,
                    "'" + t + "' (" + std::string(to_string(*c)) + ") contradicts " +
                        std::string(to_string(entry.method))});
    }
  }
  return detail::make_finding(entry, RuleId::InconsistentDocumentation, std::move(ev));
}

inline Finding detect_unversioned(const ApiEntry& entry, const ResourceUri& uri) {
  std::vector<Evidence> ev;
  if (!detect_version_segment(uri)) ev.push_back({EvidenceKind::Node, 0, "no version segment"});
  return detail::make_finding(entry, RuleId::UnversionedUri, std::move(ev));
}

inline Finding detect_non_standard(const ApiEntry& entry, const ResourceUri& uri) {
  std::vector<Evidence> ev;
  for (const auto& issue : scan_nonstandard_chars(uri)) {
    ev.push_back({EvidenceKind::Char, issue.position,
                  std::string(to_string(issue.category)) + " '" + issue.character + "'"});
  }
  return detail::make_finding(entry, RuleId::NonStandardUri, std::move(ev));
}

inline bool is_semantic_rule(RuleId r) noexcept {
  return r == RuleId::ContextlessResourceNames || r == RuleId::NonPertinentDocumentation;
}

struct AnalysisConfig {
  double threshold = 0.3;
  std::optional<int> topics_k;
  std::uint64_t seed = 42;
  int iterations = 1000;
  LdaOptions lda;
  std::vector<RuleId> rules{kAllRules.begin(), kAllRules.end()};
  CrudLexicon lexicon = CrudLexicon::defaults();
  std::shared_ptr<const SimilarityProvider> provider;  // default: built from the corpus
  const HierarchyTable* hierarchy = nullptr;           // default: HierarchyTable::defaults()
  unsigned threads = 1;

  void validate() const {
    if (!(threshold > 0.0 && threshold < 1.0)) {
      throw ValidationError("threshold must lie in (0, 1), got " + std::to_string(threshold));
    }
    if (iterations < 1) throw ValidationError("iterations must be at least 1");
    if (topics_k && *topics_k < 1) throw ValidationError("topic count must be at least 1");
    if (rules.empty()) throw ValidationError("at least one rule must be selected");
  }
};

struct RuleTiming {
  RuleId rule;
  double seconds = 0.0;
};

struct RuleError {
  RuleId rule;
  std::string message;
};

struct AnalysisResult {
  std::vector<Finding> findings;  // entry order, then rule order
  std::vector<RuleTiming> timings;
  std::vector<RuleError> errors;
  std::optional<TopicModel> model;
};

/// Runs the selected rules over every entry. Rules run one batch at a time
/// and each batch is timed; entries within a batch may be split across
/// threads without affecting the result. The topic model and similarity
/// space are built on first need, and their cost is charged to that rule.
/// A model failure is recorded per semantic rule; other rules still run.
inline AnalysisResult run_all(const ApiCollection& collection, const AnalysisConfig& config) {
  config.validate();
  AnalysisResult result;
  const std::size_t n = collection.entries.size();
  if (n == 0) return result;

  const StopWordList& stop = effective_stopwords(collection);
  const HierarchyTable& hierarchy = config.hierarchy ? *config.hierarchy : HierarchyTable::defaults();

  std::vector<ResourceUri> uris;
  std::vector<ProcessedDoc> docs;
  uris.reserve(n);
  docs.reserve(n);
  for (const auto& e : collection.entries) {
    uris.push_back(parse_uri(e.uri));
    docs.push_back(preprocess(e.documentation, stop, collection.acronyms));
  }

  std::optional<Corpus> corpus;
  std::shared_ptr<const SimilarityProvider> provider = config.provider;
  std::optional<std::string> model_error;
  auto ensure_provider = [&] {
    if (provider) return;
    if (!corpus) corpus = build_corpus(collection);
    provider = CooccurrenceSimilarity::build(*corpus);
  };
  auto ensure_model = [&] {
    if (result.model || model_error) return;
    try {
      if (!corpus) corpus = build_corpus(collection);
      const int k = config.topics_k.value_or(choose_k(collection, *corpus));
      result.model = train_lda(*corpus, k, config.seed, config.iterations, config.lda);
    } catch (const ModelError& e) {
      model_error = e.what();
    }
  };

  std::vector<RuleId> rules;
  for (RuleId r : kAllRules) {
    if (std::find(config.rules.begin(), config.rules.end(), r) != config.rules.end()) rules.push_back(r);
  }
  std::vector<std::vector<std::optional<Finding>>> table(n, std::vector<std::optional<Finding>>(kAllRules.size()));

  for (RuleId rule : rules) {
    const auto start = std::chrono::steady_clock::now();
    bool failed = false;
    if (rule == RuleId::ContextlessResourceNames) {
      ensure_model();
      if (model_error) {
        result.errors.push_back({rule, *model_error});
        failed = true;
      }
    }
    if (!failed && is_semantic_rule(rule)) ensure_provider();

    if (!failed) {
      auto eval = [&](std::size_t i) -> Finding {
        const ApiEntry& e = collection.entries[i];
        switch (rule) {
          case RuleId::AmorphousUri: return detect_amorphous(e, uris[i]);
          case RuleId::ContextlessResourceNames:
            return detect_contextless(e, uris[i], *result.model, *provider, config.threshold, stop,
                                      collection.acronyms);
          case RuleId::CrudyUri: return detect_crudy(e, uris[i], config.lexicon);
          case RuleId::NonHierarchicalNodes: return detect_non_hierarchical(e, uris[i], hierarchy);
          case RuleId::PluralisedNodes: return detect_pluralised(e, uris[i]);
          case RuleId::NonPertinentDocumentation:
            return detect_non_pertinent_doc(e, uris[i], docs[i], *provider, config.threshold, stop,
                                            collection.acronyms);
          case RuleId::InconsistentDocumentation:
            return detect_inconsistent_doc(e, uris[i], docs[i], config.lexicon);
          case RuleId::UnversionedUri: return detect_unversioned(e, uris[i]);
          case RuleId::NonStandardUri: return detect_non_standard(e, uris[i]);
        }
        throw ValidationError("unknown rule");
      };
      const std::size_t slot = rule_index(rule);
      const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(n)));
      if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) table[i][slot] = eval(i);
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) table[i][slot] = eval(i);
          });
        }
        for (auto& t : pool) t.join();
      }
    }
    const auto stop_time = std::chrono::steady_clock::now();
    result.timings.push_back({rule, std::chrono::duration<double>(stop_time - start).count()});
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (auto& f : table[i]) {
      if (f) result.findings.push_back(std::move(*f));
    }
  }
  return result;
}

}  // namespace restling
