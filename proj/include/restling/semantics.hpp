#pragma once

// Documentation corpus, LDA topic model (collapsed Gibbs sampling),
// distributional word similarity, and the node-vs-topic aggregation used by
// the semantic rules.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "restling/corpus_io.hpp"
#include "restling/errors.hpp"
#include "restling/text_pipeline.hpp"
#include "restling/uri_model.hpp"

namespace restling {

struct Corpus {
  std::vector<ProcessedDoc> documents;
  std::map<std::string, std::size_t> vocabulary;  // token -> frequency

  bool empty_vocabulary() const noexcept { return vocabulary.empty(); }
};

/// The collection's own stop-word list, or the built-in default when it has none.
inline const StopWordList& effective_stopwords(const ApiCollection& collection) {
  return collection.stopwords.empty() ? default_stopwords() : collection.stopwords;
}

inline Corpus build_corpus(const ApiCollection& collection) {
  Corpus corpus;
  const StopWordList& stop = effective_stopwords(collection);
  corpus.documents.reserve(collection.entries.size());
  for (const auto& entry : collection.entries) {
    corpus.documents.push_back(preprocess(entry.documentation, stop, collection.acronyms));
    for (const auto& t : corpus.documents.back().tokens) ++corpus.vocabulary[t];
  }
  return corpus;
}

/// Number of distinct endpoints (first literal, non-version node), clamped
/// to [1, vocabulary size].
inline int choose_k(const ApiCollection& collection, const Corpus& corpus) {
  std::set<std::string> endpoints;
  for (const auto& entry : collection.entries) {
    const ResourceUri uri = parse_uri(entry.uri);
    for (const auto& node : uri.nodes) {
      if (!node.is_literal() || is_version_node(node)) continue;
      endpoints.insert(detail::to_lower(node.raw));
      break;
    }
  }
  const std::size_t upper = std::max<std::size_t>(1, corpus.vocabulary.size());
  return static_cast<int>(std::clamp<std::size_t>(endpoints.size(), 1, upper));
}

inline int choose_k(const ApiCollection& collection) {
  return choose_k(collection, build_corpus(collection));
}

struct WeightedWord {
  std::string word;
  double weight = 0.0;
  friend bool operator==(const WeightedWord&, const WeightedWord&) = default;
};

class TopicModel {
 public:
  TopicModel() = default;

  /// Full model: `phi[t][v]` is P(vocabulary[v] | topic t).
  TopicModel(std::vector<std::string> vocabulary, std::vector<std::vector<double>> phi,
             std::uint64_t seed, std::size_t top_m = 15)
      : vocabulary_(std::move(vocabulary)), phi_(std::move(phi)), seed_(seed) {
    for (std::size_t v = 0; v < vocabulary_.size(); ++v) index_.emplace(vocabulary_[v], v);
    build_top_lists(top_m);
  }

  /// A model given only by its top-word lists; each topic spreads its mass
  /// uniformly over the listed words. Used to replay published topic tables.
  static TopicModel from_top_words(const std::vector<std::vector<std::string>>& topics,
                                   std::uint64_t seed = 0) {
    std::vector<std::string> vocab;
    std::map<std::string, std::size_t> idx;
    for (const auto& topic : topics) {
      for (const auto& w : topic) {
        if (idx.emplace(w, vocab.size()).second) vocab.push_back(w);
      }
    }
    std::vector<std::vector<double>> phi(topics.size(), std::vector<double>(vocab.size(), 0.0));
    for (std::size_t t = 0; t < topics.size(); ++t) {
      const std::set<std::string> unique(topics[t].begin(), topics[t].end());
      if (unique.empty()) throw ModelError("topic " + std::to_string(t) + " has no words");
      for (const auto& w : unique) phi[t][idx.at(w)] = 1.0 / static_cast<double>(unique.size());
    }
    TopicModel model(std::move(vocab), std::move(phi), seed, 0);
    // Keep the published order rather than re-ranking equal weights.
    model.top_.clear();
    for (const auto& topic : topics) {
      std::vector<WeightedWord> list;
      std::set<std::string> seen;
      for (const auto& w : topic) {
        if (seen.insert(w).second) list.push_back({w, 1.0 / static_cast<double>(topic.size())});
      }
      model.top_.push_back(std::move(list));
    }
    return model;
  }

  std::size_t k() const noexcept { return phi_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
  const std::vector<std::vector<WeightedWord>>& topics() const noexcept { return top_; }
  const std::vector<double>& distribution(std::size_t topic) const { return phi_.at(topic); }

  std::vector<std::string> top_words(std::size_t topic) const {
    std::vector<std::string> out;
    for (const auto& ww : top_.at(topic)) out.push_back(ww.word);
    return out;
  }

  double weight(std::size_t topic, std::string_view word) const {
    auto it = index_.find(std::string(word));
    return it == index_.end() ? 0.0 : phi_.at(topic)[it->second];
  }

  nlohmann::json to_json() const {
    nlohmann::json topics = nlohmann::json::array();
    for (const auto& list : top_) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& ww : list) arr.push_back({{"word", ww.word}, {"weight", ww.weight}});
      topics.push_back(std::move(arr));
    }
    return {{"k", k()}, {"seed", seed_}, {"topics", std::move(topics)}};
  }

  friend bool operator==(const TopicModel& a, const TopicModel& b) {
    return a.vocabulary_ == b.vocabulary_ && a.phi_ == b.phi_ && a.seed_ == b.seed_ && a.top_ == b.top_;
  }

 private:
  void build_top_lists(std::size_t top_m) {
    top_.clear();
    for (const auto& dist : phi_) {
      std::vector<std::size_t> order(dist.size());
      for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dist[a] != dist[b]) return dist[a] > dist[b];
        return vocabulary_[a] < vocabulary_[b];
      });
      order.resize(std::min(order.size(), top_m));
      std::vector<WeightedWord> list;
      for (std::size_t v : order) list.push_back({vocabulary_[v], dist[v]});
      top_.push_back(std::move(list));
    }
  }

  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<double>> phi_;
  std::vector<std::vector<WeightedWord>> top_;
  std::uint64_t seed_ = 0;
};

struct LdaOptions {
  std::optional<double> alpha;  // defaults to 50 / k
  double beta = 0.01;
  std::size_t top_m = 15;
};

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Collapsed Gibbs sampling LDA. Deterministic in (corpus, k, seed,
/// iterations, options).
inline TopicModel train_lda(const Corpus& corpus, int k, std::uint64_t seed, int iterations,
                            const LdaOptions& options = {}) {
  if (k < 1) throw ModelError("topic count must be at least 1");
  if (iterations < 1) throw ModelError("iterations must be at least 1");
  if (corpus.vocabulary.empty()) throw ModelError("cannot train on empty corpus");

  std::vector<std::string> vocab;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& [word, freq] : corpus.vocabulary) {
    index.emplace(word, vocab.size());
    vocab.push_back(word);
  }
  const std::size_t K = static_cast<std::size_t>(k);
  const std::size_t V = vocab.size();
  const double alpha = options.alpha.value_or(50.0 / static_cast<double>(k));
  const double beta = options.beta;
  const double vbeta = beta * static_cast<double>(V);

  std::vector<std::vector<std::size_t>> docs;
  for (const auto& d : corpus.documents) {
    std::vector<std::size_t> ids;
    for (const auto& t : d.tokens) ids.push_back(index.at(t));
    docs.push_back(std::move(ids));
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> z(docs.size());
  std::vector<std::vector<std::uint32_t>> n_dk(docs.size(), std::vector<std::uint32_t>(K, 0));
  std::vector<std::uint32_t> n_kw(K * V, 0);
  std::vector<std::uint32_t> n_k(K, 0);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    z[d].resize(docs[d].size());
    for (std::size_t i = 0; i < docs[d].size(); ++i) {
      const auto t = std::min(K - 1, static_cast<std::size_t>(detail::unit_double(rng) * K));
      z[d][i] = t;
      ++n_dk[d][t];
      ++n_kw[t * V + docs[d][i]];
      ++n_k[t];
    }
  }

  std::vector<double> cumulative(K);
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      for (std::size_t i = 0; i < docs[d].size(); ++i) {
        const std::size_t w = docs[d][i];
        std::size_t t = z[d][i];
        --n_dk[d][t];
        --n_kw[t * V + w];
        --n_k[t];
        double total = 0.0;
        for (std::size_t j = 0; j < K; ++j) {
          total += (n_dk[d][j] + alpha) * (n_kw[j * V + w] + beta) / (n_k[j] + vbeta);
          cumulative[j] = total;
        }
        const double u = detail::unit_double(rng) * total;
        t = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                     cumulative.begin());
        if (t >= K) t = K - 1;
        z[d][i] = t;
        ++n_dk[d][t];
        ++n_kw[t * V + w];
        ++n_k[t];
      }
    }
  }

  std::vector<std::vector<double>> phi(K, std::vector<double>(V));
  for (std::size_t t = 0; t < K; ++t) {
    double sum = 0.0;
    for (std::size_t v = 0; v < V; ++v) {
      phi[t][v] = (n_kw[t * V + v] + beta) / (n_k[t] + vbeta);
      sum += phi[t][v];
    }
    for (double& p : phi[t]) p /= sum;
  }
  return TopicModel(std::move(vocab), std::move(phi), seed, options.top_m);
}

/// Word-pair similarity. Implementations must be symmetric, return 0 for
/// unknown words, and be safe to query from several threads.
class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;
  virtual double similarity(std::string_view a, std::string_view b) const = 0;
  virtual bool contains(std::string_view word) const = 0;
};

/// Second-order co-occurrence similarity built from a corpus.
///
/// First-order vectors count context words at each relative position within
/// the window, weighted by positive PMI. A word's second-order vector is its
/// row of first-order cosine similarities against the whole vocabulary; the
/// score is the cosine of two such rows.
class CooccurrenceSimilarity final : public SimilarityProvider {
 public:
  static std::shared_ptr<CooccurrenceSimilarity> build(const Corpus& corpus, int window = 3) {
    auto sim = std::shared_ptr<CooccurrenceSimilarity>(new CooccurrenceSimilarity());
    for (const auto& [word, freq] : corpus.vocabulary) {
      sim->index_.emplace(word, sim->vocab_.size());
      sim->vocab_.push_back(word);
    }
    const std::size_t V = sim->vocab_.size();

    // Feature id = position slot * V + context word.
    std::vector<std::map<std::size_t, double>> counts(V);
    for (const auto& doc : corpus.documents) {
      std::vector<std::size_t> ids;
      for (const auto& t : doc.tokens) ids.push_back(sim->index_.at(t));
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (int off = -window; off <= window; ++off) {
          if (off == 0) continue;
          const auto j = static_cast<std::ptrdiff_t>(i) + off;
          if (j < 0 || j >= static_cast<std::ptrdiff_t>(ids.size())) continue;
          const std::size_t slot = static_cast<std::size_t>(off < 0 ? off + window : off + window - 1);
          counts[ids[i]][slot * V + ids[static_cast<std::size_t>(j)]] += 1.0;
        }
      }
    }

    double total = 0.0;
    std::vector<double> row_sum(V, 0.0);
    std::map<std::size_t, double> col_sum;
    for (std::size_t w = 0; w < V; ++w) {
      for (const auto& [f, c] : counts[w]) {
        row_sum[w] += c;
        col_sum[f] += c;
        total += c;
      }
    }

    // Sparse PPMI vectors, unit-normalized.
    std::vector<std::vector<std::pair<std::size_t, double>>> first(V);
    for (std::size_t w = 0; w < V; ++w) {
      double norm = 0.0;
      for (const auto& [f, c] : counts[w]) {
        const double pmi = std::log(c * total / (row_sum[w] * col_sum[f]));
        if (pmi > 0) {
          first[w].emplace_back(f, pmi);
          norm += pmi * pmi;
        }
      }
      norm = std::sqrt(norm);
      for (auto& [f, v] : first[w]) v /= norm;
    }

    // First-order cosine matrix via an inverted feature index.
    std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, double>>> postings;
    for (std::size_t w = 0; w < V; ++w) {
      for (const auto& [f, v] : first[w]) postings[f].emplace_back(w, v);
    }
    sim->second_.assign(V, std::vector<double>(V, 0.0));
    for (std::size_t w = 0; w < V; ++w) {
      auto& row = sim->second_[w];
      for (const auto& [f, v] : first[w]) {
        for (const auto& [u, x] : postings[f]) row[u] += v * x;
      }
      row[w] = 1.0;
    }
    for (auto& row : sim->second_) {
      double norm = 0.0;
      for (double x : row) norm += x * x;
      norm = std::sqrt(norm);
      for (double& x : row) x /= norm;
    }
    return sim;
  }

  double similarity(std::string_view a, std::string_view b) const override {
    auto ia = index_.find(std::string(a));
    auto ib = index_.find(std::string(b));
    if (ia == index_.end() || ib == index_.end()) return 0.0;
    if (ia->second == ib->second) return 1.0;
    const auto& ra = second_[ia->second];
    const auto& rb = second_[ib->second];
    double dot = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) dot += ra[i] * rb[i];
    return std::clamp(dot, 0.0, 1.0);
  }

  bool contains(std::string_view word) const override { return index_.count(std::string(word)) != 0; }
  std::size_t vocabulary_size() const noexcept { return vocab_.size(); }

 private:
  CooccurrenceSimilarity() = default;

  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<double>> second_;  // unit-normalized second-order vectors
};

/// Pre-computed word vectors ("word v1 ... vd" per line); cosine clamped to [0,1].
class VectorFileSimilarity final : public SimilarityProvider {
 public:
  static std::shared_ptr<VectorFileSimilarity> parse(std::string_view text,
                                                     std::string_view origin = "<vectors>") {
    auto sim = std::shared_ptr<VectorFileSimilarity>(new VectorFileSimilarity());
    std::size_t dim = 0;
    std::size_t line_no = 0;
    for (const auto& line : detail::split_lines(text)) {
      ++line_no;
      const auto fields = detail::split_whitespace(line);
      if (fields.empty()) continue;
      if (fields.size() < 2) {
        throw ParseError(std::string(origin) + ": vector line has no components", line_no, 1);
      }
      std::vector<double> v;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        try {
          std::size_t used = 0;
          v.push_back(std::stod(fields[i], &used));
          if (used != fields[i].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ParseError(std::string(origin) + ": bad number '" + fields[i] + "'", line_no, 1);
        }
      }
      if (dim == 0) dim = v.size();
      if (v.size() != dim) {
        throw ParseError(std::string(origin) + ": expected " + std::to_string(dim) + " components",
                         line_no, 1);
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (norm > 0) {
        for (double& x : v) x /= norm;
      }
      sim->vectors_[fields[0]] = std::move(v);
    }
    return sim;
  }

  static std::shared_ptr<VectorFileSimilarity> load(const std::string& path) {
    return parse(detail::read_file(path), path);
  }

  double similarity(std::string_view a, std::string_view b) const override {
    auto ia = vectors_.find(std::string(a));
    auto ib = vectors_.find(std::string(b));
    if (ia == vectors_.end() || ib == vectors_.end()) return 0.0;
    if (ia == ib) return 1.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < ia->second.size(); ++i) dot += ia->second[i] * ib->second[i];
    return std::clamp(dot, 0.0, 1.0);
  }

  bool contains(std::string_view word) const override { return vectors_.count(std::string(word)) != 0; }

 private:
  VectorFileSimilarity() = default;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// Stored pair scores returned verbatim (any scale). Unlisted pairs score 0,
/// except an unlisted self-pair of a known word, which scores 1.
class PairwiseTableSimilarity final : public SimilarityProvider {
 public:
  void set(const std::string& a, const std::string& b, double score) {
    table_[key(a, b)] = score;
    words_.insert(a);
    words_.insert(b);
  }

  double similarity(std::string_view a, std::string_view b) const override {
    if (auto it = table_.find(key(std::string(a), std::string(b))); it != table_.end()) return it->second;
    if (a == b && contains(a)) return 1.0;
    return 0.0;
  }

  bool contains(std::string_view word) const override { return words_.count(std::string(word)) != 0; }

 private:
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  std::map<std::pair<std::string, std::string>, double> table_;
  std::set<std::string> words_;
};

inline double second_order_similarity(std::string_view a, std::string_view b,
                                      const SimilarityProvider& provider) {
  return provider.similarity(a, b);
}

/// Best similarity between any of `words` and any topic word.
inline double max_similarity(const std::vector<std::string>& words,
                             const std::vector<std::string>& topic,
                             const SimilarityProvider& provider) {
  double best = 0.0;
  for (const auto& w : words) {
    for (const auto& t : topic) best = std::max(best, provider.similarity(w, t));
  }
  return best;
}

/// Mean over nodes of the max similarity against the topic words.
inline double aggregate_node_topic_score(const std::vector<std::string>& nodes,
                                         const std::vector<std::string>& topic,
                                         const SimilarityProvider& provider) {
  if (nodes.empty()) throw ModelError("cannot aggregate an empty node list");
  if (topic.empty()) throw ModelError("cannot aggregate against an empty topic");
  double sum = 0.0;
  for (const auto& n : nodes) sum += max_similarity({n}, topic, provider);
  return sum / static_cast<double>(nodes.size());
}

struct NodeTopicMembership {
  std::vector<std::vector<double>> score;  // [node][topic]
  std::vector<std::vector<bool>> fits;     // score > threshold

  std::vector<std::size_t> topics_of(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < fits.at(node).size(); ++t) {
      if (fits[node][t]) out.push_back(t);
    }
    return out;
  }
};

/// Each node is a group of words (one URI segment); its score for a topic is
/// the best similarity of any of its words to any of the topic's top words.
inline NodeTopicMembership node_topic_memberships(const std::vector<std::vector<std::string>>& nodes,
                                                  const TopicModel& model,
                                                  const SimilarityProvider& provider,
                                                  double threshold) {
  NodeTopicMembership m;
  std::vector<std::vector<std::string>> topics;
  for (std::size_t t = 0; t < model.k(); ++t) topics.push_back(model.top_words(t));
  for (const auto& words : nodes) {
    std::vector<double> scores;
    std::vector<bool> fits;
    for (const auto& topic : topics) {
      const double s = max_similarity(words, topic, provider);
      scores.push_back(s);
      fits.push_back(s > threshold);
    }
    m.score.push_back(std::move(scores));
    m.fits.push_back(std::move(fits));
  }
  return m;
}

}  // namespace restling
