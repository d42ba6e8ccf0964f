// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "restling/restling.hpp"

using namespace restling;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// ---------------------------------------------------------------------------
// 1. Fixture classification

Outcome criterion_fixture() {
  Outcome o;
  const auto t0 = Clock::now();
  const ApiCollection c = load_collection(std::string(RESTLING_FIXTURES) + "/cited_examples.json");
  const auto& lex = CrudLexicon::defaults();
  const auto& stop = effective_stopwords(c);

  auto check = [&](const std::string& id, RuleId rule, Verdict want) {
    const ApiEntry* e = c.find(id);
    if (!e) {
      o.expect(false, "missing entry " + id);
      return;
    }
    const ResourceUri uri = parse_uri(e->uri);
    const ProcessedDoc doc = preprocess(e->documentation, stop, c.acronyms);
    Finding f;
    switch (rule) {
      case RuleId::AmorphousUri: f = detect_amorphous(*e, uri); break;
      case RuleId::CrudyUri: f = detect_crudy(*e, uri, lex); break;
      case RuleId::NonHierarchicalNodes: f = detect_non_hierarchical(*e, uri, HierarchyTable::defaults()); break;
      case RuleId::PluralisedNodes: f = detect_pluralised(*e, uri); break;
      case RuleId::InconsistentDocumentation: f = detect_inconsistent_doc(*e, uri, doc, lex); break;
      case RuleId::UnversionedUri: f = detect_unversioned(*e, uri); break;
      case RuleId::NonStandardUri: f = detect_non_standard(*e, uri); break;
      default: o.expect(false, "unexpected rule"); return;
    }
    o.expect(f.verdict == want, id + " " + std::string(to_string(rule)) + " expected " +
                                    std::string(to_string(want)));
  };

  const auto A = Verdict::Antipattern;
  const auto P = Verdict::Pattern;
  check("amorphous", RuleId::AmorphousUri, A);
  check("tidy", RuleId::AmorphousUri, P);
  check("droplit-shortcode", RuleId::CrudyUri, A);
  check("artik-search", RuleId::CrudyUri, A);
  check("ibm-remove-delete", RuleId::InconsistentDocumentation, A);
  check("ibm-remove-remove", RuleId::InconsistentDocumentation, P);
  check("droplit-clients", RuleId::InconsistentDocumentation, A);
  check("versioned", RuleId::UnversionedUri, P);
  check("unversioned", RuleId::UnversionedUri, A);
  check("reception-accent", RuleId::NonStandardUri, A);
  check("reception-plain", RuleId::NonStandardUri, P);
  check("cubesensors-device", RuleId::NonStandardUri, A);
  check("thethings-resource", RuleId::NonStandardUri, A);
  check("delete-players", RuleId::PluralisedNodes, A);
  check("non-hierarchical", RuleId::NonHierarchicalNodes, A);
  check("hierarchical", RuleId::NonHierarchicalNodes, P);
  const double secs = seconds_since(t0);
  o.expect(secs < 1.0, "runtime under 1 s");
  o.detail << "16 verdicts checked in " << secs << " s";
  return o;
}

// ---------------------------------------------------------------------------
// 2. Topic/URI aggregation against the published similarity matrix

const std::vector<std::string> kColumns = {"device", "thermostat", "locale", "structure", "alarm", "state"};

struct MatrixRow {
  const char* word;
  double v[6];
};

// clang-format off
const std::vector<std::vector<MatrixRow>> kTopics = {
    {{"eco", {.0528, .0130, .0275, .0207, .0146, .0064}},
     {"record", {.0068, 0, 0, 0, .0129, 0}},
     {"estimate", {.0611, .0192, .0241, .0928, .0239, 0}},
     {"lock", {.2254, .3378, .0055, .1275, .1955, 0}},
     {"adjust", {.2026, .2575, .0170, .0721, .1936, 0}},
     {"format", {.5311, .0922, .0451, .1478, .0990, 0}},
     {"related", {.0349, .0129, 0, .0327, .0232, 0}},
     {"json", {.1962, .0182, .0253, .0702, .0313, 0}},
     {"call", {.0656, .0081, .0058, .0648, .0915, 0}},
     {"sign", {0, 0, .0057, 0, .0060, .0058}},
     {"home", {0, 0, .0703, .0817, 0, .0062}},
     {"sound", {.1645, .0919, .1588, .1853, .2277, 0}},
     {"bandwidth", {.7259, .2130, .0317, .0944, .2545, 0}},
     {"low", {.0517, .0958, .0113, .0521, .0636, 0}},
     {"image", {.3504, .0788, .1595, .5273, .1274, 0}}},
    {{"smoke", {.0054, .1065, .0058, .0059, .0609, 0}},
     {"sound", {.1645, .0919, .1588, .1853, .2277, 0}},
     {"snapshot", {.3066, .0178, .0395, .0732, .0863, 0}},
     {"status", {.0588, .0135, .1419, .2592, .0188, .0291}},
     {"change", {.0976, .0603, .0805, .3649, .0852, 0}},
     {"list", {.0348, .0069, .0741, .1001, .0054, .1672}},
     {"display", {.7431, .1763, .0842, .2419, .1894, 0}},
     {"nest", {.0054, 0, .0495, .0118, 0, .0061}},
     {"expire", {.0442, 0, .0060, .0055, .0072, .0364}},
     {"home", {0, 0, .0703, .0817, 0, .0062}},
     {"detect", {.3562, .1291, 0, .1933, .3026, 0}},
     {"subscription", {.2463, .0113, .0059, .0180, .0687, 0}},
     {"field", {.1114, .0193, .1001, .1900, .0117, .0136}},
     {"live", {0, 0, .0836, .0260, .0062, .0069}},
     {"motion", {.3378, .1946, .0657, .4712, .2228, 0}}},
    {{"device", {2, .4916, .0242, .2111, .4377, 0}},
     {"structure", {.2111, .0569, .1645, 2, .0210, 0}},
     {"thermostat", {.4916, 2, .0057, .0569, .3944, 0}},
     {"event", {.0175, .0118, .1557, .0507, .0152, 0}},
     {"nest", {.0054, 0, .0495, .0118, 0, .0061}},
     {"camera", {1.0680, .3072, .0177, .1089, .4096, 0}},
     {"url", {.2685, .0117, .0177, .0577, .0766, 0}},
     {"display", {.7431, .1763, .0842, .2419, .1894, 0}},
     {"temperature", {.0987, .2084, .0645, .1731, .0681, 0}},
     {"require", {.4377, .3944, 0, .0210, .1611, 0}},
     {"alarm", {.3914, .1334, .0167, .1543, 2, .0140}},
     {"hvac", {.3133, .8992, 0, .0351, .2735, 0}},
     {"aware", {.0060, 0, 0, .0116, .1789, 0}},
     {"zone", {.0729, .0402, .4626, .2317, .0195, .0727}},
     {"activity", {.1565, .0371, .2037, .3848, .0912, .0053}}},
};
// clang-format on

Outcome criterion_aggregation() {
  Outcome o;
  const auto t0 = Clock::now();
  PairwiseTableSimilarity sim;
  std::vector<std::vector<std::string>> topic_words;
  for (const auto& topic : kTopics) {
    std::vector<std::string> words;
    for (const auto& row : topic) {
      words.push_back(row.word);
      for (std::size_t c = 0; c < kColumns.size(); ++c) sim.set(row.word, kColumns[c], row.v[c]);
    }
    topic_words.push_back(std::move(words));
  }

  const std::vector<std::string> uri1 = {"device", "thermostat", "locale"};
  const std::vector<std::string> uri2 = {"structure", "alarm", "state"};
  const double want1[3] = {0.4077, 0.3655, 1.4875};
  const double want2[3] = {0.2627, 0.3137, 1.3576};
  for (std::size_t t = 0; t < 3; ++t) {
    const double got1 = aggregate_node_topic_score(uri1, topic_words[t], sim);
    const double got2 = aggregate_node_topic_score(uri2, topic_words[t], sim);
    o.expect(std::fabs(got1 - want1[t]) < 1e-4, "URI 1 topic " + std::to_string(t + 1));
    o.expect(std::fabs(got2 - want2[t]) < 1e-4, "URI 2 topic " + std::to_string(t + 1));
    char buf[96];
    std::snprintf(buf, sizeof buf, "T%zu: %.4f/%.4f ", t + 1, got1, got2);
    o.detail << buf;
  }

  const TopicModel model = TopicModel::from_top_words(topic_words);
  auto verdict = [&](const std::string& uri) {
    const ApiEntry e{"x", uri, HttpMethod::Get, ""};
    return detect_contextless(e, parse_uri(uri), model, sim, 0.3, default_stopwords(), {}).verdict;
  };
  o.expect(verdict("/devices/thermostats/device_id/locale") == Verdict::Pattern, "URI 1 contextualised");
  o.expect(verdict("/structures/structure_id/co_alarm_state") == Verdict::Pattern, "URI 2 contextualised");
  o.expect(verdict("/devices/thermostats/device_id/time_to_target_training") == Verdict::Antipattern,
           "off-topic node is contextless");
  const double secs = seconds_since(t0);
  o.expect(secs < 1.0, "runtime under 1 s");
  o.detail << "in " << secs << " s";
  return o;
}

// ---------------------------------------------------------------------------
// 3. Validation metrics

Outcome criterion_metrics() {
  Outcome o;
  const auto t0 = Clock::now();
  struct Row {
    RuleId rule;
    ConfusionMatrix m;
    double accuracy_pct;
    std::optional<double> mcc;
  };
  const std::vector<Row> rows = {
      {RuleId::AmorphousUri, {1, 3, 27, 60}, 67, -0.03},
      {RuleId::ContextlessResourceNames, {6, 5, 15, 65}, 78, 0.28},
      {RuleId::CrudyUri, {3, 0, 3, 85}, 97, 0.69},
      {RuleId::NonHierarchicalNodes, {0, 0, 14, 77}, 85, std::nullopt},
      {RuleId::PluralisedNodes, {25, 6, 5, 55}, 88, 0.73},
      {RuleId::NonPertinentDocumentation, {8, 50, 4, 29}, 41, 0.02},
      {RuleId::UnversionedUri, {67, 0, 0, 24}, 100, 1.00},
      {RuleId::InconsistentDocumentation, {19, 7, 8, 57}, 84, 0.60},
      {RuleId::NonStandardUri, {2, 0, 10, 79}, 89, 0.38},
  };
  Evaluation ev;
  for (const auto& r : rows) {
    ev.rules[r.rule] = r.m;
    const double acc = *r.m.accuracy() * 100.0;
    o.expect(std::fabs(acc - r.accuracy_pct) <= 0.5, std::string(to_string(r.rule)) + " accuracy");
    if (r.mcc) {
      o.expect(r.m.mcc() && std::fabs(*r.m.mcc() - *r.mcc) <= 0.01, std::string(to_string(r.rule)) + " MCC");
    } else {
      o.expect(!r.m.mcc(), std::string(to_string(r.rule)) + " MCC n/a");
    }
  }
  compute_macro(ev);
  o.expect(ev.macro_accuracy && std::fabs(*ev.macro_accuracy - 0.81) <= 0.01, "macro accuracy");
  o.expect(ev.macro_mcc && std::fabs(*ev.macro_mcc - 0.46) <= 0.01, "macro MCC");
  const double secs = seconds_since(t0);
  o.expect(secs < 1.0, "runtime under 1 s");
  o.detail << "macro accuracy " << *ev.macro_accuracy << ", macro MCC " << *ev.macro_mcc << " in " << secs
           << " s";
  return o;
}

// ---------------------------------------------------------------------------
// 4. Pattern-vs-antipattern statistics over the 19-API results table

// Per API: 18 counts alternating antipattern, pattern for the nine rules.
const std::vector<std::array<int, 18>> kResults = {
    {0, 150, 0, 150, 9, 141, 0, 150, 39, 111, 113, 37, 8, 142, 148, 2, 0, 150},
    {0, 14, 0, 14, 0, 14, 0, 14, 4, 10, 1, 13, 0, 14, 14, 0, 0, 14},
    {0, 20, 0, 20, 0, 20, 0, 20, 5, 15, 9, 11, 7, 13, 20, 0, 0, 20},
    {1, 6, 2, 5, 0, 7, 0, 7, 2, 5, 7, 0, 2, 5, 0, 7, 0, 7},
    {0, 34, 0, 34, 0, 34, 0, 34, 4, 30, 20, 14, 0, 34, 34, 0, 0, 34},
    {0, 5, 0, 5, 0, 5, 0, 5, 3, 2, 2, 3, 0, 5, 5, 0, 0, 5},
    {0, 84, 0, 84, 0, 84, 0, 84, 23, 61, 66, 18, 3, 81, 48, 36, 0, 84},
    {1, 3, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 3, 1},
    {7, 45, 1, 51, 1, 51, 0, 52, 12, 40, 21, 31, 1, 51, 0, 52, 0, 52},
    {0, 47, 4, 43, 0, 47, 0, 47, 2, 45, 29, 18, 0, 47, 47, 0, 0, 47},
    {0, 139, 4, 135, 3, 136, 0, 139, 27, 112, 82, 57, 1, 138, 139, 0, 0, 139},
    {0, 63, 7, 56, 2, 61, 0, 63, 23, 40, 15, 48, 2, 61, 63, 0, 0, 63},
    {0, 210, 74, 136, 3, 207, 0, 210, 42, 168, 210, 0, 59, 151, 2, 208, 0, 210},
    {0, 17, 0, 17, 0, 17, 0, 17, 5, 12, 0, 17, 0, 17, 17, 0, 0, 17},
    {0, 137, 4, 133, 1, 136, 0, 137, 29, 108, 71, 66, 2, 135, 137, 0, 0, 137},
    {0, 49, 2, 47, 2, 47, 0, 49, 35, 14, 27, 22, 0, 49, 47, 2, 0, 49},
    {0, 11, 0, 11, 0, 11, 0, 11, 4, 7, 5, 6, 0, 11, 11, 0, 0, 11},
    {0, 33, 1, 32, 0, 33, 0, 33, 9, 24, 22, 11, 0, 33, 0, 33, 1, 32},
    {0, 26, 0, 26, 0, 26, 0, 26, 1, 25, 12, 14, 0, 26, 0, 26, 0, 26},
};

Outcome criterion_statistics() {
  Outcome o;
  const auto t0 = Clock::now();
  struct Expect {
    const char* name;
    double delta;
    Magnitude magnitude;
    bool significant;
  };
  // Column order of the results table.
  const std::vector<Expect> expected = {
      {"amorphous", -0.9833795, Magnitude::Large, true},
      {"contextless", -0.8975069, Magnitude::Large, true},
      {"crudy", -0.9833795, Magnitude::Large, true},
      {"non-hierarchical", -1.0, Magnitude::Large, true},
      {"pluralised", -0.4903047, Magnitude::Large, true},
      {"non-pertinent", 0.1024931, Magnitude::Negligible, false},
      {"inconsistent", -0.8947368, Magnitude::Large, true},
      {"unversioned", 0.3518006, Magnitude::Medium, false},
      {"non-standard", -0.9916898, Magnitude::Large, true},
  };
  int significant = 0;
  for (std::size_t r = 0; r < expected.size(); ++r) {
    std::vector<double> anti, pat;
    for (const auto& api : kResults) {
      anti.push_back(api[2 * r]);
      pat.push_back(api[2 * r + 1]);
    }
    const StatTestResult s = compare_samples(anti, pat);
    o.expect(std::fabs(s.delta - expected[r].delta) < 1e-6, std::string(expected[r].name) + " delta");
    o.expect(s.magnitude == expected[r].magnitude, std::string(expected[r].name) + " magnitude");
    o.expect(s.significant() == expected[r].significant, std::string(expected[r].name) + " significance");
    if (s.significant()) ++significant;
  }
  o.expect(significant == 7, "seven significant comparisons");
  const double secs = seconds_since(t0);
  o.expect(secs < 1.0, "runtime under 1 s");
  o.detail << significant << "/9 significant at 0.05, deltas match to 1e-6, in " << secs << " s";
  return o;
}

// ---------------------------------------------------------------------------
// 5. LDA properties

Corpus synthetic_lda_corpus(std::size_t docs, std::uint64_t seed) {
  const std::vector<std::vector<std::string>> themes = {
      {"thermostat", "temperature", "heat", "cool", "mode", "target", "humidity", "fan"},
      {"camera", "image", "snapshot", "motion", "sound", "stream", "video", "clip"},
      {"alarm", "smoke", "battery", "alert", "carbon", "test", "siren", "warning"},
      {"structure", "home", "away", "room", "zone", "occupancy", "member", "address"},
      {"account", "token", "client", "session", "permission", "scope", "owner", "secret"}};
  std::mt19937_64 rng(seed);
  ApiCollection c;
  for (std::size_t d = 0; d < docs; ++d) {
    const auto& a = themes[rng() % themes.size()];
    const auto& b = themes[rng() % themes.size()];
    std::string text;
    for (int w = 0; w < 25; ++w) text += ((rng() % 4) ? a : b)[rng() % a.size()] + " ";
    c.entries.push_back({"d" + std::to_string(d), "/x", HttpMethod::Get, text});
  }
  return build_corpus(c);
}

Outcome criterion_lda() {
  Outcome o;
  const Corpus corpus = synthetic_lda_corpus(200, 5);
  const auto t0 = Clock::now();
  const TopicModel m1 = train_lda(corpus, 5, 1234, 1000);
  const double secs = seconds_since(t0);
  const TopicModel m2 = train_lda(corpus, 5, 1234, 1000);
  const TopicModel m3 = train_lda(corpus, 5, 1234, 1000);
  o.expect(m1 == m2 && m2 == m3, "bit-identical models for a fixed seed");
  o.expect(m1.to_json().dump() == m3.to_json().dump(), "identical serialized models");
  double worst = 0.0;
  for (std::size_t t = 0; t < m1.k(); ++t) {
    double sum = 0.0;
    for (double p : m1.distribution(t)) sum += p;
    worst = std::max(worst, std::fabs(sum - 1.0));
  }
  o.expect(worst <= 1e-9, "topic distributions sum to 1");

  ApiCollection one;
  one.entries.push_back({"w", "/x", HttpMethod::Get, "thermostat"});
  const TopicModel single = train_lda(build_corpus(one), 1, 1, 50);
  o.expect(single.weight(0, "thermostat") == 1.0, "one-word corpus has weight 1");
  o.expect(secs < 30.0, "200 documents, k=5, 1000 iterations under 30 s");
  o.detail << "training took " << secs << " s, max |sum-1| = " << worst;
  return o;
}

// ---------------------------------------------------------------------------
// 6. Syntactic detectors against naive character-scan oracles

namespace naive {

const std::regex kVersion(R"(^([vV][0-9]+(\.[0-9]+)*|[0-9]+(\.[0-9]+)+)$)");
const std::regex kIdSuffix(R"(^[a-z0-9_-]+[_-]ids?$)");
const std::regex kCaps(R"(^[$:]?[A-Z][A-Z0-9_]*_[A-Z0-9_]*$)");

struct Split {
  std::vector<std::string> nodes;
  bool trailing = false;
};

Split split_path(const std::string& uri) {
  Split s;
  const std::string path = uri.substr(0, uri.find('?'));
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) s.nodes.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) s.nodes.push_back(cur);
  s.trailing = !path.empty() && path.back() == '/' && !s.nodes.empty();
  return s;
}

bool is_template(const std::string& n) {
  if (n.size() >= 2 && ((n.front() == '{' && n.back() == '}') || (n.front() == '[' && n.back() == ']'))) return true;
  if (n.size() > 1 && n.front() == ':') return true;
  return std::regex_match(n, kCaps) || std::regex_match(n, kIdSuffix);
}

bool amorphous(const std::string& uri) {
  const Split s = split_path(uri);
  if (s.trailing) return true;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const std::string& n = s.nodes[i];
    if (!is_template(n)) {
      bool upper = false;
      bool alnum = true;
      for (char c : n) {
        upper = upper || (c >= 'A' && c <= 'Z');
        alnum = alnum && std::isalnum(static_cast<unsigned char>(c));
      }
      const bool camel = alnum && n[0] >= 'a' && n[0] <= 'z';
      if (upper && !camel) return true;
      if (n.find('_') != std::string::npos) return true;
    }
    if (i + 1 == s.nodes.size()) {
      const auto dot = n.rfind('.');
      if (dot != std::string::npos && dot > 0 && dot + 1 < n.size() && !std::regex_match(n, kVersion)) {
        std::string ext = n.substr(dot + 1);
        for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        for (const char* known : {"json", "xml", "html", "htm", "tiff", "jpg", "jpeg", "png", "gif", "pdf",
                                  "txt", "csv", "zip"}) {
          if (ext == known) return true;
        }
      }
    }
  }
  return false;
}

bool unversioned(const std::string& uri) {
  const Split s = split_path(uri);
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (std::regex_match(s.nodes[i], kVersion)) return false;
    std::string lower = s.nodes[i];
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "version" && i + 1 < s.nodes.size() &&
        (std::regex_match(s.nodes[i + 1], std::regex("^[0-9]+$")) || std::regex_match(s.nodes[i + 1], kVersion))) {
      return false;
    }
  }
  return true;
}

bool non_standard(const std::string& uri) {
  const std::string allowed = "._~-/?={}[]:";
  const auto q = uri.find('?');
  for (std::size_t i = 0; i < uri.size(); ++i) {
    const auto b = static_cast<unsigned char>(uri[i]);
    if (b >= 0x80 || uri[i] == ' ' || uri[i] == '\t') return true;
    if (uri.compare(i, 2, "--") == 0) return true;
    if (std::isalnum(b) || allowed.find(uri[i]) != std::string::npos) continue;
    if (uri[i] == '&' && q != std::string::npos && i > q) continue;
    return true;
  }
  return false;
}

}  // namespace naive

Outcome criterion_bruteforce() {
  Outcome o;
  const std::vector<std::string> pieces = {
      "/", "/", "/", "a", "b", "x", "Q", "V", "v", "1", "2", ".", "_", "-", "{", "}", "[", "]", " ",
      "é", "?", "&", "=", "json", "version", "ID", "_id", "PNG", "X_Y", "item", "%", "|"};
  std::mt19937_64 rng(2024);
  const auto t0 = Clock::now();
  std::size_t mismatches = 0;
  std::string first_bad;
  std::size_t anti[3] = {0, 0, 0};
  for (int trial = 0; trial < 10000; ++trial) {
    std::string uri = "/";
    const int len = 1 + static_cast<int>(rng() % 16);
    for (int i = 0; i < len; ++i) uri += pieces[rng() % pieces.size()];
    const ApiEntry e{"r", uri, HttpMethod::Get, ""};
    const ResourceUri parsed = parse_uri(uri);
    const bool got[3] = {detect_amorphous(e, parsed).verdict == Verdict::Antipattern,
                         detect_unversioned(e, parsed).verdict == Verdict::Antipattern,
                         detect_non_standard(e, parsed).verdict == Verdict::Antipattern};
    const bool want[3] = {naive::amorphous(uri), naive::unversioned(uri), naive::non_standard(uri)};
    for (int k = 0; k < 3; ++k) {
      anti[k] += got[k];
      if (got[k] != want[k]) {
        if (mismatches == 0) first_bad = uri + " (detector " + std::to_string(k) + ")";
        ++mismatches;
      }
    }
  }
  const double secs = seconds_since(t0);
  o.expect(mismatches == 0, "agreement with naive oracles, first mismatch: " + first_bad);
  o.expect(secs < 10.0, "runtime under 10 s");
  o.detail << "10000 URIs, " << mismatches << " mismatches, antipattern counts " << anti[0] << "/" << anti[1]
           << "/" << anti[2] << ", in " << secs << " s";
  return o;
}

// ---------------------------------------------------------------------------
// 7. Scale

// Endpoints combine a generated qualifier with a resource so the number of distinct
// endpoints and documentation words keeps growing with the collection size.
ApiCollection synthetic_api(std::size_t n, std::uint64_t seed) {
  std::vector<std::string> qualifiers;
  const std::string consonants = "bdfgklmnprstvz";
  const std::string vowels = "aeiou";
  for (std::size_t j = 0; qualifiers.size() < 250; j += 7) {
    const std::size_t a = j % 70;
    const std::size_t b = (j / 70 + j * 3) % 70;
    qualifiers.push_back({consonants[a / 5], vowels[a % 5], consonants[b / 5], vowels[b % 5]});
  }
  const std::vector<std::string> endpoints = {
      "devices", "structures", "cameras", "alarms", "users", "accounts", "sensors", "gateways",
      "rules", "events", "zones", "schedules", "firmware", "groups", "tokens", "reports",
      "locations", "hubs", "scenes", "automations", "metrics", "logs", "webhooks", "apps",
      "sessions", "clients", "keys", "profiles", "notifications", "measurements"};
  const std::vector<std::string> subs = {
      "settings", "status", "history", "members", "thermostats", "batteries", "snapshots", "readings",
      "permissions", "configuration", "channels", "subscriptions", "attributes", "tags", "alerts",
      "update", "getInfo", "NEW_Item", "data.json", "réglages", "list", "metadata", "properties"};
  const std::vector<std::string> params = {"{id}", "{deviceId}", "[name]", "USER_ID", "device_id"};
  const std::vector<std::string> phrases = {
      "Returns the current state of the resource.", "Creates a new item in the collection.",
      "Deletes the selected resource permanently.", "Updates the configuration of the device.",
      "Lists every member of the group.", "Retrieves the temperature reading of the thermostat.",
      "Gets the camera snapshot and motion events.", "Reports battery health and smoke alarm state.",
      "Adds a webhook subscription for the application.", "Removes the token from the account."};
  std::mt19937_64 rng(seed);
  ApiCollection c;
  c.name = "synthetic";
  for (std::size_t i = 0; i < n; ++i) {
    std::string uri = (rng() % 3 == 0) ? "api.example.com" : "";
    if (rng() % 2) uri += "/v" + std::to_string(1 + rng() % 3);
    const std::string& qualifier = qualifiers[rng() % qualifiers.size()];
    const std::string& endpoint = endpoints[rng() % endpoints.size()];
    uri += "/" + qualifier + "-" + endpoint;
    const int depth = static_cast<int>(rng() % 4);
    for (int d = 0; d < depth; ++d) {
      uri += "/" + ((rng() % 2) ? params[rng() % params.size()] : subs[rng() % subs.size()]);
    }
    std::string doc = "Manages " + endpoint + " of the " + qualifier + ". ";
    const int sentences = static_cast<int>(rng() % 4);
    for (int s = 0; s < sentences; ++s) doc += phrases[rng() % phrases.size()] + " ";
    c.entries.push_back({"s" + std::to_string(i + 1), uri, kAllMethods[rng() % 4], doc});
  }
  return c;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

Outcome criterion_scale() {
  Outcome o;
  AnalysisConfig cfg;
  const ApiCollection big = synthetic_api(1102, 99);
  const auto t0 = Clock::now();
  const AnalysisResult r = run_all(big, cfg);
  const double total = seconds_since(t0);
  o.expect(r.errors.empty(), "no model errors");
  o.expect(r.findings.size() == 1102 * 9, "all findings produced");
  double rule_sum = 0.0;
  for (const auto& t : r.timings) rule_sum += t.seconds;
  const double per_rule = rule_sum / static_cast<double>(r.timings.size());
  o.expect(total < 1435.7, "1,102 entries under 1,435.7 s");
  o.expect(per_rule < 10.0, "per-rule average in the order of seconds");

  std::vector<double> xs, ys;
  cfg.rules = {RuleId::ContextlessResourceNames};
  for (std::size_t size : {25, 50, 100, 200}) {
    const ApiCollection sub = synthetic_api(size, 99);
    std::vector<double> runs;
    for (int rep = 0; rep < 3; ++rep) runs.push_back(run_all(sub, cfg).timings.at(0).seconds);
    xs.push_back(static_cast<double>(size));
    ys.push_back(median(runs));
  }
  const QuadraticFit fit = fit_time_growth(xs, ys);
  o.expect(fit.a >= 0.0, "contextless growth has a non-negative leading coefficient");
  o.detail << "total " << total << " s, per-rule average " << per_rule << " s, contextless fit a=" << fit.a;
  return o;
}

// ---------------------------------------------------------------------------
// 8. Method x CRUD-class truth table for documentation consistency

Outcome criterion_truth_table() {
  Outcome o;
  // Rows POST, DELETE, PUT, GET; columns Create, Read, Update, Delete.
  const HttpMethod methods[4] = {HttpMethod::Post, HttpMethod::Delete, HttpMethod::Put, HttpMethod::Get};
  const bool antipattern[4][4] = {
      {false, true, true, true},
      {true, true, true, false},
      {true, true, false, true},
      {true, false, true, true},
  };
  int cells = 0;
  int anti = 0;
  for (int m = 0; m < 4; ++m) {
    for (CrudClass c : kAllCrudClasses) {
      const auto& words = CrudLexicon::defaults().words(c);
      for (const auto& word : words) {
        const std::string doc = "This call will " + word + " the widget.";
        const ApiEntry e{"t", "/widgets", methods[m], doc};
        const Finding f = detect_inconsistent_doc(e, parse_uri(e.uri), preprocess(doc, default_stopwords(), {}),
                                                  CrudLexicon::defaults());
        const bool want = antipattern[m][static_cast<int>(c)];
        o.expect((f.verdict == Verdict::Antipattern) == want,
                 std::string(to_string(methods[m])) + " + '" + word + "'");
      }
      ++cells;
      anti += antipattern[m][static_cast<int>(c)];
    }
  }
  o.expect(cells == 16 && anti == 12, "16 cells with 12 antipatterns");
  o.detail << cells << " cells, every lexicon word per cell";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fixture classification", criterion_fixture},
      {"topic aggregation matrix", criterion_aggregation},
      {"validation metrics", criterion_metrics},
      {"effect sizes and rank-sum decisions", criterion_statistics},
      {"LDA properties", criterion_lda},
      {"syntactic detectors vs naive oracles", criterion_bruteforce},
      {"scale", criterion_scale},
      {"documentation consistency truth table", criterion_truth_table},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
