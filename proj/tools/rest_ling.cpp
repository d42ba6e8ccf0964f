// rest-ling: linguistic antipattern linter for REST API endpoint collections.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 configuration error,
// 3 antipatterns found with --fail-on-antipattern, 4 semantic model failure.

#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "restling/restling.hpp"

namespace {

using namespace restling;

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGate = 3;
constexpr int kExitModel = 4;

struct Options {
  double threshold = 0.3;
  int topics_k = 0;
  std::string seed_text;
  int iterations = 1000;
  std::string stopwords_path;
  std::string acronyms_path;
  std::string lexicon_path;
  std::string vectors_path;
  std::string rules;
  std::string format = "json";
  std::string out_path;
  bool fail_on_antipattern = false;
  bool timings = false;
  unsigned threads = 1;
  std::string sizes;
  std::string collection_path;
  std::string oracle_path;
};

struct ExitError {
  int code;
  std::string message;
};

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(what + " must be a non-negative integer, got '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = std::string(detail::trim(item));
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

AnalysisConfig build_config(const Options& o) {
  AnalysisConfig c;
  c.threshold = o.threshold;
  if (o.topics_k != 0) c.topics_k = o.topics_k;
  c.iterations = o.iterations;
  c.threads = o.threads == 0 ? 1 : o.threads;
  if (!o.seed_text.empty()) {
    c.seed = parse_seed(o.seed_text, "--seed");
  } else if (const char* env = std::getenv("REST_LING_SEED"); env && *env) {
    c.seed = parse_seed(env, "REST_LING_SEED");
  }
  if (!o.rules.empty()) {
    c.rules.clear();
    for (const auto& name : split_list(o.rules)) {
      const auto r = parse_rule(name);
      if (!r) throw ValidationError("unknown rule id '" + name + "'; valid: " + valid_rule_list());
      c.rules.push_back(*r);
    }
  }
  if (!o.lexicon_path.empty()) c.lexicon = load_crud_lexicon(o.lexicon_path);
  if (!o.vectors_path.empty()) c.provider = VectorFileSimilarity::load(o.vectors_path);
  c.validate();
  return c;
}

std::vector<ApiCollection> load_inputs(const Options& o) {
  std::vector<ApiCollection> collections;
  try {
    collections = load_collections(o.collection_path);
  } catch (const ValidationError& e) {
    throw ExitError{kExitIo, e.what()};  // malformed input, not configuration
  }
  if (!o.stopwords_path.empty()) {
    const auto stop = load_stopwords(o.stopwords_path);
    for (auto& c : collections) c.stopwords = stop;
  }
  if (!o.acronyms_path.empty()) {
    const auto acr = load_acronyms(o.acronyms_path);
    for (auto& c : collections) c.acronyms = acr;
  }
  return collections;
}

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    detail::write_file(o.out_path, text);
  }
}

int cmd_analyze(const Options& o) {
  const OutputFormat format = parse_format(o.format);
  const AnalysisConfig config = build_config(o);
  const auto collections = load_inputs(o);

  bool any_antipattern = false;
  bool model_failed = false;
  nlohmann::json reports = nlohmann::json::array();
  std::string csv;
  std::string text;
  for (const auto& c : collections) {
    AnalysisResult r = run_all(c, config);
    const ApiSummary s = summarize(r.findings, c, r.timings);
    for (const auto& f : r.findings) any_antipattern = any_antipattern || f.verdict == Verdict::Antipattern;
    nlohmann::json j = report_json(s, r.findings, o.timings);
    if (!r.errors.empty()) {
      model_failed = true;
      nlohmann::json errs = nlohmann::json::array();
      for (const auto& e : r.errors) {
        errs.push_back({{"rule_id", to_string(e.rule)}, {"message", e.message}});
        std::cerr << "rest-ling: " << c.name << ": " << to_string(e.rule) << ": " << e.message << "\n";
      }
      j["errors"] = std::move(errs);
    }
    reports.push_back(std::move(j));
    const std::string rows = findings_to_csv(r.findings);
    csv += csv.empty() ? rows : rows.substr(rows.find('\n') + 1);
    text += summary_to_text(s, o.timings);
  }

  switch (format) {
    case OutputFormat::Json:
      emit(o, canonical_json(reports.size() == 1 ? reports[0] : nlohmann::json{{"apis", reports}}));
      break;
    case OutputFormat::Csv:
      emit(o, csv.empty() ? findings_to_csv({}) : csv);
      break;
    case OutputFormat::Text:
      emit(o, text);
      break;
  }
  if (model_failed) return kExitModel;
  if (o.fail_on_antipattern && any_antipattern) return kExitGate;
  return 0;
}

int cmd_eval(const Options& o) {
  const OutputFormat format = parse_format(o.format);
  const AnalysisConfig config = build_config(o);
  const auto collections = load_inputs(o);
  if (collections.size() != 1) throw ValidationError("eval expects a file holding exactly one API");
  const ApiCollection& c = collections.front();
  const OracleLabels oracle = load_oracle(o.oracle_path);
  oracle.validate_against(c);

  AnalysisResult r = run_all(c, config);
  const Evaluation ev = evaluate(r.findings, oracle);
  if (format == OutputFormat::Text) {
    emit(o, evaluation_to_text(ev));
  } else {
    emit(o, canonical_json(to_json(ev)));
  }
  for (const auto& e : r.errors) std::cerr << "rest-ling: " << to_string(e.rule) << ": " << e.message << "\n";
  return r.errors.empty() ? 0 : kExitModel;
}

int cmd_topics(const Options& o) {
  const AnalysisConfig config = build_config(o);
  const auto collections = load_inputs(o);
  if (collections.size() != 1) throw ValidationError("topics expects a file holding exactly one API");
  const Corpus corpus = build_corpus(collections.front());
  const int k = config.topics_k.value_or(choose_k(collections.front(), corpus));
  try {
    const TopicModel model = train_lda(corpus, k, config.seed, config.iterations, config.lda);
    emit(o, canonical_json(model.to_json()));
  } catch (const ModelError& e) {
    throw ExitError{kExitModel, e.what()};
  }
  return 0;
}

int cmd_bench(const Options& o) {
  const AnalysisConfig config = build_config(o);
  std::vector<std::size_t> sizes;
  for (const auto& s : split_list(o.sizes)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size() || v <= 0) throw std::invalid_argument(s);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ValidationError("--sizes entries must be positive integers, got '" + s + "'");
    }
  }
  if (sizes.empty()) throw ValidationError("--sizes must list at least one size");
  const auto collections = load_inputs(o);
  if (collections.size() != 1) throw ValidationError("bench expects a file holding exactly one API");
  const ApiCollection& base = collections.front();
  if (base.entries.empty()) throw ValidationError("bench needs a non-empty collection");

  std::mt19937_64 rng(config.seed);
  std::map<RuleId, std::vector<std::pair<double, double>>> samples;
  std::string csv = "size,rule_id,seconds\n";
  for (std::size_t size : sizes) {
    ApiCollection sub = base;
    sub.entries.clear();
    for (std::size_t i = 0; i < size; ++i) {
      ApiEntry e = base.entries[rng() % base.entries.size()];
      e.id = "s" + std::to_string(i + 1);
      sub.entries.push_back(std::move(e));
    }
    const AnalysisResult r = run_all(sub, config);
    for (const auto& t : r.timings) {
      samples[t.rule].emplace_back(static_cast<double>(size), t.seconds);
      csv += std::to_string(size) + "," + std::string(to_string(t.rule)) + "," + detail::fixed(t.seconds, 6) + "\n";
    }
  }

  std::string tail;
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& [rule, pts] : samples) {
    double rule_sum = 0.0;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [x, y] : pts) {
      xs.push_back(x);
      ys.push_back(y);
      rule_sum += y;
    }
    sum += rule_sum;
    count += pts.size();
    tail += "# " + std::string(to_string(rule)) + " mean_sec=" + detail::fixed(rule_sum / pts.size(), 6);
    std::set<double> distinct(xs.begin(), xs.end());
    if (distinct.size() >= 3) {
      const QuadraticFit fit = fit_time_growth(xs, ys);
      tail += " fit: y = " + detail::fixed(fit.a, 9) + "x^2 + " + detail::fixed(fit.b, 9) + "x + " +
              detail::fixed(fit.c, 9);
    }
    tail += "\n";
  }
  tail += "# average_per_rule_sec=" + detail::fixed(count ? sum / count : 0.0, 6) + "\n";
  emit(o, csv + tail);
  return 0;
}

void add_common(CLI::App* cmd, Options& o, bool with_format) {
  cmd->add_option("--threshold", o.threshold, "Similarity threshold in (0,1)");
  cmd->add_option("--topics-k", o.topics_k, "Topic count (default: number of endpoints)");
  cmd->add_option("--seed", o.seed_text, "Random seed (default: $REST_LING_SEED or 42)");
  cmd->add_option("--iterations", o.iterations, "Gibbs sampling iterations");
  cmd->add_option("--stopwords", o.stopwords_path, "Stop-word file, one word per line");
  cmd->add_option("--acronyms", o.acronyms_path, "Acronym file, acronym<TAB>expansion");
  cmd->add_option("--lexicon", o.lexicon_path, "CRUD lexicon JSON");
  cmd->add_option("--vectors", o.vectors_path, "Word-vector file used as similarity space");
  cmd->add_option("--rules", o.rules, "Comma-separated rule ids (default: all)");
  cmd->add_option("--out", o.out_path, "Write output to this file");
  cmd->add_option("--threads", o.threads, "Worker threads per rule batch");
  if (with_format) cmd->add_option("--format", o.format, "json, csv or text");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Linguistic pattern and antipattern detection for REST APIs"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Run the rules and print a report");
  analyze->add_option("collection", o.collection_path, "Collection JSON")->required();
  add_common(analyze, o, true);
  analyze->add_flag("--fail-on-antipattern", o.fail_on_antipattern, "Exit 3 when any antipattern is found");
  analyze->add_flag("--timings", o.timings, "Include per-rule elapsed seconds");

  auto* eval = app.add_subcommand("eval", "Score the rules against oracle labels");
  eval->add_option("collection", o.collection_path, "Collection JSON")->required();
  eval->add_option("oracle", o.oracle_path, "Oracle JSON")->required();
  add_common(eval, o, true);

  auto* topics = app.add_subcommand("topics", "Train and export the topic model");
  topics->add_option("collection", o.collection_path, "Collection JSON")->required();
  add_common(topics, o, false);

  auto* bench = app.add_subcommand("bench", "Time each rule over subsampled collections");
  bench->add_option("collection", o.collection_path, "Collection JSON")->required();
  bench->add_option("--sizes", o.sizes, "Comma-separated sample sizes")->required();
  add_common(bench, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*eval) return cmd_eval(o);
    if (*topics) return cmd_topics(o);
    if (*bench) return cmd_bench(o);
  } catch (const ExitError& e) {
    std::cerr << "rest-ling: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "rest-ling: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "rest-ling: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    std::cerr << "rest-ling: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ModelError& e) {
    std::cerr << "rest-ling: " << e.what() << "\n";
    return kExitModel;
  }
  return kExitConfig;
}
