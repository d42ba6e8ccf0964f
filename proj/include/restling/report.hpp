#pragma once

// Per-API summaries, evaluation against oracle labels, pattern-vs-antipattern
// statistics, growth-curve fitting and report export.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "restling/corpus_io.hpp"
#include "restling/detectors.hpp"
#include "restling/errors.hpp"
#include "restling/types.hpp"

namespace restling {

struct RuleSummary {
  std::size_t antipattern = 0;
  std::size_t pattern = 0;
  std::optional<double> elapsed_sec;

  double pct_antipattern() const {
    const std::size_t total = antipattern + pattern;
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(antipattern) / static_cast<double>(total);
  }
  friend bool operator==(const RuleSummary&, const RuleSummary&) = default;
};

struct ApiSummary {
  std::string api;
  std::size_t total_entries = 0;
  std::map<RuleId, RuleSummary> rules;
  friend bool operator==(const ApiSummary&, const ApiSummary&) = default;
};

inline ApiSummary summarize(const std::vector<Finding>& findings, const ApiCollection& collection,
                            const std::vector<RuleTiming>& timings = {}) {
  ApiSummary s;
  s.api = collection.name;
  s.total_entries = collection.entries.size();
  std::set<std::string> ids;
  for (const auto& e : collection.entries) ids.insert(e.id);
  for (const auto& f : findings) {
    if (!ids.count(f.entry_id)) {
      throw ValidationError("finding references unknown entry '" + f.entry_id + "'");
    }
    auto& r = s.rules[f.rule];
    (f.verdict == Verdict::Antipattern ? r.antipattern : r.pattern) += 1;
  }
  for (const auto& t : timings) s.rules[t.rule].elapsed_sec = t.seconds;
  return s;
}

namespace detail {

inline double round2(double x) { return std::round(x * 100.0) / 100.0; }

}  // namespace detail

inline nlohmann::json to_json(const Evidence& e) {
  return {{"kind", to_string(e.kind)}, {"position", e.position}, {"reason", e.reason}};
}

inline nlohmann::json to_json(const Finding& f) {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : f.evidence) ev.push_back(to_json(e));
  nlohmann::json j = {{"entry_id", f.entry_id},
                      {"rule_id", to_string(f.rule)},
                      {"verdict", to_string(f.verdict)},
                      {"evidence", std::move(ev)}};
  if (f.score) j["score"] = *f.score;
  return j;
}

inline nlohmann::json to_json(const ApiSummary& s, bool include_timings = true) {
  nlohmann::json rules = nlohmann::json::object();
  for (const auto& [rule, r] : s.rules) {
    nlohmann::json jr = {{"antipattern", r.antipattern},
                         {"pattern", r.pattern},
                         {"pct_antipattern", detail::round2(r.pct_antipattern())}};
    if (include_timings && r.elapsed_sec) jr["elapsed_sec"] = *r.elapsed_sec;
    rules[std::string(to_string(rule))] = std::move(jr);
  }
  return {{"api", s.api}, {"total_entries", s.total_entries}, {"rules", std::move(rules)}};
}

/// Full report: the summary plus every finding.
inline nlohmann::json report_json(const ApiSummary& s, const std::vector<Finding>& findings,
                                  bool include_timings = false) {
  nlohmann::json j = to_json(s, include_timings);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : findings) arr.push_back(to_json(f));
  j["findings"] = std::move(arr);
  return j;
}

inline ApiSummary summary_from_json(const nlohmann::json& j) {
  try {
    ApiSummary s;
    s.api = j.at("api").get<std::string>();
    s.total_entries = j.at("total_entries").get<std::size_t>();
    for (const auto& [key, value] : j.at("rules").items()) {
      const auto rule = parse_rule(key);
      if (!rule) throw ValidationError("unknown rule id '" + key + "'; valid: " + valid_rule_list());
      RuleSummary r;
      r.antipattern = value.at("antipattern").get<std::size_t>();
      r.pattern = value.at("pattern").get<std::size_t>();
      if (value.contains("elapsed_sec")) r.elapsed_sec = value.at("elapsed_sec").get<double>();
      s.rules[*rule] = r;
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed summary: ") + e.what());
  }
}

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }

  std::optional<double> accuracy() const {
    if (total() == 0) return std::nullopt;
    return static_cast<double>(tp + tn) / static_cast<double>(total());
  }

  /// Undefined when any of the four marginal sums is zero.
  std::optional<double> mcc() const {
    const double a = static_cast<double>(tp + fp);
    const double b = static_cast<double>(tp + fn);
    const double c = static_cast<double>(tn + fp);
    const double d = static_cast<double>(tn + fn);
    if (a == 0 || b == 0 || c == 0 || d == 0) return std::nullopt;
    const double num = static_cast<double>(tp) * static_cast<double>(tn) -
                       static_cast<double>(fp) * static_cast<double>(fn);
    return num / std::sqrt(a * b * c * d);
  }
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

struct Evaluation {
  std::map<RuleId, ConfusionMatrix> rules;
  std::optional<double> macro_accuracy;  // over rules with labelled pairs
  std::optional<double> macro_mcc;       // over rules with a defined MCC
};

/// Fills the macro averages from the per-rule matrices.
inline void compute_macro(Evaluation& ev) {
  double acc = 0.0;
  double mcc = 0.0;
  int n_acc = 0;
  int n_mcc = 0;
  for (const auto& [r, m] : ev.rules) {
    if (auto a = m.accuracy()) {
      acc += *a;
      ++n_acc;
    }
    if (auto c = m.mcc()) {
      mcc += *c;
      ++n_mcc;
    }
  }
  ev.macro_accuracy = n_acc ? std::optional<double>(acc / n_acc) : std::nullopt;
  ev.macro_mcc = n_mcc ? std::optional<double>(mcc / n_mcc) : std::nullopt;
}

/// Scores findings against oracle labels; Antipattern is the positive class.
/// Only labelled (entry, rule) pairs with a finding are counted.
inline Evaluation evaluate(const std::vector<Finding>& findings, const OracleLabels& oracle) {
  Evaluation ev;
  for (RuleId r : kAllRules) ev.rules[r] = {};
  for (const auto& f : findings) {
    auto it = oracle.labels().find({f.entry_id, f.rule});
    if (it == oracle.labels().end()) continue;
    const bool predicted = f.verdict == Verdict::Antipattern;
    const bool actual = it->second == Verdict::Antipattern;
    auto& m = ev.rules[f.rule];
    if (predicted && actual) ++m.tp;
    else if (predicted) ++m.fp;
    else if (actual) ++m.fn;
    else ++m.tn;
  }
  compute_macro(ev);
  return ev;
}

inline nlohmann::json to_json(const Evaluation& ev) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [r, m] : ev.rules) {
    j[std::string(to_string(r))] = {{"tp", m.tp}, {"fp", m.fp}, {"fn", m.fn}, {"tn", m.tn},
                                    {"accuracy", opt(m.accuracy())}, {"mcc", opt(m.mcc())}};
  }
  j["macro"] = {{"accuracy", opt(ev.macro_accuracy)}, {"mcc", opt(ev.macro_mcc)}};
  return j;
}

enum class Magnitude { Negligible, Small, Medium, Large };

inline std::string_view to_string(Magnitude m) noexcept {
  switch (m) {
    case Magnitude::Negligible: return "negligible";
    case Magnitude::Small: return "small";
    case Magnitude::Medium: return "medium";
    case Magnitude::Large: return "large";
  }
  return "";
}

inline Magnitude magnitude_of(double delta) noexcept {
  const double a = std::fabs(delta);
  if (a < 0.147) return Magnitude::Negligible;
  if (a < 0.33) return Magnitude::Small;
  if (a < 0.474) return Magnitude::Medium;
  return Magnitude::Large;
}

struct StatTestResult {
  double p_value = 1.0;
  double delta = 0.0;
  Magnitude magnitude = Magnitude::Negligible;
  bool significant(double alpha = 0.05) const noexcept { return p_value < alpha; }
};

/// Two-tailed rank-sum test, normal approximation with tie and continuity
/// corrections. Only `p_value` is filled in.
inline StatTestResult wilcoxon_rank_sum(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.empty() || ys.empty()) throw ValidationError("rank-sum test needs two non-empty samples");
  const double n1 = static_cast<double>(xs.size());
  const double n2 = static_cast<double>(ys.size());
  const double n = n1 + n2;

  std::vector<std::pair<double, int>> pooled;
  for (double x : xs) pooled.emplace_back(x, 0);
  for (double y : ys) pooled.emplace_back(y, 1);
  std::sort(pooled.begin(), pooled.end());

  double r1 = 0.0;
  double tie_term = 0.0;
  for (std::size_t i = 0; i < pooled.size();) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].first == pooled[i].first) ++j;
    const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second == 0) r1 += avg_rank;
    }
    i = j;
  }

  StatTestResult res;
  const double u1 = r1 - n1 * (n1 + 1.0) / 2.0;
  const double mu = n1 * n2 / 2.0;
  const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (var <= 0.0) return res;  // every pooled value identical
  const double z = std::max(0.0, std::fabs(u1 - mu) - 0.5) / std::sqrt(var);
  res.p_value = std::clamp(std::erfc(z / std::sqrt(2.0)), std::numeric_limits<double>::min(), 1.0);
  return res;
}

/// δ = (#{x > y} - #{x < y}) / (|xs| |ys|) with its magnitude label.
inline StatTestResult cliffs_delta(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.empty() || ys.empty()) throw ValidationError("Cliff's delta needs two non-empty samples");
  long long more = 0;
  long long less = 0;
  for (double x : xs) {
    for (double y : ys) {
      if (x > y) ++more;
      else if (x < y) ++less;
    }
  }
  StatTestResult res;
  res.delta = static_cast<double>(more - less) / (static_cast<double>(xs.size()) * static_cast<double>(ys.size()));
  res.magnitude = magnitude_of(res.delta);
  return res;
}

inline StatTestResult compare_samples(const std::vector<double>& xs, const std::vector<double>& ys) {
  StatTestResult res = cliffs_delta(xs, ys);
  res.p_value = wilcoxon_rank_sum(xs, ys).p_value;
  return res;
}

struct QuadraticFit {
  double a = 0.0;  // x^2
  double b = 0.0;  // x
  double c = 0.0;  // constant

  double operator()(double x) const noexcept { return (a * x + b) * x + c; }
};

/// Least-squares y = a x^2 + b x + c via Householder QR.
inline QuadraticFit fit_time_growth(const std::vector<double>& sizes, const std::vector<double>& times) {
  if (sizes.size() != times.size()) throw ValidationError("sizes and times differ in length");
  const std::set<double> distinct(sizes.begin(), sizes.end());
  if (distinct.size() < 3) throw ValidationError("growth fit needs at least 3 distinct sizes");

  const std::size_t m = sizes.size();
  std::vector<std::array<long double, 3>> A(m);
  std::vector<long double> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    const long double x = sizes[i];
    A[i] = {x * x, x, 1.0L};
    y[i] = times[i];
  }
  for (std::size_t k = 0; k < 3; ++k) {
    long double norm = 0;
    for (std::size_t i = k; i < m; ++i) norm += A[i][k] * A[i][k];
    norm = std::sqrt(norm);
    if (norm == 0) throw ValidationError("growth fit is rank deficient");
    const long double alpha = A[k][k] > 0 ? -norm : norm;
    std::vector<long double> v(m, 0);
    for (std::size_t i = k; i < m; ++i) v[i] = A[i][k];
    v[k] -= alpha;
    long double vv = 0;
    for (std::size_t i = k; i < m; ++i) vv += v[i] * v[i];
    if (vv == 0) continue;
    for (std::size_t j = k; j < 3; ++j) {
      long double dot = 0;
      for (std::size_t i = k; i < m; ++i) dot += v[i] * A[i][j];
      for (std::size_t i = k; i < m; ++i) A[i][j] -= 2 * dot / vv * v[i];
    }
    long double dot = 0;
    for (std::size_t i = k; i < m; ++i) dot += v[i] * y[i];
    for (std::size_t i = k; i < m; ++i) y[i] -= 2 * dot / vv * v[i];
  }
  std::array<long double, 3> coef{};
  for (std::size_t k = 3; k-- > 0;) {
    long double s = y[k];
    for (std::size_t j = k + 1; j < 3; ++j) s -= A[k][j] * coef[j];
    coef[k] = s / A[k][k];
  }
  return {static_cast<double>(coef[0]), static_cast<double>(coef[1]), static_cast<double>(coef[2])};
}

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw ValidationError("unknown output format '" + std::string(s) + "' (expected json, csv or text)");
}

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace detail

inline std::string findings_to_csv(const std::vector<Finding>& findings) {
  std::string out = "entry_id,rule_id,verdict,evidence\n";
  for (const auto& f : findings) {
    std::string ev;
    for (std::size_t i = 0; i < f.evidence.size(); ++i) {
      if (i) ev += "; ";
      ev += std::string(to_string(f.evidence[i].kind)) + " " + std::to_string(f.evidence[i].position) +
            ": " + f.evidence[i].reason;
    }
    out += detail::csv_field(f.entry_id) + "," + std::string(to_string(f.rule)) + "," +
           std::string(to_string(f.verdict)) + "," + detail::csv_field(ev) + "\n";
  }
  return out;
}

/// One table per API, one row per rule: antipattern and pattern counts.
inline std::string summary_to_text(const ApiSummary& s, bool include_timings = false) {
  std::ostringstream out;
  out << s.api << " (" << s.total_entries << " URIs)\n";
  char line[160];
  std::snprintf(line, sizeof line, "  %-30s %11s %9s %8s", "rule", "antipattern", "pattern", "%anti");
  out << line;
  if (include_timings) out << "  seconds";
  out << "\n";
  for (const auto& [rule, r] : s.rules) {
    std::snprintf(line, sizeof line, "  %-30s %11zu %9zu %8s", std::string(to_string(rule)).c_str(),
                  r.antipattern, r.pattern, detail::fixed(r.pct_antipattern(), 2).c_str());
    out << line;
    if (include_timings && r.elapsed_sec) out << "  " << detail::fixed(*r.elapsed_sec, 4);
    out << "\n";
  }
  return out.str();
}

inline std::string evaluation_to_text(const Evaluation& ev) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-30s %5s %5s %5s %5s %9s %7s\n", "rule", "tp", "fp", "fn", "tn",
                "accuracy", "mcc");
  out << line;
  auto opt = [](const std::optional<double>& v, int d) { return v ? detail::fixed(*v, d) : std::string("n/a"); };
  for (const auto& [r, m] : ev.rules) {
    std::snprintf(line, sizeof line, "%-30s %5zu %5zu %5zu %5zu %9s %7s\n", std::string(to_string(r)).c_str(),
                  m.tp, m.fp, m.fn, m.tn, opt(m.accuracy(), 3).c_str(), opt(m.mcc(), 3).c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "%-30s %5s %5s %5s %5s %9s %7s\n", "macro", "", "", "", "",
                opt(ev.macro_accuracy, 3).c_str(), opt(ev.macro_mcc, 3).c_str());
  out << line;
  return out.str();
}

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
inline std::string canonical_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline std::string export_report(const ApiSummary& s, const std::vector<Finding>& findings,
                                 OutputFormat format, bool include_timings = false) {
  switch (format) {
    case OutputFormat::Json: return canonical_json(report_json(s, findings, include_timings));
    case OutputFormat::Csv: return findings_to_csv(findings);
    case OutputFormat::Text: return summary_to_text(s, include_timings);
  }
  throw ValidationError("unknown output format");
}

}  // namespace restling
