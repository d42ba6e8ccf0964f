#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "restling/report.hpp"

using namespace restling;

namespace {

// Exact two-sided permutation p-value on the rank-sum statistic.
double exact_rank_sum_p(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<double> pooled(xs);
  pooled.insert(pooled.end(), ys.begin(), ys.end());
  const std::size_t n = pooled.size();
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  auto rank = [&](double v) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    return (static_cast<double>(lo + 1) + static_cast<double>(hi)) / 2.0;
  };
  const double mean = static_cast<double>(xs.size()) * static_cast<double>(n + 1) / 2.0;
  double observed = 0.0;
  for (double x : xs) observed += rank(x);
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(xs.size()), 1);
  std::sort(pick.begin(), pick.end());
  std::size_t total = 0;
  std::size_t extreme = 0;
  do {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) r += rank(pooled[i]);
    }
    ++total;
    if (std::fabs(r - mean) >= std::fabs(observed - mean) - 1e-9) ++extreme;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

Finding finding(const std::string& id, RuleId r, Verdict v) {
  Finding f;
  f.entry_id = id;
  f.rule = r;
  f.verdict = v;
  return f;
}

}  // namespace

TEST_CASE("confusion matrix metrics") {
  const ConfusionMatrix crudy{3, 0, 3, 85};
  CHECK(*crudy.accuracy() == Catch::Approx(88.0 / 91.0));
  CHECK(*crudy.mcc() == Catch::Approx(0.695).margin(0.001));
  const ConfusionMatrix perfect{67, 0, 0, 24};
  CHECK(*perfect.mcc() == Catch::Approx(1.0));
  const ConfusionMatrix none{0, 0, 5, 86};
  CHECK_FALSE(none.mcc());
  CHECK(ConfusionMatrix{}.accuracy() == std::nullopt);
}

TEST_CASE("MCC is invariant to swapping the positive class") {
  std::mt19937 rng(1);
  for (int i = 0; i < 500; ++i) {
    const ConfusionMatrix m{rng() % 50, rng() % 50, rng() % 50, rng() % 50};
    const ConfusionMatrix swapped{m.tn, m.fn, m.fp, m.tp};
    REQUIRE(m.mcc().has_value() == swapped.mcc().has_value());
    if (m.mcc()) {
      CHECK(*m.mcc() == Catch::Approx(*swapped.mcc()).margin(1e-12));
      CHECK(*m.mcc() >= -1.0 - 1e-12);
      CHECK(*m.mcc() <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("evaluate counts labelled pairs only") {
  OracleLabels o;
  o.set("a", RuleId::CrudyUri, Verdict::Antipattern);
  o.set("b", RuleId::CrudyUri, Verdict::Pattern);
  o.set("c", RuleId::CrudyUri, Verdict::Antipattern);
  const std::vector<Finding> fs = {finding("a", RuleId::CrudyUri, Verdict::Antipattern),
                                   finding("b", RuleId::CrudyUri, Verdict::Antipattern),
                                   finding("c", RuleId::CrudyUri, Verdict::Pattern),
                                   finding("d", RuleId::CrudyUri, Verdict::Pattern)};
  const auto ev = evaluate(fs, o);
  CHECK(ev.rules.at(RuleId::CrudyUri) == ConfusionMatrix{1, 1, 1, 0});
  CHECK(ev.rules.size() == 9);
  CHECK(*ev.macro_accuracy == Catch::Approx(1.0 / 3.0));
  CHECK(*ev.macro_mcc == Catch::Approx(-0.5));
  const auto j = to_json(ev);
  CHECK(j["amorphous_uri"]["mcc"].is_null());
}

TEST_CASE("Cliff's delta is antisymmetric and bounded") {
  std::mt19937 rng(2);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> xs(1 + rng() % 10), ys(1 + rng() % 10);
    for (auto& x : xs) x = rng() % 6;
    for (auto& y : ys) y = rng() % 6;
    const double d = cliffs_delta(xs, ys).delta;
    CHECK(d == Catch::Approx(-cliffs_delta(ys, xs).delta).margin(1e-15));
    CHECK(std::fabs(d) <= 1.0);
  }
  CHECK(cliffs_delta({1, 2}, {3, 4}).delta == -1.0);
  CHECK(cliffs_delta({1, 2}, {3, 4}).magnitude == Magnitude::Large);
  CHECK(magnitude_of(0.1) == Magnitude::Negligible);
  CHECK(magnitude_of(-0.2) == Magnitude::Small);
  CHECK(magnitude_of(0.4) == Magnitude::Medium);
  CHECK_THROWS_AS(cliffs_delta({}, {1}), ValidationError);
}

TEST_CASE("rank-sum test: swap invariance, range and agreement with exact permutation") {
  std::mt19937 rng(4);
  for (int i = 0; i < 60; ++i) {
    std::vector<double> xs(3 + rng() % 5), ys(3 + rng() % 5);
    for (auto& x : xs) x = rng() % 20;
    for (auto& y : ys) y = rng() % 20 + static_cast<double>(rng() % 3);
    const double p = wilcoxon_rank_sum(xs, ys).p_value;
    CHECK(p > 0.0);
    CHECK(p <= 1.0);
    CHECK(p == Catch::Approx(wilcoxon_rank_sum(ys, xs).p_value).margin(1e-15));
    // The normal approximation tracks the exact distribution loosely at these sizes.
    CHECK(std::fabs(p - exact_rank_sum_p(xs, ys)) < 0.15);
  }
  CHECK(wilcoxon_rank_sum({5, 5}, {5, 5}).p_value == 1.0);
  CHECK(wilcoxon_rank_sum({0, 0, 0}, {100, 100, 100}).p_value == Catch::Approx(0.0468).margin(1e-4));
  CHECK(exact_rank_sum_p({0, 0, 0}, {100, 100, 100}) == Catch::Approx(0.1));
}

TEST_CASE("quadratic growth fit recovers exact coefficients") {
  const std::vector<double> xs = {25, 50, 100, 200};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(0.001 * x * x + 0.5 * x + 3.0);
  const auto fit = fit_time_growth(xs, ys);
  CHECK(fit.a == Catch::Approx(0.001).margin(1e-9));
  CHECK(fit.b == Catch::Approx(0.5).margin(1e-7));
  CHECK(fit.c == Catch::Approx(3.0).margin(1e-5));
  CHECK_THROWS_AS(fit_time_growth({1, 1, 2}, {1, 2, 3}), ValidationError);
}

TEST_CASE("summary counts and JSON round trip") {
  ApiCollection c;
  c.name = "api";
  c.entries = {{"a", "/x", HttpMethod::Get, ""}, {"b", "/y", HttpMethod::Get, ""}};
  const std::vector<Finding> fs = {finding("a", RuleId::CrudyUri, Verdict::Antipattern),
                                   finding("b", RuleId::CrudyUri, Verdict::Pattern),
                                   finding("a", RuleId::UnversionedUri, Verdict::Antipattern)};
  const auto s = summarize(fs, c, {{RuleId::CrudyUri, 0.25}});
  CHECK(s.rules.at(RuleId::CrudyUri).pct_antipattern() == Catch::Approx(50.0));
  CHECK(summary_from_json(to_json(s)) == s);
  CHECK_FALSE(to_json(s, false)["rules"]["crudy_uri"].contains("elapsed_sec"));
  CHECK_THROWS_AS(summarize({finding("zz", RuleId::CrudyUri, Verdict::Pattern)}, c), ValidationError);
  CHECK_THROWS_AS(summary_from_json(nlohmann::json::parse(R"({"api":"a","total_entries":1,"rules":{"nope":{}}})")),
                  ValidationError);
}

TEST_CASE("export formats") {
  ApiCollection c;
  c.name = "api";
  c.entries = {{"a,1", "/x", HttpMethod::Get, ""}};
  Finding f = finding("a,1", RuleId::AmorphousUri, Verdict::Antipattern);
  f.evidence.push_back({EvidenceKind::Node, 0, "underscore in 'a_b'"});
  const auto s = summarize({f}, c);
  const auto csv = export_report(s, {f}, OutputFormat::Csv);
  CHECK(csv.rfind("entry_id,rule_id,verdict,evidence\n", 0) == 0);
  CHECK(csv.find("\"a,1\",amorphous_uri,antipattern,node 0: underscore in 'a_b'") != std::string::npos);
  const auto json = export_report(s, {f}, OutputFormat::Json);
  CHECK(json.back() == '\n');
  CHECK(nlohmann::json::parse(json)["findings"][0]["rule_id"] == "amorphous_uri");
  CHECK(export_report(s, {f}, OutputFormat::Text).find("amorphous_uri") != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);
}
