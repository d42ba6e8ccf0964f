#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "restling_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
  const auto out = scratch() / "stdout.txt";
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = env + " \"" + std::string(RESTLING_CLI) + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string fixture(const std::string& name) { return std::string(RESTLING_FIXTURES) + "/" + name; }
std::string data(const std::string& name) { return std::string(RESTLING_DATA) + "/" + name; }

}  // namespace

TEST_CASE("cli: analyze prints a JSON report and exits 0") {
  const auto r = run("analyze " + fixture("cited_examples.json") + " --iterations 50");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["api"] == "cited examples");
  CHECK(j["findings"].size() == 22 * 9);
  CHECK(j["rules"]["crudy_uri"]["antipattern"].get<int>() >= 3);
}

TEST_CASE("cli: rule filtering, formats and the gate") {
  const auto only = run("analyze " + fixture("cited_examples.json") + " --rules unversioned_uri --format csv");
  REQUIRE(only.code == 0);
  CHECK(only.out.rfind("entry_id,rule_id,verdict,evidence\n", 0) == 0);
  CHECK(only.out.find("amorphous_uri") == std::string::npos);
  CHECK(only.out.find("unversioned,unversioned_uri,antipattern") != std::string::npos);

  const auto text = run("analyze " + fixture("cited_examples.json") + " --rules crudy_uri --format text");
  CHECK(text.code == 0);
  CHECK(text.out.find("crudy_uri") != std::string::npos);

  const auto gate = run("analyze " + fixture("cited_examples.json") + " --rules crudy_uri --fail-on-antipattern");
  CHECK(gate.code == 3);

  const auto clean = write_temp("clean.json",
                                R"({"name":"clean","entries":[{"uri":"/v1/players","method":"GET"}]})");
  CHECK(run("analyze " + clean.string() + " --rules crudy_uri,unversioned_uri --fail-on-antipattern").code == 0);
}

TEST_CASE("cli: configuration errors exit 2") {
  const auto bad_rule = run("analyze " + fixture("cited_examples.json") + " --rules bogus_rule");
  CHECK(bad_rule.code == 2);
  CHECK(bad_rule.err.find("amorphous_uri") != std::string::npos);
  CHECK(run("analyze " + fixture("cited_examples.json") + " --threshold 1.5").code == 2);
  CHECK(run("analyze " + fixture("cited_examples.json") + " --seed abc").code == 2);
  CHECK(run("analyze " + fixture("cited_examples.json") + " --format xml").code == 2);
  CHECK(run("analyze").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("analyze " + fixture("cited_examples.json"), "REST_LING_SEED=-3").code == 2);
}

TEST_CASE("cli: input errors exit 1") {
  CHECK(run("analyze /nonexistent/file.json").code == 1);
  const auto broken = write_temp("broken.json", "{\"entries\": [");
  const auto r = run("analyze " + broken.string());
  CHECK(r.code == 1);
  CHECK(r.err.find("line") != std::string::npos);
  const auto bad_method = write_temp("badmethod.json", R"({"entries":[{"uri":"/a","method":"FETCH"}]})");
  CHECK(run("analyze " + bad_method.string()).code == 1);
}

TEST_CASE("cli: model failure exits 4 with an errors array") {
  const auto nodocs = write_temp("nodocs.json", R"({"name":"n","entries":[{"uri":"/devices","method":"GET"}]})");
  const auto r = run("analyze " + nodocs.string());
  CHECK(r.code == 4);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("errors"));
  CHECK(j["errors"][0]["rule_id"] == "contextless_resource_names");
  CHECK(j["findings"].size() == 8);
  CHECK(run("topics " + nodocs.string()).code == 4);
}

TEST_CASE("cli: topics output is byte-identical for a fixed seed") {
  const std::string args = "topics " + data("nest_sample.json") + " --acronyms " + data("nest_acronyms.txt") +
                           " --iterations 200";
  const auto a = run(args + " --seed 7");
  const auto b = run(args, "REST_LING_SEED=7");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["k"] == 3);
  CHECK(j["seed"] == 7);
  CHECK(run(args + " --seed 8").out != a.out);
}

TEST_CASE("cli: eval reports per-rule metrics") {
  const auto r = run("eval " + fixture("cited_examples.json") + " " + fixture("cited_examples_oracle.json") +
                     " --iterations 50");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["crudy_uri"]["accuracy"] == 1.0);
  CHECK(j.contains("macro"));
  const auto ghost = write_temp("ghost_oracle.json", R"({"ghost":{"crudy_uri":"pattern"}})");
  CHECK(run("eval " + fixture("cited_examples.json") + " " + ghost.string()).code == 2);
}

TEST_CASE("cli: bench emits one row per size and rule") {
  const auto r = run("bench " + data("nest_sample.json") + " --sizes 5,10,20 --iterations 20");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "size,rule_id,seconds");
  int rows = 0;
  int comments = 0;
  while (std::getline(in, line)) (line.rfind("#", 0) == 0 ? comments : rows) += 1;
  CHECK(rows == 27);
  CHECK(comments == 10);
  CHECK(r.out.find("average_per_rule_sec=") != std::string::npos);
  CHECK(run("bench " + data("nest_sample.json") + " --sizes 0").code == 2);
}

TEST_CASE("cli: --out writes the report to a file") {
  const auto path = scratch() / "report.json";
  fs::remove(path);
  const auto r = run("analyze " + fixture("cited_examples.json") + " --rules amorphous_uri --out " + path.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(nlohmann::json::parse(slurp(path))["findings"].size() == 22);
}
