#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gralab/config.hpp"

using namespace gralab;
namespace fs = std::filesystem;

namespace {

const char* kSourceDir = GRALAB_SOURCE_DIR;
const char* kCliPath = GRALAB_CLI_PATH;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() /
                 ("gralab-cli-" + std::to_string(::getpid()) + "-" +
                  std::to_string(counter++) + ".out");
  std::string cmd = env + " " + std::string(kCliPath) + " " + args + " > " +
                    out.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  fs::remove(out);
  return {WEXITSTATUS(rc), ss.str()};
}

std::string corpus_file(const std::string& name) {
  return std::string(kSourceDir) + "/configs/corpus/" + name;
}

}  // namespace

TEST_CASE("classify command and exit-code contract") {
  RunResult r = run_cli("classify " + corpus_file("zmod-08.json") +
                        " --submodule four --predicate graded-weakly-prime-ideal");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j.at("result").at("holds") == false);
  CHECK(j.at("result").at("witness").at("I").at("size") == 4);
  CHECK(j.at("config_digest").get<std::string>().size() == 16);

  // Verdict truth does not change the exit code.
  RunResult good = run_cli("classify " + corpus_file("zmod-08.json") +
                           " --submodule two --predicate graded-weakly-prime-ideal");
  CHECK(good.exit_code == 0);
  CHECK(Json::parse(good.stdout_text).at("result").at("holds") == true);

  // Improper submodule: hypothesis failure, still exit 0.
  RunResult whole = run_cli("classify " + corpus_file("zmod-08.json") +
                            " --submodule whole --predicate graded-prime");
  CHECK(whole.exit_code == 0);
  Json jw = Json::parse(whole.stdout_text);
  CHECK(jw.at("result").at("holds") == false);
  CHECK_FALSE(jw.at("result").at("hypothesis_failure").is_null());
}

TEST_CASE("invalid input exits 2") {
  fs::path bad = fs::temp_directory_path() / "gralab-bad.json";
  std::ofstream(bad) << "{\"name\": \"bad\", \"ring\": {\"kind\": \"zmod\", \"n\": 0}}";
  RunResult r = run_cli("classify " + bad.string() +
                        " --submodule zero --predicate graded-prime");
  CHECK(r.exit_code == 2);
  fs::remove(bad);
  RunResult r2 = run_cli("classify /nonexistent.json --submodule a --predicate graded-prime");
  CHECK(r2.exit_code == 2);
  RunResult r3 = run_cli("classify " + corpus_file("zmod-08.json") +
                         " --submodule zero --predicate not-a-predicate");
  CHECK(r3.exit_code == 2);
}

TEST_CASE("lattice cap exits 3") {
  fs::path capped = fs::temp_directory_path() / "gralab-capped.json";
  std::ofstream(capped)
      << R"({"name":"capped","ring":{"kind":"zmod","n":8},"caps":{"lattice":2},"submodules":{"zero":[]}})";
  RunResult r = run_cli("enumerate " + capped.string() + " --kind graded-submodules");
  CHECK(r.exit_code == 3);
  fs::remove(capped);
}

TEST_CASE("enumerate kinds") {
  RunResult r = run_cli("enumerate " + corpus_file("zmod-08.json") +
                        " --kind graded-submodules");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j.at("count") == 4);

  RunResult rc = run_cli("enumerate " + corpus_file("matrix2-z2-g4.json") +
                         " --kind component-submodules --component 2");
  CHECK(rc.exit_code == 0);
  Json jc = Json::parse(rc.stdout_text);
  CHECK(jc.at("count").get<int>() >= 4);

  RunResult ri = run_cli("enumerate " + corpus_file("matrix2-z8-g4.json") +
                         " --kind identity-component-ideals");
  CHECK(ri.exit_code == 0);
  CHECK(Json::parse(ri.stdout_text).at("count") == 16);
}

TEST_CASE("triple-zero command with witness replay") {
  RunResult r = run_cli("triple-zero " + corpus_file("matrix2-z8-g4.json") +
                        " --submodule zero");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j.at("result").at("found") == true);

  // Replay the paper-style witness (2I, 2I, A*2I).
  fs::path w = fs::temp_directory_path() / "gralab-witness.json";
  std::ofstream(w) << R"({"x":[2,0,0,2],"y":[2,0,0,2],"L":{"generators":[[2,0,0,2]]}})";
  RunResult rv = run_cli("triple-zero " + corpus_file("matrix2-z8-g4.json") +
                         " --submodule zero --check-witness " + w.string());
  CHECK(rv.exit_code == 0);
  CHECK(Json::parse(rv.stdout_text).at("result").at("witness_valid") == true);

  // A bogus witness is rejected.
  std::ofstream(w) << R"({"x":[1,0,0,1],"y":[1,0,0,1],"L":{"generators":[[1,0,0,1]]}})";
  RunResult rb = run_cli("triple-zero " + corpus_file("matrix2-z8-g4.json") +
                         " --submodule zero --check-witness " + w.string());
  CHECK(Json::parse(rb.stdout_text).at("result").at("witness_valid") == false);
  fs::remove(w);
}

TEST_CASE("classify witness replay round-trip") {
  // Every witness in a report reproduces its violation through the replay.
  RunResult r = run_cli("classify " + corpus_file("zmod-08.json") +
                        " --submodule four --predicate graded-classical-weakly-prime");
  Json j = Json::parse(r.stdout_text);
  REQUIRE(j.at("result").at("holds") == false);
  fs::path w = fs::temp_directory_path() / "gralab-witness2.json";
  std::ofstream(w) << j.at("result").at("witness").dump();
  RunResult rv = run_cli("classify " + corpus_file("zmod-08.json") +
                         " --submodule four --predicate graded-classical-weakly-prime" +
                         " --check-witness " + w.string());
  CHECK(Json::parse(rv.stdout_text).at("result").at("witness_valid") == true);
  fs::remove(w);
}

TEST_CASE("component predicate through the CLI") {
  RunResult r = run_cli("classify " + corpus_file("matrix2-z2-g4.json") +
                        " --submodule zero --predicate g-prime --component 2");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j.at("result").at("holds") == false);
}

TEST_CASE("verify over a small corpus and determinism across workers") {
  fs::path dir = fs::temp_directory_path() / "gralab-mini-corpus";
  fs::create_directories(dir);
  for (const char* f : {"zmod-02.json", "zmod-08.json", "product-z2xz2.json"})
    fs::copy_file(corpus_file(f), dir / f, fs::copy_options::overwrite_existing);
  RunResult r1 = run_cli("verify --corpus " + dir.string(), "GRALAB_WORKERS=1");
  RunResult r2 = run_cli("verify --corpus " + dir.string(), "GRALAB_WORKERS=4");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(r1.stdout_text == r2.stdout_text);
  Json j = Json::parse(r1.stdout_text);
  CHECK(j.at("violations_total") == 0);

  RunResult rs = run_cli("verify --corpus " + dir.string() +
                         " --suite thm-quotient-down,lem-maximal-prime");
  CHECK(rs.exit_code == 0);
  CHECK(Json::parse(rs.stdout_text).at("reports").size() == 6);
  fs::remove_all(dir);
}

TEST_CASE("search via CLI") {
  RunResult r = run_cli("search --holds graded-classical-weakly-prime"
                        " --fails graded-classical-prime --family " +
                        std::string(kSourceDir) + "/configs/families/matrix2-z8.json");
  CHECK(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j.at("found") == true);
}

TEST_CASE("config digest changes iff the structure changes") {
  StructureConfig a = load_structure_config(corpus_file("zmod-08.json"));
  StructureConfig b = load_structure_config(corpus_file("zmod-08.json"));
  CHECK(a.digest == b.digest);
  Json mutated = a.canonical;
  mutated["ring"]["n"] = 9;
  CHECK(parse_structure_config(mutated).digest != a.digest);
  // Whitespace or key order does not matter: rebuild from a reordered dump.
  Json reordered = Json::parse(a.canonical.dump());
  CHECK(parse_structure_config(reordered).digest == a.digest);
}
