#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "zqcodes-tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("construct + params + radius round") {
  const fs::path g = temp_file("g.txt");
  const auto c = run_cli({"construct", "simplex", "--q", "4", "--k", "2", "--out", g.string()});
  REQUIRE(c.code == 0);
  CHECK(slurp(g) == "4 2 5\n0 1 1 2 3\n1 0 1 1 1\n");

  const auto p = run_cli({"params", g.string()});
  REQUIRE(p.code == 0);
  CHECK(p.out.rfind("[5, 2] M=16 d=3\n", 0) == 0);
  CHECK(p.out.find("weights: 0:1 3:2 4:11 5:2") != std::string::npos);

  const auto r = run_cli({"radius", g.string(), "--method", "bfs"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("R = 3 (exact)\n", 0) == 0);
  CHECK(r.out.find("states visited: 1024") != std::string::npos);

  const auto e = run_cli({"radius", g.string(), "--method", "exhaustive"});
  REQUIRE(e.code == 0);
  CHECK(e.out.rfind("R = 3 (exact)\n", 0) == 0);

  const auto s = run_cli({"radius", g.string(), "--method", "sample", "--samples", "2000",
                          "--seed", "11"});
  REQUIRE(s.code == 0);
  CHECK(s.out.rfind("R >= ", 0) == 0);
  CHECK(s.out.find("sampled-lower-bound") != std::string::npos);
}

TEST_CASE("json reports are schema-stable and byte-identical") {
  const fs::path g = temp_file("g_json.txt");
  REQUIRE(run_cli({"construct", "simplex", "--q", "4", "--k", "2", "--out", g.string()}).code == 0);

  const auto a = run_cli({"params", g.string(), "--json"});
  const auto b = run_cli({"params", g.string(), "--json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["tool_version"].is_string());
  CHECK(doc["overall_pass"] == true);
  const auto& rec = doc["records"][0];
  for (const char* key : {"q", "n", "k", "cardinality", "min_distance", "weight_distribution"})
    REQUIRE(rec.contains(key));
  CHECK(rec["q"] == 4);
  CHECK(rec["n"] == 5);
  CHECK(rec["k"] == 2);
  CHECK(rec["cardinality"] == 16);
  CHECK(rec["min_distance"] == 3);
  CHECK(rec["weight_distribution"]["4"] == 11);

  const auto r1 = run_cli({"radius", g.string(), "--method", "bfs", "--json"});
  const auto r2 = run_cli({"radius", g.string(), "--method", "bfs", "--json"});
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  const auto rdoc = nlohmann::json::parse(r1.out);
  const auto& rrec = rdoc["records"][0];
  for (const char* key : {"value", "method", "exact", "states_visited"}) REQUIRE(rrec.contains(key));
  CHECK(rrec["value"] == 3);
  CHECK(rrec["method"] == "bfs");
  CHECK(rrec["exact"] == true);
  CHECK(rrec["states_visited"] == 1024);

  const auto v1 = run_cli({"verify", "thm-simplex-params", "--q", "4", "--kmax", "3", "--json"});
  const auto v2 = run_cli({"verify", "thm-simplex-params", "--q", "4", "--kmax", "3", "--json"});
  REQUIRE(v1.code == 0);
  CHECK(v1.out == v2.out);
  const auto vdoc = nlohmann::json::parse(v1.out);
  CHECK(vdoc["overall_pass"] == true);
  for (const auto& rec2 : vdoc["records"]) {
    for (const char* key : {"theorem_id", "inputs", "formula_value", "computed_value", "verdict"})
      REQUIRE(rec2.contains(key));
    CHECK(rec2["verdict"] == "pass");
  }
  CHECK(vdoc["records"][0]["formula_value"] == "3/1");
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli({"verify", "thm-simplex-params", "--q", "4", "--kmax", "3"}).code == 0);
  CHECK(run_cli({"verify", "thm-repetition-radius", "--q", "6", "--nmax", "2"}).code == 0);

  // Ground truth contradicts the claimed dual parameters at q=4: honest failure.
  const auto dual = run_cli({"verify", "dual-perfect", "--q", "4"});
  CHECK(dual.code == 1);
  CHECK(dual.out.find("[fail]") != std::string::npos);
  CHECK(dual.out.find("overall: FAIL") != std::string::npos);

  const auto unknown = run_cli({"verify", "thm-nonexistent", "--q", "4"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown theorem id") != std::string::npos);

  CHECK(run_cli({"verify", "lemma2", "--q", "3"}).code == 2);  // odd q refused with a diagnostic
}

TEST_CASE("malformed matrix files are usage errors with locations") {
  const fs::path bad = temp_file("bad_entry.txt");
  spit(bad, "4 2 5\n0 1 1 2 3\n1 0 1 4 1\n");
  const auto r = run_cli({"params", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(r.err.find("out of range") != std::string::npos);
  CHECK(r.err.find("row 2") != std::string::npos);

  const fs::path ragged = temp_file("ragged.txt");
  spit(ragged, "4 2 3\n0 1 1\n1 0\n");
  const auto r2 = run_cli({"params", ragged.string()});
  CHECK(r2.code == 2);
  CHECK(r2.err.find("expected 3") != std::string::npos);

  const fs::path junk = temp_file("junk.txt");
  spit(junk, "4 1 2\n0 x\n");
  CHECK(run_cli({"params", junk.string()}).code == 2);

  CHECK(run_cli({"params", (temp_file("missing-dir") / "nope.txt").string()}).code == 2);
}

TEST_CASE("matrix files round-trip bit-exactly") {
  const fs::path dir = temp_file("");
  const std::vector<std::vector<std::string>> constructions = {
      {"construct", "simplex", "--q", "6", "--k", "2"},
      {"construct", "macdonald", "--q", "4", "--k", "3", "--u", "2"},
      {"construct", "repetition", "--q", "6", "--n", "4", "--v", "3"},
      {"construct", "full-repetition", "--q", "4", "--n", "2"},
  };
  int idx = 0;
  for (auto args : constructions) {
    const fs::path p = temp_file("rt" + std::to_string(idx++) + ".txt");
    args.push_back("--out");
    args.push_back(p.string());
    REQUIRE(run_cli(args).code == 0);
    const zq::GeneratorMatrix G = zq::read_matrix_file(p.string());
    std::ostringstream rewritten;
    zq::write_matrix(rewritten, G);
    CHECK(rewritten.str() == slurp(p));
  }
}

TEST_CASE("comments and extend flow") {
  const fs::path base = temp_file("base.txt");
  spit(base, "# full one-column code\n4 1 1\n1\n");
  const fs::path ext = temp_file("ext.txt");
  REQUIRE(run_cli({"construct", "extend", "--q", "4", "--in", base.string(), "--out",
                   ext.string()})
              .code == 0);
  const auto p = run_cli({"params", ext.string()});
  REQUIRE(p.code == 0);
  CHECK(p.out.rfind("[5, 2] M=16 d=3\n", 0) == 0);  // parameters of the 2-row simplex
}

TEST_CASE("construct full-repetition content") {
  const fs::path p = temp_file("full.txt");
  REQUIRE(run_cli({"construct", "full-repetition", "--q", "4", "--n", "2", "--out", p.string()})
              .code == 0);
  CHECK(slurp(p) == "4 1 6\n1 1 2 2 3 3\n");
}

TEST_CASE("usage errors") {
  CHECK(run_cli({"construct", "simplex", "--q", "4", "--out", "/tmp/x.txt"}).code == 2);  // no --k
  CHECK(run_cli({"construct", "waffle", "--q", "4", "--k", "2", "--out", "/tmp/x.txt"}).code == 2);
  CHECK(run_cli({"radius", "/tmp/nonexistent-zq.txt", "--method", "warp"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("budget limits map to exit 3 and accept 2^E") {
  const fs::path g = temp_file("g_budget.txt");
  REQUIRE(run_cli({"construct", "simplex", "--q", "4", "--k", "2", "--out", g.string()}).code == 0);
  CHECK(run_cli({"radius", g.string(), "--method", "bfs", "--limit", "2^8"}).code == 3);
  CHECK(run_cli({"radius", g.string(), "--method", "bfs", "--limit", "1024"}).code == 0);
  CHECK(run_cli({"params", g.string(), "--limit", "3"}).code == 3);
}

TEST_CASE("odd q constructions warn but proceed") {
  const fs::path g = temp_file("odd.txt");
  const auto r = run_cli({"construct", "simplex", "--q", "3", "--k", "2", "--out", g.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("odd") != std::string::npos);
  CHECK(slurp(g) == "3 2 4\n0 1 1 2\n1 0 1 1\n");
}
