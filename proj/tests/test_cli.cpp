#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "c1p/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = c1p::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("c1p-cli-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path_ / name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  fs::path path() const { return path_; }

 private:
  fs::path path_;
};

const char* kAbbcd = R"({"R": {"a":1,"b":2,"c":1,"d":1}, "F": [{"b":1,"c":1}, {"b":1,"d":1}]})";
const char* kEdge = "2 1 1 2\n1 2\n";
const char* kCycle = "4 4 1 3\n1 2\n2 3\n3 4\n4 1\n";
const char* kK4Pendant = "5 7 1 5\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n";

}  // namespace

TEST_CASE("pq count picks the method") {
  Result r = run({"pq", "count", "(P a e (Q c b d))"});
  CHECK(r.code == 0);
  CHECK(r.out == "12\nmethod: distinct-formula\n");
  r = run({"pq", "count", "(P a a b)"});
  CHECK(r.code == 0);
  CHECK(r.out == "3\nmethod: enumeration\n");
  r = run({"--format", "json", "pq", "count", "(P a a b)"});
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json{{"count", "3"}, {"method", "enumeration"}});
}

TEST_CASE("pq enum lists sorted frontiers") {
  Result r = run({"pq", "enum", "(P a a b)"});
  CHECK(r.code == 0);
  CHECK(r.out == "a a b\na b a\nb a a\n# count=3\n");
  r = run({"pq", "enum", "(P a b c d)", "--limit", "5"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
}

TEST_CASE("pq canon and equiv") {
  TempDir dir;
  const std::string file = dir.write("t.pq", "(P (P x) (Q b a) (P c d e) (Q))\n");
  Result canon = run({"pq", "canon", file});
  CHECK(canon.code == 0);
  CHECK(canon.out == "(P x (Q b a) (P c d e))\n");
  const std::string back = dir.write("c.pq", canon.out);
  CHECK(run({"pq", "equiv", file, back}).code == 0);
  CHECK(run({"pq", "equiv", "(Q a b c)", "(Q c b a)"}).code == 0);
  Result no = run({"pq", "equiv", "(Q a b c)", "(Q b a c)"});
  CHECK(no.code == 1);
  CHECK(no.out == "not equivalent\n");
  CHECK(run({"--format", "json", "pq", "canon", "(P a b)"}).out ==
        "{\"kind\":\"Q\",\"children\":[{\"kind\":\"leaf\",\"label\":\"a\"},{\"kind\":\"leaf\",\"label\":\"b\"}]}\n");
}

TEST_CASE("fmo count and enum") {
  CHECK(run({"fmo", "count", R"({"R":{"a":1,"b":1},"F":[{"a":1,"b":1}]})"}).out == "2\n");
  Result naive = run({"fmo", "enum", kAbbcd, "--engine", "naive"});
  Result pruned = run({"fmo", "enum", kAbbcd, "--engine", "pruned"});
  CHECK(naive.code == 0);
  CHECK(naive.out == pruned.out);
  CHECK(naive.out.rfind("a b c b d\n", 0) == 0);
  CHECK(naive.out.find("# count=28\n") != std::string::npos);
  CHECK(run({"fmo", "count", kAbbcd}).out == "28\n");
}

TEST_CASE("input errors exit 2") {
  Result r = run({"fmo", "count", R"({"R":)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(run({"pq", "count", "(P a"}).code == 2);
  CHECK(run({"pq", "count", "/nonexistent/tree.pq"}).code == 2);
  CHECK(run({"pq", "count", "(P a b)", "--bogus"}).code == 2);
  CHECK(run({"pq", "frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--limit", "0", "pq", "count", "(P a a b)"}).code == 2);
  CHECK(run({"--engine", "fast", "fmo", "count", kAbbcd}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("limit from the environment") {
  ::setenv("C1P_LAB_LIMIT", "2", 1);
  CHECK(run({"pq", "count", "(P a a b)"}).code == 3);
  CHECK(run({"pq", "count", "(P a a b)", "--limit", "3"}).code == 0);
  ::setenv("C1P_LAB_LIMIT", "zero", 1);
  CHECK(run({"pq", "count", "(P a a b)"}).code == 2);
  ::unsetenv("C1P_LAB_LIMIT");
  CHECK(run({"pq", "count", "(P a a b)"}).code == 0);
}

TEST_CASE("reduce writes the constructions") {
  TempDir dir;
  SUBCASE("fmo route on the single edge") {
    const std::string g = dir.write("edge.g", kEdge);
    Result r = run({"reduce", "fmo", g, "--out", (dir.path() / "fmo").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("R: 8\n") != std::string::npos);
    CHECK(r.out.find("a: 1\n") != std::string::npos);
    auto inst = nlohmann::json::parse(dir.read("fmo/instance.json"));
    CHECK(inst["R"].size() == 8);
    CHECK(inst["F"].size() == 6);
    CHECK(run({"fmo", "count", (dir.path() / "fmo/instance.json").string()}).out == "2\n");
  }
  SUBCASE("front route on K4 plus pendant") {
    const std::string g = dir.write("k4p.g", kK4Pendant);
    Result r = run({"reduce", "front", g, "--out", (dir.path() / "front").string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("T_N_leaves: {1,1,2,3,4,4}\n") != std::string::npos);
    CHECK(dir.read("front/t_v.pq") == "(Q $ (Q 1 (P (Q 2 2) (Q 3 3) (Q 4 4)) 5) # (P 1 1 2 3 4 4))\n");
    CHECK(run({"pq", "count", (dir.path() / "front/t_v.pq").string()}).out ==
          "4320\nmethod: enumeration\n");
  }
  SUBCASE("a disconnected graph names the assumption") {
    const std::string g = dir.write("split.g", "4 2 1 2\n1 2\n3 4\n");
    Result r = run({"reduce", "fmo", g, "--out", dir.path().string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("connectivity") != std::string::npos);
  }
}

TEST_CASE("ham routes and exit codes") {
  TempDir dir;
  const std::string edge = dir.write("edge.g", kEdge);
  const std::string cycle = dir.write("cycle.g", kCycle);
  const std::string k4p = dir.write("k4p.g", kK4Pendant);

  Result all = run({"ham", edge, "--method", "all"});
  CHECK(all.code == 0);
  auto j = nlohmann::json::parse(all.out);
  CHECK(j["schema"] == 1);
  CHECK(j["agree"] == true);
  for (auto route : {"brute", "via_front", "via_fmo"}) CHECK(j[route]["count"] == "2");
  CHECK(all.out == run({"ham", edge}).out);  // deterministic without --timing

  auto c = nlohmann::json::parse(run({"ham", cycle}).out);
  for (auto route : {"brute", "via_front", "via_fmo"}) CHECK(c[route]["count"] == "0");

  CHECK(run({"ham", k4p, "--method", "brute"}).out == "4\n");
  CHECK(run({"ham", k4p, "--method", "front"}).code == 3);
  CHECK(run({"ham", k4p, "--method", "fmo"}).code == 3);
  Result k4p_all = run({"ham", k4p});
  CHECK(k4p_all.code == 0);
  CHECK(nlohmann::json::parse(k4p_all.out)["via_front"]["status"] == "skipped");

  CHECK(run({"ham", cycle, "--method", "front"}).out == "0\n");
  CHECK(run({"ham", edge, "--method", "fmo", "--engine", "naive"}).out == "2\n");
  auto front = nlohmann::json::parse(run({"--format", "json", "ham", edge, "--method", "front"}).out);
  CHECK(front["intermediates"]["fr_tg"] == "80");

  CHECK(nlohmann::json::parse(run({"--timing", "ham", edge}).out)["brute"].contains("millis"));
  Result text = run({"--format", "text", "ham", edge});
  CHECK(text.out == "brute: 2\nvia_front: 2\nvia_fmo: 2\nagree: true\n");
  CHECK(run({"ham", dir.write("path.g", "3 2 1 3\n1 2\n2 3\n"), "--method", "brute"}).out == "2\n");
  CHECK(run({"ham", dir.write("deg.g", "3 2 1 2\n1 2\n2 3\n")}).code == 2);
}
