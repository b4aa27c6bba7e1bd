#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "srmk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = srmk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("srmk_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("example passes and detects perturbation") {
  auto r = run({"example"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  auto v = run({"example", "--verbose"});
  CHECK(v.out.find("H_sub") != std::string::npos);
  auto bad = run({"example", "--perturb"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL at S") != std::string::npos);
}

TEST_CASE("worked-example files: decode and mindist") {
  auto dir = scratch("example");
  REQUIRE(run({"example", "--export", dir.string()}).code == 0);
  auto out = dir / "report.json";
  auto r = run({"decode", "--code", (dir / "code.json").string(), "--received", (dir / "received.json").string(),
                "--json-out", out.string()});
  CHECK(r.code == 0);
  auto report = json::parse(slurp(out));
  CHECK(report["residual_ok"] == true);
  CHECK(report["t_hat"] == 3);
  auto d = run({"mindist", "--code", (dir / "code.json").string()});
  CHECK(d.code == 0);
  CHECK(d.out == "d = 5\n");
}

TEST_CASE("gen then decode round trip, byte-identical per seed") {
  auto a = scratch("gen_a"), b = scratch("gen_b");
  REQUIRE(run({"gen", "--seed", "11", "--out", a.string(), "-p", "3", "-m", "2", "--parts", "2,2,1", "-k", "2",
               "-s", "1", "-t", "1"})
              .code == 0);
  REQUIRE(run({"gen", "--seed", "11", "--out", b.string(), "-p", "3", "-m", "2", "--parts", "2,2,1", "-k", "2",
               "-s", "1", "-t", "1"})
              .code == 0);
  for (auto name : {"code.json", "received.json", "truth.json"}) CHECK(slurp(a / name) == slurp(b / name));
  auto report = a / "report.json";
  auto r = run({"decode", "--code", (a / "code.json").string(), "--received", (a / "received.json").string(),
                "--json-out", report.string()});
  CHECK(r.code == 0);
  auto truth = json::parse(slurp(a / "truth.json"));
  CHECK(json::parse(slurp(report))["C_hat"] == truth["codeword"]);
}

TEST_CASE("decode with an isometry") {
  auto dir = scratch("iso");
  REQUIRE(run({"example", "--export", dir.string()}).code == 0);
  std::ofstream(dir / "iso.json") << R"({"D_diag":[1,1,1,1,1,1]})";
  auto r = run({"decode", "--code", (dir / "code.json").string(), "--received", (dir / "received.json").string(),
                "--isometry", (dir / "iso.json").string()});
  CHECK(r.code == 0);
  std::ofstream(dir / "bad_iso.json") << R"({"D_diag":[1,0,1,1,1,1]})";
  CHECK(run({"decode", "--code", (dir / "code.json").string(), "--received", (dir / "received.json").string(),
             "--isometry", (dir / "bad_iso.json").string()})
            .code == 2);
}

TEST_CASE("trial summaries") {
  auto r = run({"trial", "-n", "30", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("successes 30") != std::string::npos);

  auto dir = scratch("trial");
  auto j1 = dir / "a.json", j2 = dir / "b.json";
  REQUIRE(run({"trial", "-n", "25", "--no-timing", "--json-out", j1.string()}).code == 0);
  REQUIRE(run({"trial", "-n", "25", "--no-timing", "--threads", "3", "--json-out", j2.string()}).code == 0);
  CHECK(slurp(j1) == slurp(j2));

  // s = t - 1 violates the high-order condition.
  auto bad = run({"trial", "-n", "20", "-s", "1", "-t", "2", "--rank-deficient", "--json-out", j1.string()});
  CHECK(bad.code == 1);
  auto summary = json::parse(slurp(j1));
  CHECK(summary["successes"].get<int>() + summary["miscorrections"].get<int>() < 20);
  std::size_t failures = 0;
  for (auto& [k, v] : summary["failures"].items()) failures += v.get<std::size_t>();
  CHECK(summary["successes"].get<std::size_t>() + summary["miscorrections"].get<std::size_t>() + failures == 20);

  auto empty = run({"trial", "-n", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("trials 0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"trial", "--bogus"}).code == 2);
  CHECK(run({"trial", "-t", "3", "-s", "2"}).code == 2);  // full rank needs t <= s
  CHECK(run({"trial", "-p", "4"}).code == 2);
  CHECK(run({"bench", "--sizes", "30"}).code == 2);
  CHECK(run({"mindist", "--code", "/nonexistent.json"}).code == 2);
  auto dir = scratch("usage");
  std::ofstream(dir / "bad.json") << "{\n  \"p\": 5,\n  oops\n}";
  auto r = run({"mindist", "--code", (dir / "bad.json").string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.json:3:") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bench emits one CSV row per point") {
  auto r = run({"bench", "--sizes", "16", "--orders", "2,4", "--reps", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,k,s,t,reps,successes,median_us\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}
