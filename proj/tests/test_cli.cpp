#include "cellkit/cache.hpp"
#include "cellkit/coxeter.hpp"
#include "cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace cellkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("cellkit-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute I2(5) reports four left cells") {
  auto r = run({"compute", "--type", "I2", "--m", "5", "--weights", "1,1", "--no-cache"});
  REQUIRE(r.code == cli::kExitPass);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["left_cells"].size() == 4);
  CHECK(j["conjecture"]["status"] == "pass");
}

TEST_CASE("compute B3 with weights 4,3,3 has Con = Irr") {
  auto r = run({"compute", "--type", "B", "--rank", "3", "--weights", "4,3,3", "--no-cache"});
  REQUIRE(r.code == cli::kExitPass);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["constructible"]["columns"].size() == j["irreducibles"].size());
  for (auto& c : j["constructible"]["columns"]) {
    REQUIRE(c["character"].size() == 1);
    CHECK(c["character"].begin().value() == 1);
  }
  CHECK(j["conjecture"]["status"] == "pass");
}

TEST_CASE("second compute hits the cache with identical bytes") {
  fs::path dir = fresh_dir("cache");
  std::vector<std::string> args{"compute", "--type", "B", "--rank", "2", "--weights", "1,2", "--cache-dir", dir.string(), "--verbose"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.err.find("cache miss") != std::string::npos);
  CHECK(b.err.find("cache hit") != std::string::npos);
  CHECK(a.out == b.out);

  // Corrupt entry: warning, recomputation, same output.
  DiskCache cache(dir.string());
  std::string path = cache.path(cache_key(build_system("B", 2, {1, 2})));
  REQUIRE(fs::exists(path));
  std::ofstream(path) << "{not json";
  auto c = run(args);
  CHECK(c.code == 0);
  CHECK(c.err.find("warning") != std::string::npos);
  CHECK(c.out == a.out);
  fs::remove_all(dir);
}

TEST_CASE("cache rejects a mismatched key") {
  fs::path dir = fresh_dir("key");
  DiskCache cache(dir.string());
  cache.store("k1", "payload");
  CHECK(cache.load("k1").value() == "payload");
  fs::rename(cache.path("k1"), cache.path("k2"));
  std::string warning;
  CHECK_FALSE(cache.load("k2", &warning).has_value());
  CHECK_FALSE(warning.empty());
  fs::remove_all(dir);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--type", "A", "--rank", "2"}).code == cli::kExitPass);
  auto r = run({"verify", "--type", "F4", "--weights", "1,1,2,2", "--conjecture"});
  CHECK(r.code == cli::kExitPass);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
  CHECK(run({"verify", "--type", "A", "--rank", "9"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--type", "A", "--rank", "2", "--weights", "1,2"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("verify with a catalog file") {
  fs::path dir = fresh_dir("catalog");
  std::ofstream(dir / "small.json") << R"({"systems": [{"family": "A", "rank": 2}, {"family": "I2", "m": 4, "weights": [1, 2]}]})";
  std::ofstream(dir / "bad.json") << R"({"systems": [{"family": "A"}]})";
  auto r = run({"verify", "--catalog", (dir / "small.json").string()});
  CHECK(r.code == cli::kExitPass);
  CHECK(nlohmann::json::parse(r.out)["systems"].size() == 2);
  CHECK(run({"verify", "--catalog", (dir / "bad.json").string()}).code == cli::kExitUsage);
  CHECK(run({"verify", "--catalog", (dir / "missing.json").string()}).code == cli::kExitUsage);
  fs::remove_all(dir);
}

TEST_CASE("diamond on fixtures") {
  auto r = run({"diamond", "--fixture", "f4-table1", "--column", "P3"});
  CHECK(r.code == cli::kExitPass);
  CHECK(nlohmann::json::parse(r.out)["columns"]["P3"]["holds"] == true);
  auto e = run({"diamond", "--fixture", "e7", "--column", "2x512a"});
  CHECK(e.code == cli::kExitPass);
  CHECK(nlohmann::json::parse(e.out)["all_hold"] == true);
  CHECK(run({"diamond", "--fixture", "e7", "--column", "2x512"}).code == cli::kExitUsage);
  CHECK(run({"diamond", "--fixture", "nonexistent"}).code == cli::kExitUsage);
  CHECK(run({"diamond", "--f", "a=2,b=2", "--mult", "a=1,b=1"}).code == cli::kExitPass);
  CHECK(run({"diamond", "--f", "a=2,b=2", "--mult", "a=1"}).code == cli::kExitFail);
}

TEST_CASE("bsymbols and catalog subcommands") {
  auto r = run({"bsymbols", "--d", "2", "--r", "1"});
  REQUIRE(r.code == cli::kExitPass);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["sum_of_squared_paths"] == 8);
  CHECK(j["regular_expansion"]["solvable"] == true);
  auto c = run({"catalog"});
  CHECK(c.code == cli::kExitPass);
  CHECK(nlohmann::json::parse(c.out)["systems"].size() > 20);
}

}  // TEST_SUITE
