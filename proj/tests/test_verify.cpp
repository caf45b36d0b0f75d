#include "cellkit/report.hpp"
#include "cellkit/verify.hpp"

#include "doctest.h"

using namespace cellkit;

namespace {

void require_all_pass(const VerificationReport& r) {
  for (auto& c : r.checks) {
    INFO(r.system << " " << c.name << " " << c.witness);
    CHECK(c.ok());
  }
  CHECK(r.ok());
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("A2 passes every check") {
  auto rep = verify_system(build_system("A", 2, {1}));
  require_all_pass(rep);
  for (int i = 1; i <= 15; ++i) CHECK(rep.find("P" + std::to_string(i)) != nullptr);
  CHECK(rep.find("left cells = Con(W)") != nullptr);
}

TEST_CASE("B2 in both unequal regimes") {
  require_all_pass(verify_system(build_system("B", 2, {1, 2})));
  require_all_pass(verify_system(build_system("B", 2, {2, 1})));
}

TEST_CASE("P15 is exhaustive for small groups") {
  auto A = analyze(build_system("B", 3, {2, 1, 1}));
  auto rep = check_P(*A, {15});
  REQUIRE(rep.find("P15") != nullptr);
  CHECK(rep.find("P15")->scope == "exhaustive");
  CHECK(rep.find("P15")->ok());
  CHECK(rep.find("P15")->cases > 0);
}

TEST_CASE("P15 is sampled deterministically above the threshold") {
  auto A = analyze(build_system("H3", 3, {1}));
  VerifyOptions opt;
  opt.p15_samples = 2000;
  auto a = check_P(*A, {15}, opt), b = check_P(*A, {15}, opt);
  REQUIRE(a.find("P15") != nullptr);
  CHECK(a.find("P15")->scope == "sampled(seed=49374,count=2000)");
  CHECK(verification_json(a) == verification_json(b));
  CHECK(a.ok());
}

TEST_CASE("induction and restriction laws on A2 and B3") {
  require_all_pass(check_ind_res(*analyze(build_system("A", 2, {1}))));
  require_all_pass(check_ind_res(*analyze(build_system("B", 3, {3, 1, 1}))));
}

TEST_CASE("type D via zero weight on omega") {
  for (int m : {3, 4}) {
    auto rep = check_typeD(m);
    require_all_pass(rep);
    CHECK(rep.find("typeD: cell splitting") != nullptr);
  }
  CHECK(check_typeD(3).find("typeD: D3 = A3") != nullptr);
}

TEST_CASE("catalog parsing") {
  auto e = parse_catalog(R"({"systems": [{"family": "A", "rank": 2}, {"type": "I2", "m": 6, "weights": [1, 2]}, {"family": "H3"}]})");
  REQUIRE(e.size() == 3);
  CHECK(e[1].family == "I2");
  CHECK(e[1].param == 6);
  CHECK(e[1].weights == std::vector<int>{1, 2});
  CHECK(e[2].param == 3);
  CHECK(parse_catalog("[]").empty());
  CHECK_THROWS_AS(parse_catalog("{"), CatalogParseError);
  CHECK_THROWS_AS(parse_catalog(R"([{"rank": 2}])"), CatalogParseError);
  CHECK_THROWS_AS(parse_catalog(R"([{"family": "A", "rank": 2, "weights": [1, 2]}])"), CatalogParseError);
  CHECK_THROWS_AS(parse_catalog(R"([{"family": "B", "rank": 2, "weights": [-1, 1]}])"), CatalogParseError);
  CHECK_THROWS_AS(parse_catalog(R"([{"family": "Q", "rank": 2}])"), CatalogParseError);
  CHECK(parse_catalog(catalog_json(default_catalog())).size() == default_catalog().size());
}

TEST_CASE("empty catalog passes vacuously") {
  AggregateReport agg = run_catalog({});
  CHECK(agg.ok());
  CHECK(agg.systems.empty());
}

TEST_CASE("reports serialize without timings") {
  auto rep = verify_system(build_system("I2", 5, {1}));
  std::string a = verification_json(rep);
  rep.seconds = 123.0;
  CHECK(verification_json(rep) == a);
  CHECK(a.find("seconds") == std::string::npos);
}

}  // TEST_SUITE
