#include <string>
#include <vector>

#include "doctest.h"
#include "unilab/errors.hpp"
#include "unilab/sweep.hpp"

using namespace unilab;

TEST_CASE("the suite roster is stable") {
  std::vector<std::string> expect = {
      "relation-algebra", "entourage",       "topology",
      "chain-duality",    "uniform-continuity", "dimension-zero",
      "padic",            "group"};
  CHECK(known_suites() == expect);
}

TEST_CASE("a full sweep passes and repeats byte for byte") {
  SweepConfig cfg;
  cfg.seed = 1;
  cfg.instance_count = 25;
  cfg.max_size = 5;
  SweepReport first = run_sweep(cfg);
  CHECK(first.all_passed());
  REQUIRE(first.suites.size() == known_suites().size());
  for (const auto& s : first.suites) {
    CHECK(s.checks > 0);
    CHECK(s.failures == 0);
    CHECK(s.first_counterexample.is_null());
  }
  SweepReport second = run_sweep(cfg);
  CHECK(first.to_json().dump() == second.to_json().dump());

  SweepConfig other = cfg;
  other.seed = 2;
  CHECK(run_sweep(other).all_passed());
}

TEST_CASE("suite filters select and reject") {
  SweepConfig cfg;
  cfg.seed = 3;
  cfg.instance_count = 10;
  cfg.max_size = 4;
  cfg.suites = {"topology", "relation-algebra"};
  SweepReport rep = run_sweep(cfg);
  REQUIRE(rep.suites.size() == 2);
  // Results come back in request order.
  CHECK(rep.suites[0].name == "topology");
  CHECK(rep.suites[1].name == "relation-algebra");

  cfg.suites = {"no-such-suite"};
  CHECK_THROWS_AS(run_sweep(cfg), UnilabError);
}

TEST_CASE("config bounds are enforced and echoed") {
  SweepConfig bad;
  bad.instance_count = 0;
  CHECK_THROWS_AS(run_sweep(bad), UnilabError);

  SweepConfig wide;
  wide.max_size = 7;
  CHECK_THROWS_AS(run_sweep(wide), UnilabError);

  SweepConfig cfg;
  cfg.seed = 17;
  cfg.instance_count = 5;
  cfg.max_size = 3;
  cfg.suites = {"entourage"};
  nlohmann::json j = run_sweep(cfg).to_json();
  CHECK(j.at("config").at("seed") == 17);
  CHECK(j.at("config").at("instance_count") == 5);
  CHECK(j.at("config").at("max_size") == 3);
  CHECK(j.at("suites").size() == 1);
  CHECK(j.at("suites")[0].at("name") == "entourage");
  CHECK(j.at("all_passed") == true);
}
