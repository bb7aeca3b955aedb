#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "tracts/errors.hpp"
#include "tracts/fixtures.hpp"

using namespace tracts;

TEST_CASE("the fixture catalog lists eleven entries") {
  std::vector<std::string> ids = fixture_ids();
  CHECK(ids.size() == 11);
  CHECK(ids.front() == "topclosure-541");
  CHECK(ids.back() == "om-k4");
  for (const std::string& id : ids) CHECK(is_fixture_id(id));
  CHECK(!is_fixture_id("nope"));
  CHECK_THROWS_AS(run_fixture("nope"), ValidationError);
  CHECK_THROWS_AS(load_fixture("nope"), ValidationError);
}

TEST_CASE("every fixture fact passes") {
  for (const FixtureReport& r : run_all_fixtures()) {
    INFO("fixture ", r.id);
    CHECK(!r.facts.empty());
    for (const FixtureFact& f : r.facts) {
      INFO("fact '", f.name, "': ", f.detail);
      CHECK(f.pass);
    }
  }
}

TEST_CASE("loading a fixture yields the matroid and the fact names") {
  LoadedFixture fx = load_fixture("om-u24");
  CHECK(fx.matroid.ground.size() == 4);
  CHECK(fx.matroid.circuit_reps.size() == 4);
  CHECK(fx.expected_facts.size() == run_fixture("om-u24").facts.size());

  LoadedFixture ph = load_fixture("deletion-545");
  CHECK(ph.matroid.ground.size() == 7);
  CHECK(tract_name(ph.matroid.tract) == "phase");
  CHECK(!ph.description.empty());
}

TEST_CASE("fixture runs are deterministic") {
  FixtureReport a = run_fixture("rank1-tr");
  FixtureReport b = run_fixture("rank1-tr");
  REQUIRE(a.facts.size() == b.facts.size());
  for (size_t i = 0; i < a.facts.size(); ++i) {
    CHECK(a.facts[i].name == b.facts[i].name);
    CHECK(a.facts[i].pass == b.facts[i].pass);
    CHECK(a.facts[i].detail == b.facts[i].detail);
  }
}
