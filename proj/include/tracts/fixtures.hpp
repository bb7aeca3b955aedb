#pragma once

#include <string>
#include <vector>

#include "tracts/fmatroid.hpp"

namespace tracts {

struct FixtureFact {
  std::string name;
  bool pass = false;
  std::string detail;  // values on success, expected-vs-actual on failure
};

struct FixtureReport {
  std::string id;
  std::string description;
  std::vector<FixtureFact> facts;

  bool all_passed() const;
};

struct LoadedFixture {
  std::string id;
  std::string description;
  FMatroid matroid;  // the fixture's principal matroid
  std::vector<std::string> expected_facts;
};

// Catalog order is fixed; reports and ids iterate deterministically.
std::vector<std::string> fixture_ids();
bool is_fixture_id(const std::string& id);

// Throws ValidationError on an unknown id. Every expected fact is evaluated
// through library operations only; a failing fact is a regression.
LoadedFixture load_fixture(const std::string& id);
FixtureReport run_fixture(const std::string& id);
std::vector<FixtureReport> run_all_fixtures();

}  // namespace tracts
