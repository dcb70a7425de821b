#include <doctest.h>

#include "commands.hpp"

using namespace spanbicat;
using namespace spanbicat::cli;
using nlohmann::json;

namespace {

json check(const std::string& mutant, const std::string& suite) {
  FixtureDocument doc = load_fixture_file(std::string(SPANBICAT_FIXTURE_DIR) + "/mutants/" + mutant + ".json");
  return cmd_check(doc, suite).bundle;
}

const json& only_report(const json& bundle) {
  REQUIRE(bundle.at("reports").size() == 1);
  return bundle.at("reports")[0];
}

}  // namespace

TEST_CASE("a non-invertible associator fails coherence") {
  json b = check("replace-associator", "coherence");
  const json& r = only_report(b);
  CHECK(r.at("status") == "fail");
  CHECK(r.at("witnesses")[0].at("law") == "associator-invertible");
  CHECK(b.at("scope").at("mutation").at("kind") == "replace-associator");
}

TEST_CASE("a non-invertible initial generic fails the second axiom") {
  CHECK(only_report(check("replace-initial-generic", "axiom2")).at("status") == "fail");
  CHECK(only_report(check("replace-initial-generic", "axiom1")).at("status") == "pass");
}

TEST_CASE("a duplicated 2-cell is not generic") {
  CHECK(only_report(check("duplicate-two-cell", "generic")).at("status") == "fail");
}
