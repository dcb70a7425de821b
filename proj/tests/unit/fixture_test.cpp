#include "spanbicat/fixture.hpp"

#include <doctest.h>

#include <filesystem>

#include "commands.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;
using nlohmann::json;

namespace {

std::vector<std::filesystem::path> fixture_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(SPANBICAT_FIXTURE_DIR)) {
    if (e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("generated fixtures survive a serialization round trip") {
  using cli::GenerateParams;
  std::vector<std::pair<std::string, GenerateParams>> cases{
      {"span-finset", {{1}, 1, std::nullopt, ""}},
      {"finset-span", {{1, 2}, 2, 3, ""}},
      {"span-finset", {{1, 2, 3}, 3, std::nullopt, ""}},
      {"monoid", {{}, 2, std::nullopt, "trunc-add-3"}},
      {"monoid", {{}, 2, std::nullopt, "cyclic-4"}},
      {"monoid", {{}, 2, std::nullopt, "trivial"}},
      {"bicat-fragment", {{}, 2, std::nullopt, "idempotent-component"}},
  };
  for (const auto& [kind, params] : cases) {
    CAPTURE(kind);
    FixtureDocument doc = cli::cmd_generate(kind, params);
    CHECK(parse_fixture(serialize_fixture(doc)) == doc);
    CHECK(parse_fixture_text(fixture_text(doc)) == doc);
  }
}

TEST_CASE("every bundled fixture loads and round-trips") {
  const auto files = fixture_files();
  REQUIRE(files.size() >= 20);
  for (const auto& p : files) {
    CAPTURE(p.string());
    FixtureDocument doc = load_fixture_file(p.string());
    CHECK(parse_fixture(serialize_fixture(doc)) == doc);
    CHECK_NOTHROW(build_fixture(doc));
  }
}

TEST_CASE("trunc-add-3 has the elements 0, 1, 2") {
  FixtureDocument doc = cli::cmd_generate("monoid", {{}, 2, std::nullopt, "trunc-add-3"});
  const auto& m = std::get<MonoidPresentation>(doc.payload);
  CHECK(m.elements == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("unknown generator parameters are usage errors") {
  CHECK_THROWS_AS(cli::cmd_generate("monoid", {{}, 2, std::nullopt, "trunc-add-"}), std::invalid_argument);
  CHECK_THROWS_AS(cli::cmd_generate("monoid", {{}, 2, std::nullopt, "free"}), std::invalid_argument);
  CHECK_THROWS_AS(cli::cmd_generate("spans", {}), std::invalid_argument);
}

TEST_CASE("malformed fixtures are schema errors") {
  const json good = serialize_fixture(cli::cmd_generate("span-finset", {{1, 2}, 2, std::nullopt, ""}));
  CHECK_THROWS_AS(parse_fixture_text("{"), FixtureError);
  CHECK_THROWS_AS(parse_fixture_text("[]"), FixtureError);
  auto broken = [&](auto&& edit) {
    json j = good;
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(parse_fixture(broken([](json& j) { j["schema"] = "spanbicat-fixture/0"; })), FixtureError);
  CHECK_THROWS_AS(parse_fixture(broken([](json& j) { j["kind"] = "graph"; })), FixtureError);
  CHECK_THROWS_AS(parse_fixture(broken([](json& j) { j["payload"]["objects"] = json::array(); })), FixtureError);
  CHECK_THROWS_AS(parse_fixture(broken([](json& j) { j["payload"]["objects"] = {1, "2"}; })), FixtureError);
  CHECK_THROWS_AS(parse_fixture(broken([](json& j) { j["bounds"]["apex_bound"] = -1; })), FixtureError);
  CHECK_THROWS_AS(parse_fixture(broken([](json& j) { j["mutation"] = {{"kind", "shuffle"}}; })), FixtureError);
  CHECK_THROWS_AS(parse_fixture(broken([](json& j) {
                    j["mutation"] = {{"kind", "replace-associator"}, {"cells", {"a"}}, {"with", "x"}};
                  })),
                  FixtureError);
}

TEST_CASE("a monoid table without a unit is refused") {
  json j = serialize_fixture(cli::cmd_generate("monoid", {{}, 2, std::nullopt, "trunc-add-3"}));
  j["payload"]["mult"][0][1] = "2";
  CHECK_THROWS_AS(parse_fixture(j), FixtureError);
}

TEST_CASE("mutations naming cells outside the fragment fail to build") {
  json j = serialize_fixture(cli::cmd_generate("span-finset", {{1, 2}, 2, std::nullopt, ""}));
  j["mutation"] = {{"kind", "drop-one-cells"}, {"cells", {"1>1:3:[0,0,0]/[0,0,0]"}}};
  CHECK_THROWS_AS(build_fixture(parse_fixture(j)), FixtureError);
}

TEST_CASE("bounds from the command line override the fixture") {
  FixtureDocument doc = cli::cmd_generate("span-finset", {{1, 2}, 2, std::nullopt, ""});
  LoadedFixture lf = build_fixture(doc, FixtureBounds{1, std::nullopt});
  CHECK(lf.fragment->scope().at("apex_bound") == 1);
}
