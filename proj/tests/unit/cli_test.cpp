#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace spanbicat;
using namespace spanbicat::cli;
using nlohmann::json;

namespace {

FixtureDocument bundled(const std::string& name) {
  return load_fixture_file(std::string(SPANBICAT_FIXTURE_DIR) + "/" + name + ".json");
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SPANBICAT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const json* report(const json& bundle, const std::string& id) {
  for (const json& r : bundle.at("reports")) {
    if (r.at("id") == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("exit codes: fail beats incomplete beats pass") {
  auto reports = [](std::initializer_list<const char*> statuses) {
    json out = json::array();
    for (const char* s : statuses) out.push_back({{"status", s}});
    return out;
  };
  CHECK(exit_code_for(reports({})) == kExitPass);
  CHECK(exit_code_for(reports({"pass", "skipped"})) == kExitPass);
  CHECK(exit_code_for(reports({"pass", "incomplete"})) == kExitIncomplete);
  CHECK(exit_code_for(reports({"incomplete", "fail"})) == kExitViolation);
}

TEST_CASE("trunc-add-3 fails the first axiom with c = 2 among the witnesses") {
  CommandResult res = cmd_check(bundled("trunc-add-3"), "axiom1");
  CHECK(res.exit_code == kExitViolation);
  const json* a1 = report(res.bundle, "axiom1");
  REQUIRE(a1);
  bool found = false;
  for (const json& w : a1->at("witnesses")) found = found || w.at("cell") == "2";
  CHECK(found);
}

TEST_CASE("check reports match the goldens") {
  for (const char* name : {"trunc-add-3", "span-1", "arrow-poset", "idempotent-component"}) {
    CAPTURE(name);
    CommandResult res = cmd_check(bundled(name), "all");
    CHECK(res.bundle.dump(2) + "\n" == golden(std::string(name) + ".check.json"));
  }
}

TEST_CASE("single suites run only their reports") {
  CommandResult res = cmd_check(bundled("span-1"), "coherence");
  REQUIRE(res.bundle.at("reports").size() == 1);
  CHECK(res.bundle.at("reports")[0].at("id") == "coherence");
  CHECK_THROWS_AS(cmd_check(bundled("span-1"), "pentagon"), std::invalid_argument);
}

TEST_CASE("a hidden 2-cell leaves the generic checks incomplete") {
  CommandResult res = cmd_check(bundled("mutants/hide-two-cell"), "generic");
  CHECK(res.exit_code == kExitIncomplete);
}

TEST_CASE("factoring an identity 2-cell is trivial") {
  const std::string one = "1>1:1:[0]/[0]";
  CommandResult res =
      cmd_factor(bundled("span-1-2"), {{"source", one}, {"left", one}, {"right", one}, {"cell", "[0]"}});
  CHECK(res.exit_code == kExitPass);
  const json& d = res.bundle.at("reports")[0].at("details");
  CHECK(d.at("verified") == true);
  CHECK(d.at("h") == one);
  CHECK(d.at("k") == one);
  CHECK(d.at("alpha").at("cell") == "[0]");
}

TEST_CASE("factoring a collapse of the apex goes through the diagonal") {
  const std::string c = "1>1:2:[0,0]/[0,0]", one = "1>1:1:[0]/[0]";
  CommandResult res =
      cmd_factor(bundled("span-1-2"), {{"source", c}, {"left", one}, {"right", one}, {"cell", "[0,0]"}});
  REQUIRE(res.exit_code == kExitPass);
  const json& d = res.bundle.at("reports")[0].at("details");
  CHECK(d.at("generic") == json{{"cell", "[0,3]"}, {"left", c}, {"right", c}});
  CHECK(d.at("delta") == json{{"cell", "[0,1]"}, {"left", "1>2:2:[0,0]/[0,1]"}, {"right", "2>1:2:[0,1]/[0,0]"}});
  CHECK(d.at("verified") == true);
}

TEST_CASE("factoring in a non-generic fragment reports the missing initial object") {
  CommandResult res =
      cmd_factor(bundled("idempotent-component"), {{"source", "c"}, {"left", "u"}, {"right", "v"}, {"cell", "g"}});
  CHECK(res.exit_code == kExitViolation);
  CHECK(res.bundle.at("reports")[0].at("witnesses")[0].at("diagnostic") == "no-initial-object");
}

TEST_CASE("unknown cells are refused") {
  CHECK_THROWS_AS(cmd_factor(bundled("span-1-2"), {{"source", "x"}, {"left", "y"}, {"right", "z"}, {"cell", "w"}}),
                  FixtureError);
}

TEST_CASE("DOT output matches the goldens") {
  const FixtureDocument doc = bundled("span-1-2");
  DotSelector span;
  span.span = "1>2:2:[0,0]/[0,1]";
  CHECK(cmd_export_dot(doc, span) == golden("span.dot"));

  DotSelector composite;
  composite.composite = std::make_pair("1>2:2:[0,0]/[0,1]", "2>1:2:[0,1]/[0,0]");
  CHECK(cmd_export_dot(doc, composite) == golden("composite.dot"));

  DotSelector morphism;
  morphism.morphism = std::vector<std::string>{"1>1:2:[0,0]/[0,0]", "1>1:1:[0]/[0]", "[0,0]"};
  CHECK(cmd_export_dot(doc, morphism) == golden("span-morphism.dot"));

  DotSelector factor;
  factor.factor =
      json{{"source", "1>1:2:[0,0]/[0,0]"}, {"left", "1>1:1:[0]/[0]"}, {"right", "1>1:1:[0]/[0]"}, {"cell", "[0,0]"}};
  CHECK(cmd_export_dot(doc, factor) == golden("factorization.dot"));
}

TEST_CASE("DOT graphs have the expected shapes") {
  auto count = [](const std::string& dot, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++n;
    return n;
  };
  const std::string span = golden("span.dot"), comp = golden("composite.dot"), fac = golden("factorization.dot");
  CHECK(count(span, "[label=\"") == 3 + 2);
  CHECK(count(comp, "  n") - count(comp, " -> ") - 1 == 6);
  CHECK(count(comp, "style=dashed") == 1);
  CHECK(count(fac, "  n") - count(fac, " -> ") - 1 == 7);
  CHECK(count(fac, "style=dotted") == 1);
}

TEST_CASE("bad DOT selectors are refused") {
  const FixtureDocument doc = bundled("span-1-2");
  CHECK_THROWS_AS(cmd_export_dot(doc, {}), FixtureError);
  DotSelector s;
  s.span = "no-such-span";
  CHECK_THROWS_AS(cmd_export_dot(doc, s), FixtureError);
  DotSelector c;
  c.composite = std::make_pair("1>2:2:[0,0]/[0,1]", "1>2:2:[0,0]/[0,1]");
  CHECK_THROWS_AS(cmd_export_dot(doc, c), FixtureError);
  CHECK_THROWS_AS(cmd_export_dot(bundled("trunc-add-3"), s), FixtureError);
}

TEST_CASE("reconstruction emits E as a category fixture") {
  CommandResult res = cmd_reconstruct(bundled("arrow-poset"));
  CHECK(res.exit_code == kExitPass);
  FixtureDocument e = parse_fixture(res.bundle.at("category"));
  CHECK(e.kind() == "category-presentation");
  const auto& p = std::get<PresentationPayload>(e.payload).category;
  CHECK(p.objects.size() == 2);
  CHECK(p.morphisms.size() == 3);
}

TEST_CASE("reconstruction refuses a fragment that fails a gate") {
  CommandResult res = cmd_reconstruct(bundled("trunc-add-3"));
  CHECK(res.exit_code == kExitViolation);
  const json* gates = report(res.bundle, "reconstruction-gates");
  REQUIRE(gates);
  CHECK(gates->at("details").at("failed_gate").at("id") == "axiom1");
  CHECK_FALSE(res.bundle.contains("category"));
}

TEST_CASE("text rendering names every report") {
  CommandResult res = cmd_check(bundled("span-1"), "all");
  const std::string text = render_text(res.bundle);
  for (const json& r : res.bundle.at("reports")) CHECK(text.find(r.at("id").get<std::string>()) != std::string::npos);
}

TEST_CASE("the report directory overrides the report location") {
  ::unsetenv("SPANBICAT_REPORT_DIR");
  CHECK_FALSE(report_destination(std::nullopt, "x.json").has_value());
  CHECK(report_destination(std::string("out/r.json"), "x.json") == "out/r.json");
  ::setenv("SPANBICAT_REPORT_DIR", "/tmp/reports", 1);
  CHECK(report_destination(std::nullopt, "x.json") == "/tmp/reports/x.json");
  CHECK(report_destination(std::string("out/r.json"), "x.json") == "/tmp/reports/r.json");
  ::unsetenv("SPANBICAT_REPORT_DIR");
}
