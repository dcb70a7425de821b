#include <doctest.h>

#include "spanbicat/axioms.hpp"
#include "spanbicat/fixture.hpp"
#include "spanbicat/lemmas.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;
using nlohmann::json;

namespace {

struct Suite {
  std::shared_ptr<const BicatFragment> fragment;
  std::unique_ptr<Analyzer> an;
  std::unique_ptr<AdjointIndex> adj;
  LemmaPremises premises;
};

Suite prepare(std::shared_ptr<const BicatFragment> f) {
  Suite s{f, std::make_unique<Analyzer>(*f, 4), std::make_unique<AdjointIndex>(*f, 4), {}};
  s.premises = build_lemma_premises(*s.an, *s.adj, check_axiom1(*s.an).witnesses);
  return s;
}

std::vector<std::string> failing(const std::vector<Report>& reports) {
  std::vector<std::string> out;
  for (const Report& r : reports) {
    if (r.status != Status::pass) out.push_back(r.id);
  }
  return out;
}

}  // namespace

TEST_CASE("all lemma checkers pass on spans") {
  Suite s = prepare(span_fragment({1, 2}, 2));
  auto reports = check_lemma_suite(*s.an, *s.adj, s.premises, json::object(), {4, 25});
  REQUIRE(reports.size() == lemma_names().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].id);
    CHECK(reports[i].id == lemma_names()[i]);
    CHECK(reports[i].status == Status::pass);
    CHECK(reports[i].instances > 0);
  }
}

TEST_CASE("each injected premise trips only its own lemma") {
  const std::string c = "1>1:2:[0,0]/[0,0]", one = "1>1:1:[0]/[0]";
  const json dprime{{"source", c}, {"left", c}, {"right", one}, {"cell", "[0,1]"}};
  const std::vector<std::pair<std::string, json>> cases{
      {"implies-adjoint", {{"cell", c}, {"side", "right"}}},
      {"parts-are-adjoints", dprime},
      {"generics-are-units", {{"source", one}, {"left", c}, {"right", one}, {"cell", "[0]"}}},
      {"unit-implies-generic", {{"left", c}, {"right", c}, {"unit", "[0]"}, {"counit", "[0,0,0,0]"}}},
      {"composite-initial", {{"right_adjoint", c}, {"left_adjoint", one}}},
      {"composite-generic",
       {{"delta", {{"source", one}, {"left", c}, {"right", c}, {"cell", "[0]"}}},
        {"eta", {{"source", one}, {"left", one}, {"right", one}, {"cell", "[0]"}}}}},
      {"generics-are-whiskers",
       {{"delta", dprime}, {"units", {{{"left", one}, {"right", one}, {"unit", "[0]"}, {"counit", "[0]"}}}}}},
      {"generics-index-adjoints", dprime},
  };
  Suite s = prepare(span_fragment({1, 2}, 2));
  for (const auto& [lemma, premise] : cases) {
    CAPTURE(lemma);
    LemmaPremises p = s.premises;
    inject_premise(*s.fragment, p, lemma, premise);
    CHECK(failing(check_lemma_suite(*s.an, *s.adj, p, json::object(), {4, 25})) == std::vector<std::string>{lemma});
  }
}

TEST_CASE("malformed premises are refused") {
  Suite s = prepare(span_fragment({1}, 1));
  LemmaPremises p = s.premises;
  CHECK_THROWS_AS(inject_premise(*s.fragment, p, "no-such-lemma", json::object()), FixtureError);
  CHECK_THROWS_AS(inject_premise(*s.fragment, p, "implies-adjoint", {{"cell", "1>1:1:[0]/[0]"}, {"side", "up"}}),
                  FixtureError);
}

TEST_CASE("gate statuses are recorded on every lemma report") {
  Suite s = prepare(span_fragment({1}, 1));
  const json gates{{"axiom1", "pass"}};
  for (const Report& r : check_lemma_suite(*s.an, *s.adj, s.premises, gates)) CHECK(r.details.at("gates") == gates);
}
