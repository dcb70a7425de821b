#include "spanbicat/reconstruct.hpp"

#include <doctest.h>

#include "oracles.hpp"
#include "spanbicat/fixture.hpp"
#include "spanbicat/mutants.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;

namespace {

const Report* find(const RoundtripResult& r, const std::string& id) {
  for (const Report& rep : r.reports) {
    if (rep.id == id) return &rep;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("spans over a single point reconstruct the terminal category") {
  RoundtripResult r = roundtrip_span(*span_fragment({1}, 1));
  CHECK(r.passed());
  REQUIRE(r.category);
  CHECK(r.category->objects.size() == 1);
  CHECK(r.category->morphisms.size() == 1);
}

TEST_CASE("E for spans over {1, 2} has n^m maps from m to n") {
  auto f = span_fragment({1, 2}, 2);
  RoundtripResult r = roundtrip_span(*f);
  REQUIRE(r.passed());
  REQUIRE(r.category);
  const auto& p = *r.category;
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t n = 0; n < 2; ++n) {
      std::size_t count = 0;
      for (const auto& mor : p.morphisms) count += mor.src == m && mor.tgt == n;
      CHECK(count == oracle::power(n + 1, m + 1));
    }
  }
}

TEST_CASE("the poset 0 <= 1 comes back as itself") {
  FixtureDocument doc = load_fixture_file(std::string(SPANBICAT_FIXTURE_DIR) + "/arrow-poset.json");
  RoundtripResult r = reconstruct_fragment(*build_fixture(doc).fragment);
  CHECK(r.passed());
  REQUIRE(r.category);
  CHECK(r.category->morphisms.size() == 3);
}

TEST_CASE("dropping an isomorphism class breaks essential surjectivity") {
  std::shared_ptr<const BicatFragment> f = span_fragment({1, 2}, 2);
  auto dropped = std::make_shared<DroppedOneCells>(f, std::vector<OneCell>{one_cell_named(*f, "1>1:2:[0,0]/[0,0]")});
  RoundtripResult r = reconstruct_fragment(*dropped);
  CHECK_FALSE(r.passed());
  CHECK(find(r, "reconstruction-gates")->status == Status::pass);
  bool surjectivity = false;
  for (const Report& rep : r.reports) {
    if (rep.id != "hom-equivalence" || rep.status != Status::fail) continue;
    for (const auto& w : rep.witnesses) surjectivity = surjectivity || w.at("check") == "essentially-surjective";
  }
  CHECK(surjectivity);
}

TEST_CASE("a fragment that is not generic stops at the gates") {
  RoundtripResult r = reconstruct_fragment(*idempotent_component_fragment());
  CHECK_FALSE(r.passed());
  const Report* gates = find(r, "reconstruction-gates");
  REQUIRE(gates);
  CHECK(gates->status == Status::fail);
  CHECK_FALSE(r.category.has_value());
}
