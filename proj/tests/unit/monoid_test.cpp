#include <doctest.h>

#include <set>

#include "spanbicat/axioms.hpp"
#include "spanbicat/coherence.hpp"
#include "spanbicat/generic.hpp"
#include "spanbicat/table_fragment.hpp"

using namespace spanbicat;

TEST_CASE("truncated addition is a monoid with sums capped at the top") {
  MonoidPresentation m = truncated_addition_monoid(2);
  REQUIRE(m.elements.size() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) CHECK(m.mult[a][b] == std::min<std::size_t>(a + b, 2));
  }
  CHECK_NOTHROW(m.validate());
}

TEST_CASE("an invalid table is refused") {
  MonoidPresentation m = truncated_addition_monoid(2);
  m.mult[0][1] = 2;
  CHECK_THROWS(m.validate());
}

TEST_CASE("truncated addition is generic but has no initial generic at 1 and 2") {
  auto b = monoid_bicat(truncated_addition_monoid(2));
  CHECK(check_coherence(*b).status == Status::pass);
  Analyzer an(*b);
  CHECK(is_generic_bicategory(an).status == Status::pass);
  Axiom1Result a1 = check_axiom1(an);
  CHECK(a1.report.status == Status::fail);
  std::vector<std::string> cells;
  for (const auto& w : a1.report.witnesses) cells.push_back(w.at("cell").get<std::string>());
  CHECK(cells == std::vector<std::string>{"1", "2"});
  // c = 2 factors as a + b for every pair with a + b >= 2, and no two of
  // these are related, since the homs are discrete.
  const auto& w2 = a1.report.witnesses.at(1);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : w2.at("factorizations")) pairs.emplace(e.at("left"), e.at("right"));
  std::set<std::pair<std::string, std::string>> expected;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (a + b >= 2) expected.emplace(std::to_string(a), std::to_string(b));
    }
  }
  CHECK(pairs == expected);
  CHECK(w2.at("factorizations").size() == expected.size());
}

TEST_CASE("a group satisfies the first axiom") {
  auto b = monoid_bicat(cyclic_group(3));
  Analyzer an(*b);
  CHECK(is_generic_bicategory(an).status == Status::pass);
  CHECK(check_axiom1(an).report.status == Status::pass);
}
