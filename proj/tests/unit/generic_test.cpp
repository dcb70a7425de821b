#include "spanbicat/generic.hpp"

#include <doctest.h>

#include "oracles.hpp"
#include "spanbicat/mutants.hpp"
#include "spanbicat/span.hpp"

using namespace spanbicat;

TEST_CASE("generic classes out of a span are indexed by apex maps") {
  auto f = span_fragment({1, 2}, 2);
  Analyzer an(*f, 4);
  for (OneCell c : all_base_cells(*f)) {
    const std::size_t apex = to_span(*f, c).apex.size;
    for (ObjectId y : f->objects()) {
      const ElementsCategory& e = an.elements(c, y);
      CHECK(e.components().size() == oracle::power(y + 1, apex));
      for (std::size_t k = 0; k < e.components().size(); ++k) CHECK(e.canonical_initial(k).has_value());
    }
  }
}

TEST_CASE("factoring through the generic pastes back to the original") {
  auto f = span_fragment({1, 2}, 2);
  Analyzer an(*f, 4);
  std::size_t checked = 0;
  for (OneCell c : all_base_cells(*f)) {
    for (ObjectId y : f->objects()) {
      const ElementsCategory& e = an.elements(c, y);
      for (const Element& gamma : e.objects()) {
        GenericFactorization g = factor_through_generic(e, gamma);
        CHECK(e.apply(g.generic.cell, g.comparison) == gamma);
        CHECK(e.is_initial(*e.find(g.generic.cell)));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("three-ary generics factor the same way from either side") {
  auto f = span_fragment({1, 2}, 2);
  Analyzer an(*f, 4);
  std::size_t found = 0;
  for (OneCell c : all_base_cells(*f)) {
    for (ObjectId y1 : f->objects()) {
      for (ObjectId y2 : f->objects()) {
        auto g = three_ary_generics(an, c, y1, y2);
        CHECK(g.left_first == g.right_first);
        found += g.left_first.size();
      }
    }
  }
  CHECK(found > 0);
  OneCell one = f->identity(ObjectId{0});
  auto unitor = require(vcomp_chain(*f, {f->left_unitor_inverse(one),
                                         whisker_left(*f, one, require(f->left_unitor_inverse(one), "unitor"))}),
                        "triple unitor");
  ThreeAryResult r = is_3ary_generic(an, {one, one, one, unitor});
  CHECK(r.left_first);
  CHECK(r.right_first);
}

TEST_CASE("identities are initial generics") {
  auto f = span_fragment({1, 2}, 2);
  Analyzer an(*f);
  for (ObjectId x : f->objects()) CHECK(check_identity_initial(an, x).status == Status::pass);
}

TEST_CASE("a component with two idempotent-related cells has no initial object") {
  auto b = idempotent_component_fragment();
  Analyzer an(*b);
  Report r = is_generic_bicategory(an);
  REQUIRE(r.status == Status::fail);
  const auto& w = r.witnesses.at(0);
  CHECK(w.at("cell") == "c");
  CHECK(w.at("through") == "M");
  CHECK(w.at("component").size() == 2);
  OneCell c = one_cell_named(*b, "c");
  ObjectId m = b->target(one_cell_named(*b, "u"));
  const ElementsCategory& e = an.elements(c, m);
  CHECK_THROWS_AS(factor_through_generic(e, e.objects().front()), NoInitialObject);
}
